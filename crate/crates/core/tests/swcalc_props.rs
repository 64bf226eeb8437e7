mod common;

use common::{arb_knot, arb_leaf, arb_sw, knot_oracle, surgery_oracle, sw_map, to_sw};
use knotting::knots::{alexander, KnotExpr};
use knotting::laurent::LaurentPoly;
use knotting::swcalc::{
    annulus_rim_surgery_sw, basic_classes, check_degree_bound, distinguish, fs_surgery_sw, trefoil_family,
    verify_trefoil_nonvanishing, SwError, SwPolynomial,
};
use proptest::prelude::*;

fn doubled(k: &KnotExpr) -> KnotExpr {
    KnotExpr::connected_sum(k.clone(), k.clone())
}

/// Profiles symmetric in `n` for every label.
fn arb_symmetric_sw() -> impl Strategy<Value = Vec<(String, i64, i128)>> {
    arb_sw().prop_map(|terms| {
        terms
            .into_iter()
            .flat_map(|(b, n, c)| {
                if n == 0 {
                    vec![(b, 0, 2 * c)]
                } else {
                    vec![(b.clone(), n, c), (b, -n, c)]
                }
            })
            .collect()
    })
}

proptest! {
    #[test]
    fn surgery_matches_convolution(sw in arb_sw(), k in arb_knot()) {
        let delta = alexander(&k);
        let got = fs_surgery_sw(&to_sw(&sw), &delta).unwrap();
        prop_assert_eq!(sw_map(&got), surgery_oracle(&sw, &knot_oracle(&k)));
    }

    #[test]
    fn surgery_is_additive(sw in arb_sw(), a in arb_leaf(), b in arb_leaf()) {
        let sw = to_sw(&sw);
        let (da, db) = (alexander(&a), alexander(&b));
        let twice = fs_surgery_sw(&fs_surgery_sw(&sw, &da).unwrap(), &db).unwrap();
        let once = fs_surgery_sw(&sw, &(&da * &db)).unwrap();
        prop_assert_eq!(&twice, &once);
        let via_sum = fs_surgery_sw(&sw, &alexander(&KnotExpr::connected_sum(a, b))).unwrap();
        prop_assert_eq!(twice, via_sum);
    }

    #[test]
    fn unknot_is_neutral(sw in arb_sw()) {
        let sw = to_sw(&sw);
        prop_assert_eq!(annulus_rim_surgery_sw(&sw, &KnotExpr::unknot()), sw.clone());
        prop_assert_eq!(fs_surgery_sw(&sw, &LaurentPoly::one()).unwrap(), sw);
    }

    #[test]
    fn offsets_respect_degree_bound(sw in arb_sw(), k in arb_knot()) {
        let before = to_sw(&sw);
        let after = annulus_rim_surgery_sw(&before, &k);
        let bound = alexander(&doubled(&k)).degree().unwrap();
        prop_assert_eq!(bound, 2 * alexander(&k).degree().unwrap());
        prop_assert!(check_degree_bound(&before, &after, bound).is_ok());
        // independent restatement over the raw terms
        for ((base, n), _) in sw_map(&after) {
            prop_assert!(sw.iter().any(|(b, n0, _)| *b == base && (n - n0).unsigned_abs() <= bound));
        }
    }

    #[test]
    fn symmetric_profiles_stay_symmetric(sw in arb_symmetric_sw(), k in arb_knot()) {
        let before = to_sw(&sw);
        let after = annulus_rim_surgery_sw(&before, &k);
        for label in after.base_labels() {
            let profile = after.profile(label);
            prop_assert!(profile.is_zero() || profile.is_symmetric(), "{}: {}", label, profile);
        }
    }

    #[test]
    fn json_round_trip(sw in arb_sw()) {
        let sw = to_sw(&sw);
        let text = serde_json::to_string(&sw).unwrap();
        prop_assert_eq!(serde_json::from_str::<SwPolynomial>(&text).unwrap(), sw);
    }
}

#[test]
fn trefoil_term_counts_strictly_increase() {
    let counts = verify_trefoil_nonvanishing(10).unwrap();
    assert_eq!(counts, (1..=10).map(|i| 4 * i + 1).collect::<Vec<_>>());
    assert!(counts.windows(2).all(|w| w[0] < w[1]));
    // direct expansion by repeated schoolbook multiplication
    let t = common::opoly(-1, &[1, -1, 1]);
    let mut power = common::opoly(0, &[1]);
    for i in 1..=10i64 {
        power = common::omul(&common::omul(&power, &t), &t);
        assert_eq!(power.len() as i64, 4 * i + 1);
        assert!((-2 * i..=2 * i).all(|e| power.contains_key(&e)));
    }
}

#[test]
fn fixture_counts() {
    let fixture = SwPolynomial::two_class_fixture();
    let report = distinguish(&fixture, &trefoil_family(10)).unwrap();
    assert_eq!(report.counts, (1..=10).map(|i| 2 * (4 * i + 1)).collect::<Vec<_>>());
    assert_eq!(report.counts[0], 10);
    assert_eq!(report.counts[9], 82);
    assert!(report.pairwise_distinct);
    assert!(!report.citations.is_empty());
}

#[test]
fn report_order_follows_input_order() {
    let fixture = SwPolynomial::two_class_fixture();
    let mut family = trefoil_family(6);
    family.reverse();
    let report = distinguish(&fixture, &family).unwrap();
    assert_eq!(report.counts, vec![50, 42, 34, 26, 18, 10]);
}

#[test]
fn errors() {
    assert_eq!(
        distinguish(&SwPolynomial::default(), &trefoil_family(2)),
        Err(SwError::EmptySw)
    );
    let raw = LaurentPoly::from_i64s(0, &[1, -1, 1]);
    assert!(matches!(
        fs_surgery_sw(&SwPolynomial::two_class_fixture(), &raw),
        Err(SwError::NotNormalized(_))
    ));
    let before = SwPolynomial::two_class_fixture();
    let far = to_sw(&[("beta".into(), 7, 1)]);
    assert!(matches!(
        check_degree_bound(&before, &far, 6),
        Err(SwError::DegreeBoundViolated { .. })
    ));
    assert!(check_degree_bound(&before, &far, 7).is_ok());
    let other_label = to_sw(&[("gamma".into(), 0, 1)]);
    assert!(check_degree_bound(&before, &other_label, 100).is_err());
}

#[test]
fn figure_eight_surgery_classes() {
    // Δ_{4_1}^2 = t^2 - 6t + 11 - 6t^-1 + t^-2, five classes per base label
    let after = annulus_rim_surgery_sw(&SwPolynomial::two_class_fixture(), &KnotExpr::figure_eight());
    assert_eq!(basic_classes(&after).len(), 10);
    assert_eq!(after.coeff("beta", 0), 11.into());
    assert_eq!(after.coeff("-beta", -1), (-6).into());
}
