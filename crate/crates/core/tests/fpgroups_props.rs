mod common;

use common::snf_oracle;
use knotting::fpgroups::{
    abelianize, smith_normal_form, todd_coxeter, Enumeration, IntMatrix, Permutation, Presentation, Word,
};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn arb_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_dim, 1..=max_dim)
        .prop_flat_map(move |(r, c)| proptest::collection::vec(proptest::collection::vec(-bound..=bound, c), r))
}

fn check_snf_witness(rows: &[Vec<i64>]) -> Result<Vec<BigInt>, TestCaseError> {
    let m = IntMatrix::from_i64_rows(rows).unwrap();
    let snf = smith_normal_form(&m);
    let d = IntMatrix::diagonal(m.rows(), m.cols(), &snf.divisors);
    prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), d);
    prop_assert_eq!(snf.u.determinant().abs(), BigInt::from(1));
    prop_assert_eq!(snf.v.determinant().abs(), BigInt::from(1));
    prop_assert_eq!(snf.divisors.len(), m.rows().min(m.cols()));
    for w in snf.divisors.windows(2) {
        prop_assert!(!w[0].is_negative());
        if w[0].is_zero() {
            prop_assert!(w[1].is_zero());
        } else {
            prop_assert!((&w[1] % &w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
        }
    }
    Ok(snf.divisors)
}

fn arb_word(gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((0..gens, prop_oneof![-3i64..=-1, 1i64..=3]), 0..max_len).prop_map(Word::free_reduce)
}

/// Presentations with bounded generator orders, so that many are finite.
fn arb_finite_leaning() -> impl Strategy<Value = Presentation> {
    (2i64..6, 2i64..6, proptest::collection::vec(arb_word(2, 6), 1..3)).prop_map(|(p, q, extra)| {
        let mut rels = vec![Word::power(0, p), Word::power(1, q)];
        rels.extend(extra);
        Presentation::new(2, rels).unwrap()
    })
}

fn trace(table: &knotting::fpgroups::CosetTable, start: usize, w: &Word) -> usize {
    let mut c = start;
    for &(g, e) in w.letters() {
        for _ in 0..e.unsigned_abs() {
            c = table.act(c, g, e < 0);
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 400, ..ProptestConfig::default() })]

    #[test]
    fn snf_witness_identity(rows in arb_matrix(8, 50)) {
        check_snf_witness(&rows)?;
    }

    #[test]
    fn snf_matches_determinantal_divisors(rows in arb_matrix(4, 12)) {
        let divisors = check_snf_witness(&rows)?;
        let expected: Vec<BigInt> = snf_oracle(&rows).into_iter().map(BigInt::from).collect();
        prop_assert_eq!(divisors, expected);
    }

    #[test]
    fn low_rank_matrices(a in proptest::collection::vec(-9i64..=9, 1..6), b in proptest::collection::vec(-9i64..=9, 1..6)) {
        // outer product has rank at most one
        let rows: Vec<Vec<i64>> = a.iter().map(|x| b.iter().map(|y| x * y).collect()).collect();
        let d = check_snf_witness(&rows)?;
        prop_assert!(d.iter().skip(1).all(Zero::is_zero));
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 120, ..ProptestConfig::default() })]

    #[test]
    fn coset_tables_are_sound(p in arb_finite_leaning()) {
        if let Enumeration::Complete(table) = todd_coxeter(&p, 2000) {
            prop_assert!(table.is_sound_for(&p));
            for g in 0..p.num_generators() {
                prop_assert!(Permutation::new(table.generator_action(g)).is_ok());
            }
            for c in 0..table.size() {
                for r in p.relators() {
                    prop_assert_eq!(trace(&table, c, r), c);
                }
            }
            let ab = abelianize(&p);
            prop_assert_eq!(ab.free_rank, 0);
            let ab_order = ab.order().unwrap();
            prop_assert!((BigInt::from(table.size()) % ab_order).is_zero());
        }
    }

    #[test]
    fn enumeration_is_deterministic(p in arb_finite_leaning()) {
        prop_assert_eq!(todd_coxeter(&p, 500), todd_coxeter(&p, 500));
    }

    #[test]
    fn presentation_text_round_trip(rels in proptest::collection::vec(arb_word(3, 6), 0..4)) {
        let p = Presentation::new(3, rels).unwrap();
        prop_assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p.clone());
        let json = serde_json::to_string(&p).unwrap();
        prop_assert_eq!(Presentation::parse(&json).unwrap(), p);
    }

    #[test]
    fn cyclic_key_ignores_rotation_and_inversion(w in arb_word(3, 8), k in 0usize..8) {
        let w = w.cyclically_reduce();
        let letters = w.letters();
        prop_assume!(!letters.is_empty());
        let k = k % letters.len();
        let rotated = Word::free_reduce(letters[k..].iter().chain(&letters[..k]).copied()).cyclically_reduce();
        prop_assert_eq!(rotated.cyclic_key(), w.cyclic_key());
        prop_assert_eq!(w.inverse().cyclic_key(), w.cyclic_key());
        prop_assert!(w.concat(&w.inverse()).is_identity());
    }

    #[test]
    fn free_reduction_is_idempotent(w in arb_word(3, 10)) {
        prop_assert_eq!(Word::free_reduce(w.letters().iter().copied()), w.clone());
        for pair in w.letters().windows(2) {
            prop_assert_ne!(pair[0].0, pair[1].0);
        }
    }
}

#[test]
fn cyclic_groups_one_to_two_hundred() {
    for n in 1..200 {
        let p = Presentation::new(1, vec![Word::power(0, n)]).unwrap();
        assert_eq!(todd_coxeter(&p, 10_000).order(), Some(n as usize), "n = {n}");
    }
}

#[test]
fn known_snf() {
    let snf = smith_normal_form(&IntMatrix::from_i64_rows(&[vec![2, 4], vec![6, 8]]).unwrap());
    assert_eq!(snf.divisors, vec![BigInt::from(2), BigInt::from(4)]);
}

#[test]
fn known_orders() {
    let cases = [
        ("gens: a b ; rels: a^2, b^3, a b a b", 6),
        ("gens: a b ; rels: a^4, b^2 a^-2, b^-1 a b a", 8),
        ("gens: a b ; rels: a^2, b^3, a b a b a b a b a b", 60),
        ("gens: a b ; rels: a^2, b^3, a b a b a b a b", 24),
        ("gens: a b ; rels: a^3, b^3, a b a b", 12),
        ("gens: a b ; rels: a b a^-1 b^-1, a^4, b^6", 24),
        ("gens: a b c ; rels: a^2, b^2, c^2, a b a b, b c b c b c, a c a c", 12),
    ];
    for (text, n) in cases {
        let p = Presentation::parse(text).unwrap();
        assert_eq!(todd_coxeter(&p, 100_000).order(), Some(n), "{text}");
    }
}

#[test]
fn infinite_groups_overflow() {
    for text in [
        "gens: a ; rels:",
        "gens: a b ; rels: a^2, b^2",
        "gens: a b ; rels: a b a^-1 b^-1",
    ] {
        let p = Presentation::parse(text).unwrap();
        assert_eq!(
            todd_coxeter(&p, 300),
            Enumeration::Overflow { max_cosets: 300 },
            "{text}"
        );
    }
}
