//! Independent reference implementations and random generators shared by the
//! integration tests. Nothing here calls the library's arithmetic.
#![allow(dead_code)]

use std::collections::BTreeMap;

use knotting::knots::KnotExpr;
use knotting::laurent::LaurentPoly;
use num_integer::Integer;
use proptest::prelude::*;
use rand::Rng;

/// Sparse Laurent polynomial over `i128`, zero coefficients never stored.
pub type OPoly = BTreeMap<i64, i128>;

pub fn opoly(min_exp: i64, coeffs: &[i128]) -> OPoly {
    let mut p = OPoly::new();
    for (i, &c) in coeffs.iter().enumerate() {
        if c != 0 {
            p.insert(min_exp + i as i64, c);
        }
    }
    p
}

pub fn to_oracle(p: &LaurentPoly) -> OPoly {
    p.terms()
        .map(|(e, c)| (e, i128::try_from(c).expect("coefficient fits in i128")))
        .filter(|&(_, c)| c != 0)
        .collect()
}

pub fn oadd(a: &OPoly, b: &OPoly) -> OPoly {
    let mut r = a.clone();
    for (&e, &c) in b {
        *r.entry(e).or_insert(0) += c;
    }
    r.retain(|_, c| *c != 0);
    r
}

/// Schoolbook convolution.
pub fn omul(a: &OPoly, b: &OPoly) -> OPoly {
    let mut r = OPoly::new();
    for (&ea, &ca) in a {
        for (&eb, &cb) in b {
            *r.entry(ea + eb).or_insert(0) += ca * cb;
        }
    }
    r.retain(|_, c| *c != 0);
    r
}

/// Evaluation at `t = 1` or `t = -1`.
pub fn oeval(p: &OPoly, at_minus_one: bool) -> i128 {
    p.iter()
        .map(|(&e, &c)| if at_minus_one && e.rem_euclid(2) == 1 { -c } else { c })
        .sum()
}

/// Centres `p` on `t^0` and fixes the sign so that `p(1) = 1`.
pub fn onormalize(p: &OPoly) -> OPoly {
    let lo = *p.keys().next().expect("nonzero");
    let hi = *p.keys().next_back().unwrap();
    assert_eq!((hi - lo) % 2, 0, "odd span");
    let mid = (hi + lo) / 2;
    let sign = oeval(p, false).signum();
    assert_eq!(oeval(p, false).abs(), 1);
    p.iter().map(|(&e, &c)| (e - mid, sign * c)).collect()
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i128)> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out.into_iter()
        .map(|p| {
            let inversions = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .filter(|&(i, j)| p[i] > p[j])
                .count();
            (p, if inversions % 2 == 0 { 1 } else { -1 })
        })
        .collect()
}

/// `det(V - t V^T)` by the Leibniz formula.
pub fn leibniz_seifert(v: &[Vec<i64>]) -> OPoly {
    let n = v.len();
    let entry = |i: usize, j: usize| opoly(0, &[v[i][j] as i128, -(v[j][i] as i128)]);
    let mut det = OPoly::new();
    for (perm, sign) in permutations(n) {
        let term = (0..n).fold(opoly(0, &[sign]), |acc, i| omul(&acc, &entry(i, perm[i])));
        det = oadd(&det, &term);
    }
    det
}

/// Torus knot polynomial from the numerical semigroup `<p, q>`:
/// `1 + (t - 1) * sum over gaps g of t^g`.
pub fn torus_gap_oracle(p: u64, q: u64) -> OPoly {
    let conductor = (p - 1) * (q - 1);
    let mut in_semigroup = vec![false; conductor as usize + 1];
    for a in 0..=conductor / p {
        for b in 0..=conductor / q {
            let s = a * p + b * q;
            if s <= conductor {
                in_semigroup[s as usize] = true;
            }
        }
    }
    let mut sum = OPoly::new();
    for g in 0..conductor {
        if !in_semigroup[g as usize] {
            sum.insert(g as i64, 1);
        }
    }
    onormalize(&oadd(&opoly(0, &[1]), &omul(&opoly(0, &[-1, 1]), &sum)))
}

pub fn trefoil_oracle() -> OPoly {
    onormalize(&leibniz_seifert(&[vec![-1, 1], vec![0, -1]]))
}

pub fn figure_eight_oracle() -> OPoly {
    onormalize(&leibniz_seifert(&[vec![1, 1], vec![0, -1]]))
}

/// Alexander polynomial of a knot expression computed leaf by leaf with the
/// oracles above.
pub fn knot_oracle(k: &KnotExpr) -> OPoly {
    use knotting::knots::CatalogKnot::*;
    match k {
        KnotExpr::Catalog(Unknot) => opoly(0, &[1]),
        KnotExpr::Catalog(Trefoil) => trefoil_oracle(),
        KnotExpr::Catalog(FigureEight) => figure_eight_oracle(),
        KnotExpr::Catalog(Torus(p, q)) => torus_gap_oracle(*p, *q),
        KnotExpr::Seifert(v) => onormalize(&leibniz_seifert(v.entries())),
        KnotExpr::ConnectedSum(a, b) => omul(&knot_oracle(a), &knot_oracle(b)),
    }
}

fn det_i128(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    (0..n)
        .map(|j| {
            let minor: Vec<Vec<i128>> = m[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, &x)| x)
                        .collect()
                })
                .collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * m[0][j] * det_i128(&minor)
        })
        .sum()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut with_last = subsets(n - 1, k - 1);
    for s in &mut with_last {
        s.push(n - 1);
    }
    let mut out = subsets(n - 1, k);
    out.extend(with_last);
    out
}

/// Invariant factors from determinantal divisors: `d_k` is the gcd of all
/// `k x k` minors and the `k`-th factor is `d_k / d_(k-1)`.
pub fn snf_oracle(m: &[Vec<i64>]) -> Vec<i128> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let r = rows.min(cols);
    let mut factors = Vec::with_capacity(r);
    let mut prev: i128 = 1;
    for k in 1..=r {
        let mut g: i128 = 0;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Vec<Vec<i128>> = rs
                    .iter()
                    .map(|&i| cs.iter().map(|&j| m[i][j] as i128).collect())
                    .collect();
                g = g.gcd(&det_i128(&minor));
            }
        }
        if g == 0 {
            factors.extend(std::iter::repeat_n(0, r - factors.len()));
            break;
        }
        factors.push(g / prev);
        prev = g;
    }
    factors
}

/// Surgery by direct convolution over `(label, n)` classes.
pub fn surgery_oracle(sw: &[(String, i64, i128)], delta: &OPoly) -> BTreeMap<(String, i64), i128> {
    let mut out: BTreeMap<(String, i64), i128> = BTreeMap::new();
    for (base, n, c) in sw {
        for (&j, &d) in delta {
            *out.entry((base.clone(), n + j)).or_insert(0) += c * d;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

pub fn coprime_pairs(max: u64) -> Vec<(u64, u64)> {
    let mut v = Vec::new();
    for p in 2..=max {
        for q in p + 1..=max {
            if p.gcd(&q) == 1 {
                v.push((p, q));
            }
        }
    }
    v
}

pub fn random_leaf<R: Rng>(rng: &mut R) -> KnotExpr {
    match rng.gen_range(0..4) {
        0 => KnotExpr::unknot(),
        1 => KnotExpr::trefoil(),
        2 => KnotExpr::figure_eight(),
        _ => {
            let pairs = coprime_pairs(7);
            let (p, q) = pairs[rng.gen_range(0..pairs.len())];
            KnotExpr::torus(p, q).unwrap()
        }
    }
}

/// Random binary sum tree with at most `depth` levels.
pub fn random_knot<R: Rng>(rng: &mut R, depth: u32) -> KnotExpr {
    if depth == 0 || rng.gen_bool(0.3) {
        random_leaf(rng)
    } else {
        KnotExpr::connected_sum(random_knot(rng, depth - 1), random_knot(rng, depth - 1))
    }
}

pub fn arb_leaf() -> impl Strategy<Value = KnotExpr> {
    let torus = proptest::sample::select(coprime_pairs(7)).prop_map(|(p, q)| KnotExpr::torus(p, q).unwrap());
    prop_oneof![
        Just(KnotExpr::unknot()),
        Just(KnotExpr::trefoil()),
        Just(KnotExpr::figure_eight()),
        torus,
    ]
}

pub fn arb_knot() -> impl Strategy<Value = KnotExpr> {
    arb_leaf().prop_recursive(4, 12, 2, |inner| {
        (inner.clone(), inner).prop_map(|(a, b)| KnotExpr::connected_sum(a, b))
    })
}

pub fn random_sw<R: Rng>(rng: &mut R) -> Vec<(String, i64, i128)> {
    let labels = ["beta", "-beta", "gamma", "-gamma", "delta"];
    let len = rng.gen_range(1..8);
    (0..len)
        .map(|_| {
            let label = labels[rng.gen_range(0..labels.len())].to_string();
            let c = loop {
                let c = rng.gen_range(-5i128..=5);
                if c != 0 {
                    break c;
                }
            };
            (label, rng.gen_range(-6..=6), c)
        })
        .collect()
}

pub fn arb_sw() -> impl Strategy<Value = Vec<(String, i64, i128)>> {
    let label = proptest::sample::select(vec!["beta", "-beta", "gamma", "delta"]).prop_map(String::from);
    let coeff = prop_oneof![-5i128..=-1, 1i128..=5];
    proptest::collection::vec((label, -6i64..=6, coeff), 1..8)
}

pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> Vec<Vec<i64>> {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    (0..r)
        .map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect()
}

pub fn to_sw(sw: &[(String, i64, i128)]) -> knotting::swcalc::SwPolynomial {
    knotting::swcalc::SwPolynomial::from_terms(sw.iter().map(|(b, n, c)| (b.clone(), *n, num_bigint::BigInt::from(*c))))
}

pub fn sw_map(sw: &knotting::swcalc::SwPolynomial) -> BTreeMap<(String, i64), i128> {
    sw.terms()
        .map(|(k, c)| ((k.base.clone(), k.n), i128::try_from(c).unwrap()))
        .collect()
}
