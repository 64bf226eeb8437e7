//! Knot catalog, connected sums and Alexander polynomials.
//!
//! Every knot expression evaluates to its Alexander polynomial in symmetric
//! normal form (palindromic about `t^0`, value 1 at `t = 1`). Leaves come from
//! either a Seifert matrix, via `det(V - t V^T)`, or the torus-knot quotient
//! formula; connected sums multiply.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::laurent::LaurentPoly;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KnotError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid knot: {0}")]
    InvalidKnot(String),
    #[error("torus({p},{q}) is not a knot: gcd({p},{q}) != 1")]
    NonCoprime { p: u64, q: u64 },
}

/// Square integer matrix whose antisymmetrization `V - V^T` is unimodular.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct SeifertMatrix {
    entries: Vec<Vec<i64>>,
}

impl SeifertMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self, KnotError> {
        let n = entries.len();
        if let Some(row) = entries.iter().find(|r| r.len() != n) {
            return Err(KnotError::InvalidKnot(format!(
                "Seifert matrix must be square: {n} rows but a row of length {}",
                row.len()
            )));
        }
        let skew: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| LaurentPoly::from(entries[i][j] - entries[j][i]))
                    .collect()
            })
            .collect();
        let det = poly_determinant(skew);
        if !(det.is_one() || (-&det).is_one()) {
            return Err(KnotError::InvalidKnot(format!(
                "det(V - V^T) = {det}, expected +1 or -1"
            )));
        }
        Ok(SeifertMatrix { entries })
    }

    pub fn trefoil() -> Self {
        SeifertMatrix {
            entries: vec![vec![-1, 1], vec![0, -1]],
        }
    }

    pub fn figure_eight() -> Self {
        SeifertMatrix {
            entries: vec![vec![1, 1], vec![0, -1]],
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    /// `det(V - t V^T)` before normalization.
    pub fn raw_alexander(&self) -> LaurentPoly {
        let n = self.size();
        let m: Vec<Vec<LaurentPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| LaurentPoly::from_i64s(0, &[self.entries[i][j], -self.entries[j][i]]))
                    .collect()
            })
            .collect();
        poly_determinant(m)
    }
}

impl<'de> Deserialize<'de> for SeifertMatrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let entries = Vec::<Vec<i64>>::deserialize(d)?;
        SeifertMatrix::new(entries).map_err(serde::de::Error::custom)
    }
}

/// Exact division in `Z[t, t^-1]`; `None` when the quotient is not integral.
pub(crate) fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    // Both shifted to ordinary polynomials with nonzero constant term.
    let mut rem: Vec<BigInt> = a.coeffs().to_vec();
    let den = b.coeffs();
    let db = den.len() - 1;
    if rem.len() < den.len() {
        return None;
    }
    let lead = &den[db];
    let mut quot = vec![BigInt::zero(); rem.len() - db];
    for k in (0..quot.len()).rev() {
        let top = &rem[k + db];
        if top.is_zero() {
            continue;
        }
        let (q, r) = top.div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (j, d) in den.iter().enumerate() {
            rem[k + j] -= &q * d;
        }
        quot[k] = q;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    Some(LaurentPoly::new(a.min_exp() - b.min_exp(), quot))
}

/// Fraction-free (Bareiss) determinant over `Z[t, t^-1]`.
pub(crate) fn poly_determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one();
    }
    let mut negate = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return LaurentPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = div_exact(&num, &prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CatalogKnot {
    Unknot,
    Trefoil,
    FigureEight,
    Torus(u64, u64),
}

impl fmt::Display for CatalogKnot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogKnot::Unknot => f.write_str("unknot"),
            CatalogKnot::Trefoil => f.write_str("trefoil"),
            CatalogKnot::FigureEight => f.write_str("figure_eight"),
            CatalogKnot::Torus(p, q) => write!(f, "torus({p},{q})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum KnotExpr {
    Catalog(CatalogKnot),
    Seifert(SeifertMatrix),
    ConnectedSum(Box<KnotExpr>, Box<KnotExpr>),
}

impl KnotExpr {
    pub fn unknot() -> Self {
        KnotExpr::Catalog(CatalogKnot::Unknot)
    }

    pub fn trefoil() -> Self {
        KnotExpr::Catalog(CatalogKnot::Trefoil)
    }

    pub fn figure_eight() -> Self {
        KnotExpr::Catalog(CatalogKnot::FigureEight)
    }

    pub fn torus(p: u64, q: u64) -> Result<Self, KnotError> {
        check_torus(p, q)?;
        Ok(KnotExpr::Catalog(CatalogKnot::Torus(p, q)))
    }

    pub fn connected_sum(left: KnotExpr, right: KnotExpr) -> Self {
        KnotExpr::ConnectedSum(Box::new(left), Box::new(right))
    }

    /// Left-associated connected sum of `n` copies; `n = 0` is the unknot.
    pub fn repeated_sum(&self, n: usize) -> Self {
        (1..n).fold(if n == 0 { KnotExpr::unknot() } else { self.clone() }, |acc, _| {
            KnotExpr::connected_sum(acc, self.clone())
        })
    }

    /// Leaves in left-to-right order.
    pub fn summands(&self) -> Vec<&KnotExpr> {
        match self {
            KnotExpr::ConnectedSum(l, r) => {
                let mut v = l.summands();
                v.extend(r.summands());
                v
            }
            leaf => vec![leaf],
        }
    }
}

impl fmt::Display for KnotExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KnotExpr::Catalog(c) => write!(f, "{c}"),
            KnotExpr::Seifert(v) => {
                write!(f, "seifert {}", serde_json::to_string(v.entries()).unwrap())
            }
            // The grammar has no parentheses; a right-nested sum re-parses
            // left-associated, which has the same Alexander polynomial.
            KnotExpr::ConnectedSum(l, r) => write!(f, "{l} # {r}"),
        }
    }
}

fn check_torus(p: u64, q: u64) -> Result<(), KnotError> {
    if p == 0 || q == 0 {
        return Err(KnotError::InvalidKnot(format!("torus({p},{q}) needs p, q >= 1")));
    }
    if p.gcd(&q) != 1 {
        return Err(KnotError::NonCoprime { p, q });
    }
    Ok(())
}

/// Parses `expr := atom ('#' atom)*` with atoms `unknot`, `trefoil`,
/// `figure_eight`, `torus(p,q)` and `seifert [[..],..]`.
pub fn knot_parse(text: &str) -> Result<KnotExpr, KnotError> {
    let mut p = Parser { src: text, pos: 0 };
    let mut expr = p.atom()?;
    loop {
        p.skip_ws();
        if p.eof() {
            return Ok(expr);
        }
        p.expect("#")?;
        let rhs = p.atom()?;
        expr = KnotExpr::connected_sum(expr, rhs);
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn eof(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, KnotError> {
        Err(KnotError::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn expect(&mut self, tok: &str) -> Result<(), KnotError> {
        self.skip_ws();
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            self.err(format!("expected '{tok}'"))
        }
    }

    fn ident(&mut self) -> Result<&str, KnotError> {
        self.skip_ws();
        let start = self.pos;
        let len = self
            .rest()
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(self.rest().len());
        if len == 0 {
            return self.err("expected a knot name");
        }
        self.pos += len;
        Ok(&self.src[start..start + len])
    }

    fn int(&mut self) -> Result<i64, KnotError> {
        self.skip_ws();
        let rest = self.rest();
        let sign = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(rest.len() - sign);
        if digits == 0 {
            return self.err("expected an integer");
        }
        let tok = &rest[..sign + digits];
        match tok.parse::<i64>() {
            Ok(v) => {
                self.pos += tok.len();
                Ok(v)
            }
            Err(_) => self.err(format!("integer '{tok}' out of range")),
        }
    }

    fn atom(&mut self) -> Result<KnotExpr, KnotError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?.to_string();
        match name.as_str() {
            "unknot" => Ok(KnotExpr::unknot()),
            "trefoil" => Ok(KnotExpr::trefoil()),
            "figure_eight" => Ok(KnotExpr::figure_eight()),
            "torus" => {
                self.expect("(")?;
                let p = self.int()?;
                self.expect(",")?;
                let q = self.int()?;
                self.expect(")")?;
                if p < 1 || q < 1 {
                    return Err(KnotError::InvalidKnot(format!("torus({p},{q}) needs p, q >= 1")));
                }
                KnotExpr::torus(p as u64, q as u64).map_err(|e| KnotError::InvalidKnot(e.to_string()))
            }
            "seifert" => {
                self.skip_ws();
                let mut stream = serde_json::Deserializer::from_str(self.rest()).into_iter::<Vec<Vec<i64>>>();
                match stream.next() {
                    Some(Ok(entries)) => {
                        self.pos += stream.byte_offset();
                        Ok(KnotExpr::Seifert(SeifertMatrix::new(entries)?))
                    }
                    Some(Err(e)) => Err(KnotError::Parse {
                        pos: self.pos + e.column().saturating_sub(1),
                        msg: format!("bad Seifert matrix JSON: {e}"),
                    }),
                    None => self.err("expected a JSON matrix after 'seifert'"),
                }
            }
            other => Err(KnotError::Parse {
                pos: start,
                msg: format!("unknown knot '{other}'"),
            }),
        }
    }
}

/// Normalized `det(V - t V^T)`.
pub fn seifert_alexander(v: &SeifertMatrix) -> LaurentPoly {
    v.raw_alexander()
        .normalize_sym()
        .expect("a valid Seifert matrix has a normalizable determinant")
}

/// `(t^pq - 1)(t - 1) / ((t^p - 1)(t^q - 1))`, normalized.
pub fn torus_alexander(p: u64, q: u64) -> Result<LaurentPoly, KnotError> {
    check_torus(p, q)?;
    let cyc = |n: u64| {
        LaurentPoly::new(0, {
            let mut c = vec![BigInt::zero(); n as usize + 1];
            c[0] = BigInt::from(-1);
            c[n as usize] = BigInt::one();
            c
        })
    };
    let num = &cyc(p * q) * &cyc(1);
    let den = &cyc(p) * &cyc(q);
    let quot = div_exact(&num, &den).expect("torus knot quotient is a polynomial");
    Ok(quot.normalize_sym().expect("torus knot polynomial is normalizable"))
}

pub fn catalog_alexander(knot: CatalogKnot) -> LaurentPoly {
    match knot {
        CatalogKnot::Unknot => LaurentPoly::one(),
        CatalogKnot::Trefoil => seifert_alexander(&SeifertMatrix::trefoil()),
        CatalogKnot::FigureEight => seifert_alexander(&SeifertMatrix::figure_eight()),
        CatalogKnot::Torus(p, q) => torus_alexander(p, q).expect("torus leaves are validated"),
    }
}

pub fn alexander(knot: &KnotExpr) -> LaurentPoly {
    match knot {
        KnotExpr::Catalog(c) => catalog_alexander(*c),
        KnotExpr::Seifert(v) => seifert_alexander(v),
        KnotExpr::ConnectedSum(l, r) => &alexander(l) * &alexander(r),
    }
}

/// `|Δ_K(-1)|`.
pub fn knot_determinant(knot: &KnotExpr) -> BigUint {
    alexander(knot).eval_at_minus_one().abs().to_biguint().unwrap()
}
