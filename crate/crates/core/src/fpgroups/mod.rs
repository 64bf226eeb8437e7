//! Finitely presented groups: abelianization through Smith normal form,
//! order certification through coset enumeration, and permutation
//! representations as non-abelianness witnesses.

mod coset;
mod perm;
mod presentation;
mod smith;
mod word;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use coset::{todd_coxeter, CosetTable, Enumeration};
pub use perm::Permutation;
pub use presentation::{default_names, Presentation};
pub use smith::{smith_normal_form, IntMatrix, SmithForm};
pub use word::Word;

use crate::json_int;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("generator index {gen} out of range for {num_generators} generators")]
    GeneratorOutOfRange { gen: usize, num_generators: usize },
    #[error("expected {expected} generator images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("generator images act on different numbers of points")]
    DegreeMismatch,
    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),
    #[error("matrix rows have different lengths")]
    RaggedMatrix,
}

/// `Z^free_rank x Z/d_1 x ... x Z/d_r` with `d_1 | ... | d_r` and `d_i >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    #[serde(with = "json_int::vec")]
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    /// Group order, or `None` when the free rank is positive.
    pub fn order(&self) -> Option<BigInt> {
        (self.free_rank == 0).then(|| self.torsion.iter().product())
    }

    /// True when the group is `Z/n` (for `n = 1`, the trivial group).
    pub fn is_cyclic_of_order(&self, n: u64) -> bool {
        self.free_rank == 0
            && match n {
                1 => self.torsion.is_empty(),
                _ => self.torsion == [BigInt::from(n)],
            }
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" x "))
        }
    }
}

pub fn abelianize(p: &Presentation) -> AbelianInvariants {
    let m = IntMatrix::from_i64_rows(&p.exponent_matrix()).expect("exponent matrix is rectangular");
    // with no relators the matrix is 0 x 0 and every generator is free
    let snf = smith_normal_form(&m);
    let nonzero = snf.divisors.iter().filter(|d| !d.is_zero()).count();
    AbelianInvariants {
        free_rank: p.num_generators() - nonzero,
        torsion: snf
            .divisors
            .into_iter()
            .filter(|d| !d.is_zero() && !d.is_one())
            .collect(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomomorphismCheck {
    pub valid: bool,
    pub image_abelian: bool,
}

/// Evaluates a word on generator images.
pub fn evaluate_word(w: &Word, images: &[Permutation]) -> Permutation {
    let n = images.first().map_or(0, Permutation::degree);
    w.letters()
        .iter()
        .fold(Permutation::identity(n), |acc, &(g, e)| acc.then(&images[g].pow(e)))
}

/// Checks that `generator i -> images[i]` defines a homomorphism to the
/// symmetric group, and whether its image is abelian.
pub fn verify_homomorphism(p: &Presentation, images: &[Permutation]) -> Result<HomomorphismCheck, GroupError> {
    if images.len() != p.num_generators() {
        return Err(GroupError::ArityMismatch {
            expected: p.num_generators(),
            got: images.len(),
        });
    }
    let n = images[0].degree();
    if images.iter().any(|g| g.degree() != n) {
        return Err(GroupError::DegreeMismatch);
    }
    let valid = p.relators().iter().all(|r| evaluate_word(r, images).is_identity());
    let image_abelian = images
        .iter()
        .enumerate()
        .all(|(i, x)| images[i + 1..].iter().all(|y| x.commutes_with(y)));
    Ok(HomomorphismCheck { valid, image_abelian })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CyclicVerdict {
    /// Certified isomorphic to `Z/n`.
    Holds,
    /// Certified not isomorphic to `Z/n`.
    Fails,
    /// Coset enumeration overflowed before the order could be certified.
    Inconclusive,
}

/// Decides whether `p` presents `Z/n`.
///
/// A group of order `n` whose abelianization is `Z/n` equals its
/// abelianization, hence is cyclic. Conversely `Z/n` abelianizes to itself,
/// so an abelianization other than `Z/n` refutes the claim without
/// enumeration.
pub fn is_cyclic_of_order(p: &Presentation, n: u64, max_cosets: usize) -> CyclicVerdict {
    if !abelianize(p).is_cyclic_of_order(n) {
        return CyclicVerdict::Fails;
    }
    match todd_coxeter(p, max_cosets).order() {
        Some(order) if order as u64 == n => CyclicVerdict::Holds,
        Some(_) => CyclicVerdict::Fails,
        None => CyclicVerdict::Inconclusive,
    }
}
