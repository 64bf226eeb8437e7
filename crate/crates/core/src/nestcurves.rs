//! Combinatorics of maximal nest curves of degree `2k`.
//!
//! The real part of such a curve is `k` ovals `O_1 ⊂ O_2 ⊂ ... ⊂ O_k`. Their
//! complement in the real projective plane splits into a disc `R_0`, annuli
//! `R_1 .. R_{k-1}` and a Möbius band `R_k`. The complement of the complex
//! curve together with the real plane has fundamental group
//! `<a, b | a^m b^m>` with `m = 2k`; puncturing region `R_i` adds
//! `a^(m-i) b^i` and `b^(m-i) a^i`. Leaving one annulus unpunctured gives the
//! complement of the curve together with that annulus.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::fpgroups::{Presentation, Word};

const A: usize = 0;
const B: usize = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NestError {
    #[error("half-degree k = {0} is too small; a nest curve needs k >= 2")]
    DegreeTooSmall(i64),
    #[error("region index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("region R_{index} is not an annulus (annuli are R_1..R_{})", .k - 1)]
    InvalidMembrane { index: i64, k: i64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestCurve {
    k: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionTopology {
    Disc,
    Annulus,
    Moebius,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Region {
    pub index: u32,
    pub topology: RegionTopology,
}

/// Vertex counts on the two sides of the great circle dual to a puncture.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HemisphereSplit {
    pub side_a: u32,
    pub side_b: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NestInvariants {
    pub k: u32,
    pub degree: u32,
    pub homology_class: u32,
    pub genus: u64,
    pub expected_pi1_order: u32,
}

impl NestCurve {
    pub fn new(k: i64) -> Result<Self, NestError> {
        if k < 2 {
            return Err(NestError::DegreeTooSmall(k));
        }
        let k = u32::try_from(k).map_err(|_| NestError::DegreeTooSmall(k))?;
        Ok(NestCurve { k })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn degree(&self) -> u32 {
        2 * self.k
    }

    pub fn regions(&self) -> Vec<Region> {
        (0..=self.k)
            .map(|index| Region {
                index,
                topology: match index {
                    0 => RegionTopology::Disc,
                    i if i == self.k => RegionTopology::Moebius,
                    _ => RegionTopology::Annulus,
                },
            })
            .collect()
    }

    fn check_index(&self, i: i64) -> Result<u32, NestError> {
        if i < 0 || i > self.k as i64 {
            return Err(NestError::IndexOutOfRange {
                index: i,
                max: self.k as i64,
            });
        }
        Ok(i as u32)
    }

    /// `<a, b | a^(2k) b^(2k)>`.
    pub fn base_presentation(&self) -> Presentation {
        let m = self.degree() as i64;
        Presentation::new(2, vec![Word::free_reduce([(A, m), (B, m)])]).expect("two generators")
    }

    /// `{a^(2k-i) b^i, b^(2k-i) a^i}`, without rotation duplicates.
    pub fn puncture_relators(&self, i: i64) -> Result<Vec<Word>, NestError> {
        let i = self.check_index(i)? as i64;
        let m = self.degree() as i64;
        let first = Word::free_reduce([(A, m - i), (B, i)]);
        let second = Word::free_reduce([(B, m - i), (A, i)]);
        if second.is_rotation_of(&first) {
            Ok(vec![first])
        } else {
            Ok(vec![first, second])
        }
    }

    /// The same relations read off the hemisphere split of the genetic graph:
    /// `{a^i b^(m-i), a^(m-i) b^i}`.
    pub fn hemisphere_relators(&self, i: i64) -> Result<Vec<Word>, NestError> {
        let split = hemisphere_split(self.degree() as i64, i)?;
        let (s, t) = (split.side_a as i64, split.side_b as i64);
        let first = Word::free_reduce([(A, s), (B, t)]);
        let second = Word::free_reduce([(A, t), (B, s)]);
        if second.is_rotation_of(&first) {
            Ok(vec![first])
        } else {
            Ok(vec![first, second])
        }
    }

    /// Base presentation plus puncture relators of every region except the
    /// membrane annulus.
    pub fn complement_presentation(&self, membrane: i64) -> Result<Presentation, NestError> {
        if membrane < 1 || membrane > self.k as i64 - 1 {
            return Err(NestError::InvalidMembrane {
                index: membrane,
                k: self.k as i64,
            });
        }
        let mut p = self.base_presentation();
        for i in (0..=self.k as i64).filter(|&i| i != membrane) {
            for r in self.puncture_relators(i)? {
                p.push_relator(r).expect("relators use generators a and b");
            }
        }
        Ok(p)
    }

    /// Annulus indices usable as a membrane.
    pub fn membranes(&self) -> impl Iterator<Item = i64> {
        1..self.k as i64
    }

    pub fn invariants(&self) -> NestInvariants {
        let k = self.k;
        NestInvariants {
            k,
            degree: 2 * k,
            homology_class: 2 * k,
            genus: (k as u64 - 1) * (2 * k as u64 - 1),
            expected_pi1_order: 2 * k,
        }
    }
}

pub fn nest_regions(k: i64) -> Result<Vec<Region>, NestError> {
    Ok(NestCurve::new(k)?.regions())
}

pub fn base_presentation(k: i64) -> Result<Presentation, NestError> {
    Ok(NestCurve::new(k)?.base_presentation())
}

pub fn puncture_relators(k: i64, i: i64) -> Result<Vec<Word>, NestError> {
    NestCurve::new(k)?.puncture_relators(i)
}

pub fn complement_presentation(k: i64, membrane: i64) -> Result<Presentation, NestError> {
    NestCurve::new(k)?.complement_presentation(membrane)
}

pub fn nest_invariants(k: i64) -> Result<NestInvariants, NestError> {
    Ok(NestCurve::new(k)?.invariants())
}

/// Genus of a smooth plane curve of degree `d`.
pub fn plane_curve_genus(d: u64) -> u64 {
    (d - 1) * (d - 2) / 2
}

/// Splits the `m` vertices of the doubled genetic graph by the great circle
/// dual to a point of `R_i`: `i` on one side, `m - i` on the other.
pub fn hemisphere_split(m: i64, i: i64) -> Result<HemisphereSplit, NestError> {
    if m < 2 || m % 2 != 0 {
        return Err(NestError::DegreeTooSmall(m / 2));
    }
    if i < 0 || i > m / 2 {
        return Err(NestError::IndexOutOfRange { index: i, max: m / 2 });
    }
    Ok(HemisphereSplit {
        side_a: i as u32,
        side_b: (m - i) as u32,
    })
}
