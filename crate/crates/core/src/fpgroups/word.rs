use std::fmt;

use serde::{Deserialize, Serialize};

/// Element of a free group in run-length form: `(generator, exponent)` pairs
/// with nonzero exponents and no two adjacent pairs on the same generator.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Vec<(usize, i64)>", into = "Vec<(usize, i64)>")]
pub struct Word(Vec<(usize, i64)>);

impl From<Vec<(usize, i64)>> for Word {
    fn from(letters: Vec<(usize, i64)>) -> Self {
        Word::free_reduce(letters)
    }
}

impl From<Word> for Vec<(usize, i64)> {
    fn from(w: Word) -> Self {
        w.0
    }
}

/// Column index of a letter in a coset table: `2g` for `g`, `2g + 1` for `g^-1`.
pub(crate) fn letter_code(gen: usize, positive: bool) -> usize {
    2 * gen + usize::from(!positive)
}

pub(crate) fn inverse_code(code: usize) -> usize {
    code ^ 1
}

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn power(gen: usize, exp: i64) -> Self {
        Word::free_reduce([(gen, exp)])
    }

    /// Freely reduces an arbitrary sequence of `(generator, exponent)` pairs.
    pub fn free_reduce<I: IntoIterator<Item = (usize, i64)>>(letters: I) -> Self {
        let mut stack: Vec<(usize, i64)> = Vec::new();
        for (g, e) in letters {
            if e == 0 {
                continue;
            }
            match stack.last_mut() {
                Some((top, te)) if *top == g => {
                    *te += e;
                    if *te == 0 {
                        stack.pop();
                    }
                }
                _ => stack.push((g, e)),
            }
        }
        Word(stack)
    }

    pub fn letters(&self) -> &[(usize, i64)] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of letters counted with multiplicity.
    pub fn length(&self) -> u64 {
        self.0.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.0.iter().map(|&(g, _)| g).max()
    }

    pub fn inverse(&self) -> Self {
        Word(self.0.iter().rev().map(|&(g, e)| (g, -e)).collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        Word::free_reduce(self.0.iter().chain(other.0.iter()).copied())
    }

    /// Conjugates away matching ends so the word is cyclically reduced.
    pub fn cyclically_reduce(&self) -> Self {
        let mut v = self.0.clone();
        while v.len() >= 2 && v[0].0 == v[v.len() - 1].0 {
            let (_, last) = v.pop().unwrap();
            v[0].1 += last;
            if v[0].1 == 0 {
                v.remove(0);
            }
        }
        Word(v)
    }

    pub fn exponent_sums(&self, num_generators: usize) -> Vec<i64> {
        let mut sums = vec![0; num_generators];
        for &(g, e) in &self.0 {
            sums[g] += e;
        }
        sums
    }

    /// Letter-by-letter expansion into coset-table column codes.
    pub(crate) fn codes(&self) -> Vec<usize> {
        self.0
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n(letter_code(g, e > 0), e.unsigned_abs() as usize))
            .collect()
    }

    /// Key shared by all cyclic rotations of the word and of its inverse:
    /// the lexicographically least rotation of either code sequence.
    pub fn cyclic_key(&self) -> Vec<usize> {
        let w = self.cyclically_reduce();
        let fwd = w.codes();
        let inv = w.inverse().codes();
        [fwd, inv]
            .iter()
            .flat_map(|c| (0..c.len().max(1)).map(move |r| rotate(c, r)))
            .min()
            .unwrap_or_default()
    }

    /// True if `other` is a cyclic rotation of this word (letter-wise).
    pub fn is_rotation_of(&self, other: &Word) -> bool {
        let a = self.cyclically_reduce().codes();
        let b = other.cyclically_reduce().codes();
        a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|r| rotate(&a, r) == b))
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

fn rotate(c: &[usize], r: usize) -> Vec<usize> {
    c[r.min(c.len())..]
        .iter()
        .chain(&c[..r.min(c.len())])
        .copied()
        .collect()
}

struct WordDisplay<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_identity() {
            return f.write_str("1");
        }
        for (i, &(g, e)) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let name = self.names.get(g).cloned().unwrap_or_else(|| format!("x{g}"));
            if e == 1 {
                f.write_str(&name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: usize = 0;
    const B: usize = 1;

    #[test]
    fn free_reduce_examples() {
        assert_eq!(Word::free_reduce([(A, 1), (A, -1)]), Word::identity());
        assert_eq!(Word::free_reduce([(A, 1), (B, 1), (B, -1), (A, 1)]), Word::power(A, 2));
        let w = Word::free_reduce([(A, 2), (B, 3)]);
        assert_eq!(w.letters(), &[(A, 2), (B, 3)]);
    }

    #[test]
    fn nested_cancellation() {
        let w = Word::free_reduce([(A, 1), (B, 2), (A, 3), (A, -3), (B, -2), (A, -1)]);
        assert!(w.is_identity());
    }

    #[test]
    fn cyclic_reduction() {
        let w = Word::free_reduce([(A, 2), (B, 1), (A, 3)]);
        assert_eq!(w.cyclically_reduce().letters(), &[(A, 5), (B, 1)]);
        let w = Word::free_reduce([(A, 1), (B, 1), (A, -1)]);
        assert_eq!(w.cyclically_reduce(), Word::power(B, 1));
    }

    #[test]
    fn rotation_keys() {
        let ab = Word::free_reduce([(A, 3), (B, 3)]);
        let ba = Word::free_reduce([(B, 3), (A, 3)]);
        assert!(ab.is_rotation_of(&ba));
        assert_eq!(ab.cyclic_key(), ba.cyclic_key());
        let a4b2 = Word::free_reduce([(A, 4), (B, 2)]);
        let b4a2 = Word::free_reduce([(B, 4), (A, 2)]);
        assert!(!a4b2.is_rotation_of(&b4a2));
        assert_ne!(a4b2.cyclic_key(), b4a2.cyclic_key());
        // inversion shares the key
        assert_eq!(a4b2.cyclic_key(), a4b2.inverse().cyclic_key());
    }

    #[test]
    fn json_shape() {
        let w = Word::free_reduce([(A, 6), (B, 6)]);
        assert_eq!(serde_json::to_string(&w).unwrap(), "[[0,6],[1,6]]");
        let back: Word = serde_json::from_str("[[0,2],[0,-2],[1,1]]").unwrap();
        assert_eq!(back, Word::power(B, 1));
    }
}
