use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{GroupError, Word};

/// Finitely presented group `<x_0, ..., x_{n-1} | r_1, ..., r_m>`.
///
/// Relators are stored cyclically reduced, with trivial relators dropped and
/// duplicates up to cyclic rotation and inversion removed (first occurrence
/// wins).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PresentationRepr", into = "PresentationRepr")]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<Word>,
}

#[derive(Serialize, Deserialize)]
struct PresentationRepr {
    num_generators: usize,
    relators: Vec<Word>,
}

impl TryFrom<PresentationRepr> for Presentation {
    type Error = GroupError;

    fn try_from(r: PresentationRepr) -> Result<Self, GroupError> {
        Presentation::new(r.num_generators, r.relators)
    }
}

impl From<Presentation> for PresentationRepr {
    fn from(p: Presentation) -> Self {
        PresentationRepr {
            num_generators: p.num_generators(),
            relators: p.relators,
        }
    }
}

/// `a, b, ..., z`, then `x26, x27, ...`.
pub fn default_names(n: usize) -> Vec<String> {
    (0..n)
        .map(|i| {
            if i < 26 {
                ((b'a' + i as u8) as char).to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect()
}

impl Presentation {
    pub fn new(num_generators: usize, relators: Vec<Word>) -> Result<Self, GroupError> {
        Self::with_names(default_names(num_generators), relators)
    }

    pub fn with_names(names: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        if names.is_empty() {
            return Err(GroupError::NoGenerators);
        }
        let mut seen = HashSet::new();
        if let Some(dup) = names.iter().find(|n| !seen.insert(n.as_str())) {
            return Err(GroupError::Parse {
                pos: 0,
                msg: format!("duplicate generator '{dup}'"),
            });
        }
        let mut p = Presentation {
            names,
            relators: Vec::new(),
        };
        for r in relators {
            p.push_relator(r)?;
        }
        Ok(p)
    }

    /// Adds a relator unless it is trivial or a rotation/inverse of one
    /// already present. Returns whether it was added.
    pub fn push_relator(&mut self, r: Word) -> Result<bool, GroupError> {
        if let Some(g) = r.max_generator().filter(|&g| g >= self.num_generators()) {
            return Err(GroupError::GeneratorOutOfRange {
                gen: g,
                num_generators: self.num_generators(),
            });
        }
        let r = r.cyclically_reduce();
        if r.is_identity() {
            return Ok(false);
        }
        let key = r.cyclic_key();
        if self.relators.iter().any(|s| s.cyclic_key() == key) {
            return Ok(false);
        }
        self.relators.push(r);
        Ok(true)
    }

    pub fn num_generators(&self) -> usize {
        self.names.len()
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// One row per relator, one column per generator.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|r| r.exponent_sums(self.num_generators()))
            .collect()
    }

    /// Parses `gens: a b ; rels: a^6 b^6, a^4 b^2` (or the JSON form).
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        if text.trim_start().starts_with('{') {
            return serde_json::from_str(text).map_err(|e| GroupError::Parse {
                pos: e.column().saturating_sub(1),
                msg: format!("bad presentation JSON: {e}"),
            });
        }
        parse_text(text)
    }
}

impl FromStr for Presentation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        Presentation::parse(s)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gens: {} ; rels:", self.names.join(" "))?;
        for (i, r) in self.relators.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{}", r.display_with(&self.names))?;
        }
        Ok(())
    }
}

fn parse_text(text: &str) -> Result<Presentation, GroupError> {
    let err = |pos: usize, msg: &str| GroupError::Parse {
        pos,
        msg: msg.to_string(),
    };
    let semi = text
        .find(';')
        .ok_or_else(|| err(text.len(), "expected ';' between gens and rels"))?;
    let (gens_part, rels_part) = (&text[..semi], &text[semi + 1..]);

    let g = gens_part.trim_start();
    let gens_off = gens_part.len() - g.len();
    let g = g
        .strip_prefix("gens:")
        .ok_or_else(|| err(gens_off, "expected 'gens:'"))?;
    let names: Vec<String> = g
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect();
    if let Some(bad) = names.iter().find(|n| !is_ident(n)) {
        return Err(err(gens_off, &format!("bad generator name '{bad}'")));
    }

    let r = rels_part.trim_start();
    let rels_off = semi + 1 + rels_part.len() - r.len();
    let r = r
        .strip_prefix("rels:")
        .ok_or_else(|| err(rels_off, "expected 'rels:'"))?;
    let mut offset = rels_off + "rels:".len();
    let mut relators = Vec::new();
    if !r.trim().is_empty() {
        for chunk in r.split(',') {
            relators.push(parse_word(chunk, offset, &names)?);
            offset += chunk.len() + 1;
        }
    }
    Presentation::with_names(names, relators)
}

fn is_ident(s: &str) -> bool {
    let mut cs = s.chars();
    matches!(cs.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && cs.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn parse_word(src: &str, base: usize, names: &[String]) -> Result<Word, GroupError> {
    let bytes = src.as_bytes();
    let mut i = 0;
    let mut letters = Vec::new();
    let err = |i: usize, msg: String| GroupError::Parse { pos: base + i, msg };
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c == '1' && letters.is_empty() && src[i + 1..].trim().is_empty() {
            // the identity written as "1"
            i += 1;
            continue;
        }
        if !(c.is_ascii_alphabetic() || c == '_') {
            return Err(err(i, format!("unexpected character '{c}'")));
        }
        let start = i;
        // identifiers may end in digits, as in x26
        while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
            i += 1;
        }
        let name = &src[start..i];
        let gen = names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| err(start, format!("unknown generator '{name}'")))?;
        let mut exp = 1i64;
        if i < bytes.len() && bytes[i] == b'^' {
            i += 1;
            let estart = i;
            if i < bytes.len() && (bytes[i] == b'-' || bytes[i] == b'+') {
                i += 1;
            }
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            exp = src[estart..i]
                .parse()
                .map_err(|_| err(estart, "expected an integer exponent".to_string()))?;
        }
        letters.push((gen, exp));
    }
    Ok(Word::free_reduce(letters))
}
