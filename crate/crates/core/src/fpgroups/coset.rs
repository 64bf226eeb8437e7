//! Todd-Coxeter coset enumeration over the trivial subgroup.
//!
//! HLT strategy: cosets are processed in order of definition, each relator is
//! scanned and filled from the current coset, and coincidences are resolved
//! with a union-find queue. The completed table is renumbered in
//! breadth-first order from coset 0, so the output is a function of the
//! presentation alone.

use serde::Serialize;

use super::word::inverse_code;
use super::Presentation;

const UNDEF: usize = usize::MAX;

/// Upper bound on total definitions, as a multiple of `max_cosets`. Keeps
/// enumerations of infinite groups from running forever when coincidences
/// hold the live count under the cap.
const DEFINITION_BUDGET: usize = 64;

/// Complete, standardized coset table. Column `2g` is the action of
/// generator `g`, column `2g + 1` that of its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CosetTable {
    num_generators: usize,
    rows: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Enumeration {
    Complete(CosetTable),
    /// The enumeration needed more than `max_cosets` live cosets (or ran out
    /// of its definition budget); the order is not certified.
    Overflow {
        max_cosets: usize,
    },
}

impl Enumeration {
    pub fn order(&self) -> Option<usize> {
        match self {
            Enumeration::Complete(t) => Some(t.size()),
            Enumeration::Overflow { .. } => None,
        }
    }

    pub fn table(&self) -> Option<&CosetTable> {
        match self {
            Enumeration::Complete(t) => Some(t),
            Enumeration::Overflow { .. } => None,
        }
    }
}

impl CosetTable {
    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    /// Image of coset `c` under generator `g` (or its inverse).
    pub fn act(&self, c: usize, gen: usize, inverse: bool) -> usize {
        self.rows[c][2 * gen + usize::from(inverse)]
    }

    /// The permutation of cosets induced by generator `g`.
    pub fn generator_action(&self, gen: usize) -> Vec<usize> {
        self.rows.iter().map(|r| r[2 * gen]).collect()
    }

    /// Checks closure, that each generator acts as a permutation with its
    /// inverse column as the inverse permutation, and that every relator
    /// traces back to its starting coset from every coset.
    pub fn is_sound_for(&self, p: &Presentation) -> bool {
        let n = self.size();
        if p.num_generators() != self.num_generators {
            return false;
        }
        if self
            .rows
            .iter()
            .any(|r| r.len() != 2 * self.num_generators || r.iter().any(|&x| x >= n))
        {
            return false;
        }
        for g in 0..self.num_generators {
            let fwd = self.generator_action(g);
            let mut seen = vec![false; n];
            for &x in &fwd {
                if std::mem::replace(&mut seen[x], true) {
                    return false;
                }
            }
            if (0..n).any(|c| self.rows[fwd[c]][2 * g + 1] != c) {
                return false;
            }
        }
        let relators: Vec<Vec<usize>> = p.relators().iter().map(|r| r.codes()).collect();
        (0..n).all(|start| {
            relators
                .iter()
                .all(|w| w.iter().fold(start, |c, &x| self.rows[c][x]) == start)
        })
    }
}

struct Enumerator {
    cols: usize,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
    live: usize,
    defined: usize,
    max_cosets: usize,
    budget: usize,
}

struct Overflowed;

impl Enumerator {
    fn new(cols: usize, max_cosets: usize) -> Self {
        Enumerator {
            cols,
            table: vec![vec![UNDEF; cols]],
            parent: vec![0],
            live: 1,
            defined: 1,
            max_cosets,
            budget: max_cosets.saturating_mul(DEFINITION_BUDGET),
        }
    }

    fn is_live(&self, c: usize) -> bool {
        self.parent[c] == c
    }

    fn define(&mut self, c: usize, x: usize) -> Result<(), Overflowed> {
        if self.live >= self.max_cosets || self.defined >= self.budget {
            return Err(Overflowed);
        }
        let n = self.table.len();
        self.table.push(vec![UNDEF; self.cols]);
        self.parent.push(n);
        self.live += 1;
        self.defined += 1;
        self.table[c][x] = n;
        self.table[n][inverse_code(x)] = c;
        Ok(())
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut root = c;
        while self.parent[root] != root {
            root = self.parent[root];
        }
        let mut k = c;
        while self.parent[k] != root {
            let next = self.parent[k];
            self.parent[k] = root;
            k = next;
        }
        root
    }

    fn merge(&mut self, k: usize, l: usize, queue: &mut Vec<usize>) {
        let (a, b) = (self.rep(k), self.rep(l));
        if a == b {
            return;
        }
        let (keep, drop) = (a.min(b), a.max(b));
        self.parent[drop] = keep;
        self.live -= 1;
        queue.push(drop);
    }

    fn coincidence(&mut self, a: usize, b: usize) {
        let mut queue = Vec::new();
        self.merge(a, b, &mut queue);
        let mut i = 0;
        while i < queue.len() {
            let dead = queue[i];
            i += 1;
            for x in 0..self.cols {
                let d = self.table[dead][x];
                if d == UNDEF {
                    continue;
                }
                let xi = inverse_code(x);
                self.table[d][xi] = UNDEF;
                let mu = self.rep(dead);
                let nu = self.rep(d);
                if self.table[mu][x] != UNDEF {
                    let t = self.table[mu][x];
                    self.merge(nu, t, &mut queue);
                } else if self.table[nu][xi] != UNDEF {
                    let t = self.table[nu][xi];
                    self.merge(mu, t, &mut queue);
                } else {
                    self.table[mu][x] = nu;
                    self.table[nu][xi] = mu;
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: usize, w: &[usize]) -> Result<(), Overflowed> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() - 1);
        loop {
            while i <= j && self.table[f][w[i]] != UNDEF {
                f = self.table[f][w[i]];
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i && self.table[b][inverse_code(w[j])] != UNDEF {
                b = self.table[b][inverse_code(w[j])];
                if j == 0 {
                    // whole word traced backwards; i == 0 here
                    self.coincidence(f, b);
                    return Ok(());
                }
                j -= 1;
            }
            if j < i {
                self.coincidence(f, b);
                return Ok(());
            }
            if i == j {
                // deduction
                self.table[f][w[i]] = b;
                self.table[b][inverse_code(w[i])] = f;
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }

    fn run(&mut self, relators: &[Vec<usize>]) -> Result<(), Overflowed> {
        let mut c = 0;
        while c < self.table.len() {
            for w in relators {
                if !self.is_live(c) {
                    break;
                }
                self.scan_and_fill(c, w)?;
            }
            if self.is_live(c) {
                for x in 0..self.cols {
                    if self.table[c][x] == UNDEF {
                        self.define(c, x)?;
                    }
                }
            }
            c += 1;
        }
        Ok(())
    }

    /// Renumbers live cosets breadth-first from coset 0.
    fn standardize(&self, num_generators: usize) -> CosetTable {
        let mut order = vec![0usize];
        let mut index = vec![UNDEF; self.table.len()];
        index[0] = 0;
        let mut head = 0;
        while head < order.len() {
            let c = order[head];
            head += 1;
            for x in 0..self.cols {
                let d = self.table[c][x];
                if index[d] == UNDEF {
                    index[d] = order.len();
                    order.push(d);
                }
            }
        }
        let rows = order
            .iter()
            .map(|&c| self.table[c].iter().map(|&d| index[d]).collect())
            .collect();
        CosetTable { num_generators, rows }
    }
}

/// Enumerates the cosets of the trivial subgroup. On success the table size
/// is the order of the group.
pub fn todd_coxeter(p: &Presentation, max_cosets: usize) -> Enumeration {
    let max_cosets = max_cosets.max(1);
    let relators: Vec<Vec<usize>> = p.relators().iter().map(|r| r.codes()).collect();
    let mut e = Enumerator::new(2 * p.num_generators(), max_cosets);
    match e.run(&relators) {
        Ok(()) => Enumeration::Complete(e.standardize(p.num_generators())),
        Err(Overflowed) => Enumeration::Overflow { max_cosets },
    }
}
