use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Literal in DIMACS style: `k` is variable `k` (1-based), `-k` its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Lit(pub i32);

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit(var as i32 + 1)
    }

    pub fn neg(var: usize) -> Lit {
        Lit(-(var as i32 + 1))
    }

    /// Zero-based variable index.
    pub fn var(self) -> usize {
        self.0.unsigned_abs() as usize - 1
    }

    pub fn positive(self) -> bool {
        self.0 > 0
    }

    pub fn holds(self, assignment: &[bool]) -> bool {
        assignment[self.var()] == self.positive()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Cnf {
    pub vars: usize,
    pub clauses: Vec<Vec<Lit>>,
}

impl Cnf {
    pub fn new(vars: usize, clauses: Vec<Vec<i32>>) -> Cnf {
        Cnf { vars, clauses: clauses.into_iter().map(|c| c.into_iter().map(Lit).collect()).collect() }
    }

    pub fn validate(&self) -> Result<()> {
        for c in &self.clauses {
            if c.iter().any(|l| l.0 == 0 || l.var() >= self.vars) {
                return Err(Error::Precondition(format!("clause {c:?} names a missing variable")));
            }
        }
        Ok(())
    }

    pub fn satisfied_by(&self, a: &[bool]) -> bool {
        self.clauses.iter().all(|c| c.iter().any(|l| l.holds(a)))
    }

    /// (positive, negative) occurrence counts per variable.
    pub fn occurrences(&self) -> Vec<(usize, usize)> {
        let mut occ = vec![(0, 0); self.vars];
        for l in self.clauses.iter().flatten() {
            if l.positive() {
                occ[l.var()].0 += 1;
            } else {
                occ[l.var()].1 += 1;
            }
        }
        occ
    }

    pub fn max_clause_len(&self) -> usize {
        self.clauses.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// At most three literals per clause and no clause with three positive
    /// literals. Shorter all-positive clauses are allowed; requiring a negative
    /// literal everywhere would make the all-false assignment satisfy every
    /// formula.
    pub fn is_n3p(&self) -> bool {
        self.max_clause_len() <= 3 && self.clauses.iter().all(|c| c.iter().filter(|l| l.positive()).count() < 3)
    }

    /// Every variable occurs positively at most twice.
    pub fn is_2p(&self) -> bool {
        self.occurrences().iter().all(|&(p, _)| p <= 2)
    }

    /// Every variable occurs negatively exactly once.
    pub fn is_e1n(&self) -> bool {
        self.occurrences().iter().all(|&(_, n)| n == 1)
    }

    pub fn is_all_positive(&self) -> bool {
        self.clauses.iter().flatten().all(|l| l.positive())
    }

    /// The canonical unsatisfiable formula `(x) ∧ (¬x)`, which still meets the
    /// N3P, 2P and E1N restrictions.
    pub fn unsatisfiable() -> Cnf {
        Cnf::new(1, vec![vec![1], vec![-1]])
    }
}

/// Interval-pair cover instance over the universe `1..=universe`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Ipc {
    pub universe: u32,
    pub pairs: Vec<[[u32; 2]; 2]>,
}

impl Ipc {
    pub fn validate(&self) -> Result<()> {
        for p in &self.pairs {
            for iv in p {
                if iv[0] > iv[1] || iv[0] < 1 || iv[1] > self.universe {
                    return Err(Error::Precondition(format!("interval {iv:?} outside 1..={}", self.universe)));
                }
            }
        }
        Ok(())
    }

    /// Whether choosing `second[j]` (true = second interval) covers the universe.
    pub fn covers(&self, second: &[bool]) -> bool {
        let mut hit = vec![false; self.universe as usize + 1];
        for (p, &s) in self.pairs.iter().zip(second) {
            let [a, b] = p[s as usize];
            for x in a..=b {
                hit[x as usize] = true;
            }
        }
        hit[1..].iter().all(|&h| h)
    }
}
