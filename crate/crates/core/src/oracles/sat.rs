use crate::error::{Error, Result};
use crate::reductions::{Cnf, Ipc};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SatMode {
    Sat,
    OneInThree,
}

fn assignment(bits: u64, n: usize) -> Vec<bool> {
    (0..n).map(|i| bits >> i & 1 == 1).collect()
}

/// Counts satisfying assignments by enumerating all of them. In one-in-three
/// mode every clause needs exactly one true literal.
pub fn count_sat(f: &Cnf, mode: SatMode) -> Result<u64> {
    f.validate()?;
    if f.vars >= 40 {
        return Err(Error::Precondition(format!("{} variables is beyond exhaustive search", f.vars)));
    }
    let mut count = 0u64;
    for bits in 0..1u64 << f.vars {
        let a = assignment(bits, f.vars);
        let ok = match mode {
            SatMode::Sat => f.satisfied_by(&a),
            SatMode::OneInThree => f.clauses.iter().all(|c| c.iter().filter(|l| l.holds(&a)).count() == 1),
        };
        count += u64::from(ok);
    }
    Ok(count)
}

/// Whether some choice of one interval per pair covers the universe, and how
/// many choices do.
pub fn enumerate_ipc(p: &Ipc) -> Result<(bool, u64)> {
    p.validate()?;
    let m = p.pairs.len();
    if m >= 40 {
        return Err(Error::Precondition(format!("{m} pairs is beyond exhaustive search")));
    }
    let mut count = 0u64;
    for bits in 0..1u64 << m {
        count += u64::from(p.covers(&assignment(bits, m)));
    }
    Ok((count > 0, count))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_in_three_single_clause() {
        assert_eq!(count_sat(&Cnf::new(3, vec![vec![1, 2, 3]]), SatMode::OneInThree).unwrap(), 3);
    }

    #[test]
    fn empty_formula_counts_everything() {
        assert_eq!(count_sat(&Cnf::new(3, vec![]), SatMode::Sat).unwrap(), 8);
    }

    #[test]
    fn two_clause_one_in_three_by_hand() {
        // x or y or z, x or y or w: x alone, y alone, or z and w together.
        assert_eq!(count_sat(&Cnf::new(4, vec![vec![1, 2, 3], vec![1, 2, 4]]), SatMode::OneInThree).unwrap(), 3);
    }

    #[test]
    fn interval_pair_basics() {
        let p = Ipc { universe: 2, pairs: vec![[[1, 1], [2, 2]]] };
        assert_eq!(enumerate_ipc(&p).unwrap(), (false, 0));
        let p = Ipc { universe: 1, pairs: vec![[[1, 1], [1, 1]]] };
        assert_eq!(enumerate_ipc(&p).unwrap(), (true, 2));
    }

    #[test]
    fn hand_solved_cover() {
        // Universe 1..4; only first of pair 0 with second of pair 1 and the
        // second of pair 2 covers everything.
        let p = Ipc { universe: 4, pairs: vec![[[1, 2], [3, 3]], [[1, 1], [3, 4]], [[2, 2], [4, 4]]] };
        assert_eq!(enumerate_ipc(&p).unwrap(), (true, 2));
    }
}
