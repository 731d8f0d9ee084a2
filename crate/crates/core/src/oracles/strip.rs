use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::model::{
    compatible, orient, verify, Axis, BoardSpec, Corner, Instance, Label, LegPlacement, Orientation, Placement,
    Points, Solution, View,
};

/// Count of solutions plus, when a limit was given, the solutions found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub count: u64,
    pub solutions: Vec<Solution>,
}

fn cell_orientations(inst: &Instance, i: usize, prev: Option<Orientation>) -> Vec<Orientation> {
    match inst.board {
        BoardSpec::Rect { .. } | BoardSpec::Strip { .. } | BoardSpec::Shapeless { .. } => {
            (0..4).map(Orientation::square).collect()
        }
        BoardSpec::EqTriStrip { first_points, .. } => {
            let up = (i % 2 == 0) == (first_points == Points::Up);
            let flips: &[bool] = if inst.allow_reflection { &[false, true] } else { &[false] };
            flips
                .iter()
                .flat_map(|&flipped| (0..3).map(move |rot| Orientation::EqTri { rot, up, flipped }))
                .collect()
        }
        BoardSpec::LegStrip { left_acute, .. } => {
            let down = (i % 2 == 0) == (left_acute == crate::model::Acute::Bottom);
            vec![Orientation::Leg(if down { LegPlacement::HypDown } else { LegPlacement::HypUp })]
        }
        BoardSpec::HypStrip { .. } => match (i % 2, prev) {
            (0, _) => vec![Orientation::Hyp(Corner::Bl), Orientation::Hyp(Corner::Tl)],
            (_, Some(Orientation::Hyp(Corner::Bl))) => vec![Orientation::Hyp(Corner::Tr)],
            (_, Some(Orientation::Hyp(Corner::Tl))) => vec![Orientation::Hyp(Corner::Br)],
            _ => vec![],
        },
    }
}

struct Search<'a> {
    inst: &'a Instance,
    cols: usize,
    cap: usize,
    left: Option<Label>,
    right: Option<Label>,
    limit: Option<u64>,
    /// Skip a tile identical to an unused earlier one at the same cell, and
    /// remember single-row states already known to fail.
    dedupe: bool,
    failed: HashSet<(u64, Option<Label>, Option<Orientation>)>,
    used: Vec<bool>,
    placed: Vec<(Placement, View)>,
    count: u64,
    solutions: Vec<Solution>,
}

impl Search<'_> {
    fn fits(&self, l: Option<Label>, r: Option<Label>, axis: Axis) -> Result<bool> {
        match (l, r) {
            (Some(a), Some(b)) => compatible(a, b, self.inst.rule, axis),
            _ => Ok(false),
        }
    }

    fn accepts(&self, i: usize, v: &View) -> Result<bool> {
        let col = i % self.cols;
        if col == 0 {
            if let Some(l) = self.left {
                if !self.fits(Some(l), v.w, Axis::Horizontal)? {
                    return Ok(false);
                }
            }
        } else if !self.fits(self.placed[i - 1].1.e, v.w, Axis::Horizontal)? {
            return Ok(false);
        }
        if i >= self.cols && !self.fits(self.placed[i - self.cols].1.s, v.n, Axis::Vertical)? {
            return Ok(false);
        }
        if i + 1 == self.cap {
            if let Some(r) = self.right {
                if !self.fits(v.e, Some(r), Axis::Horizontal)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.count >= l)
    }

    fn run(&mut self, i: usize) -> Result<()> {
        if self.done() {
            return Ok(());
        }
        if i == self.cap {
            self.count = self.count.checked_add(1).ok_or(Error::Overflow)?;
            if self.limit.is_some() {
                let sol = Solution::Cells(self.placed.iter().map(|p| p.0).collect());
                debug_assert!(verify(self.inst, &sol).is_ok());
                self.solutions.push(sol);
            }
            return Ok(());
        }
        let prev = self.placed.last().map(|p| p.0.orient);
        let key = self.memo_key();
        if key.as_ref().is_some_and(|k| self.failed.contains(k)) {
            return Ok(());
        }
        let before = self.count;
        let orients = cell_orientations(self.inst, i, prev);
        for k in 0..self.inst.tiles.len() {
            if self.used[k] {
                continue;
            }
            let tile = self.inst.tiles[k];
            if self.dedupe && (0..k).any(|j| !self.used[j] && self.inst.tiles[j].labels() == tile.labels()) {
                continue;
            }
            for &o in &orients {
                let v = orient(&tile, o, self.inst.allow_reflection)?;
                if !self.accepts(i, &v)? {
                    continue;
                }
                self.used[k] = true;
                self.placed.push((Placement { tile: tile.id(), orient: o }, v));
                self.run(i + 1)?;
                self.placed.pop();
                self.used[k] = false;
                if self.done() {
                    return Ok(());
                }
            }
        }
        if let Some(k) = key {
            if self.count == before {
                self.failed.insert(k);
            }
        }
        Ok(())
    }

    /// State key for single-row boards: which tiles are used, what the last
    /// tile exposes on its right, and how it lies.
    fn memo_key(&self) -> Option<(u64, Option<Label>, Option<Orientation>)> {
        if !self.dedupe || self.cols != self.cap || self.inst.tiles.len() > 64 {
            return None;
        }
        let mask = self.used.iter().enumerate().fold(0u64, |m, (k, &u)| m | (u64::from(u) << k));
        let last = self.placed.last();
        Some((mask, last.and_then(|p| p.1.e), last.map(|p| p.0.orient)))
    }
}

/// Exhaustive count of placements on a shaped board, trying tiles in listed
/// order and orientations in canonical order. Identical tiles count
/// separately. With a limit the search stops once that many are found and the
/// found solutions are returned.
pub fn enumerate_strip_solutions(inst: &Instance, limit: Option<u64>) -> Result<Enumeration> {
    search(inst, limit, false)
}

/// Whether a shaped board has any solution. Interchangeable tiles are tried
/// once per cell, so this stays fast on instances with many repeated tiles.
pub fn strip_solvable(inst: &Instance) -> Result<bool> {
    Ok(search(inst, Some(1), true)?.count > 0)
}

/// Some solution of a shaped board, found with the same pruning as
/// [`strip_solvable`].
pub fn find_strip_solution(inst: &Instance) -> Result<Option<Solution>> {
    Ok(search(inst, Some(1), true)?.solutions.pop())
}

fn search(inst: &Instance, limit: Option<u64>, dedupe: bool) -> Result<Enumeration> {
    inst.validate()?;
    let (cols, left, right) = match inst.board {
        BoardSpec::Rect { cols, .. } => (cols, None, None),
        BoardSpec::Strip { len, left, right } | BoardSpec::HypStrip { len, left, right } => (len, left, right),
        BoardSpec::EqTriStrip { len, left, .. } => (len, left, None),
        BoardSpec::LegStrip { len, .. } => (len, None, None),
        BoardSpec::Shapeless { .. } => {
            return Err(Error::Precondition("shapeless boards are counted by enumerate_shapeless".into()))
        }
    };
    let cap = inst.board.capacity().unwrap_or(0);
    let mut s = Search {
        inst,
        cols: cols.max(1),
        cap,
        left,
        right,
        limit,
        dedupe,
        failed: HashSet::new(),
        used: vec![false; inst.tiles.len()],
        placed: Vec::with_capacity(cap),
        count: 0,
        solutions: Vec::new(),
    };
    s.run(0)?;
    Ok(Enumeration { count: s.count, solutions: s.solutions })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{num_square, CompatRule, SquareTile, Tile};

    #[test]
    fn lone_asymmetric_square_has_four_solutions() {
        let t = Tile::Square(SquareTile::new(0, Label::color("a"), Label::color("b"), Label::color("c"), Label::color("d")));
        let inst = Instance::new(BoardSpec::strip(1), CompatRule::UnsignedEq, vec![t]);
        assert_eq!(enumerate_strip_solutions(&inst, None).unwrap().count, 4);
    }

    #[test]
    fn equal_numbers_never_fit_strictly() {
        let inst = Instance::new(
            BoardSpec::strip(2),
            CompatRule::StrictLess,
            vec![num_square(0, 1, 1, 1, 1), num_square(1, 1, 1, 1, 1)],
        );
        assert_eq!(enumerate_strip_solutions(&inst, None).unwrap().count, 0);
    }

    #[test]
    fn limit_returns_verified_solutions() {
        let inst = Instance::new(
            BoardSpec::Rect { rows: 2, cols: 2 },
            CompatRule::LessOrEq,
            (0..4).map(|i| num_square(i, 0, 0, 0, 0)).collect(),
        );
        let full = enumerate_strip_solutions(&inst, None).unwrap();
        assert_eq!(full.count, 24 * 256);
        assert!(strip_solvable(&inst).unwrap());
        let some = enumerate_strip_solutions(&inst, Some(3)).unwrap();
        assert_eq!(some.count, 3);
        assert!(some.solutions.iter().all(|s| verify(&inst, s).is_ok()));
    }
}
