use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::model::{compatible, orient, Axis, BoardSpec, FreeCell, Instance, Orientation, Solution, View};

struct Search<'a> {
    inst: &'a Instance,
    bound: i32,
    limit: Option<u64>,
    placed: HashMap<(i32, i32), (usize, u8, View)>,
    empty: HashSet<(i32, i32)>,
    used: Vec<bool>,
    remaining: usize,
    count: u64,
    found: Vec<Solution>,
}

impl Search<'_> {
    fn frontier_cell(&self) -> Option<(i32, i32)> {
        let mut best: Option<(i32, i32)> = None;
        for &(x, y) in self.placed.keys() {
            for c in [(x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)] {
                if c.0.abs() > self.bound || c.1.abs() > self.bound {
                    continue;
                }
                if self.placed.contains_key(&c) || self.empty.contains(&c) {
                    continue;
                }
                if best.map_or(true, |b| (c.1, c.0) < (b.1, b.0)) {
                    best = Some(c);
                }
            }
        }
        best
    }

    fn fits(&self, (x, y): (i32, i32), v: &View) -> Result<bool> {
        let rule = self.inst.rule;
        let pairs = [
            (self.placed.get(&(x - 1, y)).and_then(|p| p.2.e), v.w, Axis::Horizontal),
            (v.e, self.placed.get(&(x + 1, y)).and_then(|p| p.2.w), Axis::Horizontal),
            (self.placed.get(&(x, y - 1)).and_then(|p| p.2.s), v.n, Axis::Vertical),
            (v.s, self.placed.get(&(x, y + 1)).and_then(|p| p.2.n), Axis::Vertical),
        ];
        for (a, b, axis) in pairs {
            if let (Some(a), Some(b)) = (a, b) {
                if !compatible(a, b, rule, axis)? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn done(&self) -> bool {
        self.limit.is_some_and(|l| self.count >= l)
    }

    fn run(&mut self) -> Result<()> {
        if self.remaining == 0 {
            self.count = self.count.checked_add(1).ok_or(Error::Overflow)?;
            if self.limit.is_some() {
                let cells = self
                    .placed
                    .iter()
                    .map(|(&(x, y), &(k, rot, _))| FreeCell {
                        x,
                        y,
                        tile: self.inst.tiles[k].id(),
                        orient: Orientation::square(rot),
                    })
                    .collect();
                self.found.push(Solution::Free(cells).normalized());
            }
            return Ok(());
        }
        let Some(cell) = self.frontier_cell() else { return Ok(()) };
        for k in 0..self.inst.tiles.len() {
            if self.used[k] {
                continue;
            }
            for rot in 0..4 {
                let v = orient(&self.inst.tiles[k], Orientation::square(rot), false)?;
                if !self.fits(cell, &v)? {
                    continue;
                }
                self.used[k] = true;
                self.remaining -= 1;
                self.placed.insert(cell, (k, rot, v));
                self.run()?;
                self.placed.remove(&cell);
                self.remaining += 1;
                self.used[k] = false;
                if self.done() {
                    return Ok(());
                }
            }
        }
        self.empty.insert(cell);
        self.run()?;
        self.empty.remove(&cell);
        Ok(())
    }
}

fn search(inst: &Instance, bound: Option<i32>, limit: Option<u64>) -> Result<(u64, Vec<Solution>)> {
    inst.validate()?;
    let BoardSpec::Shapeless { root } = inst.board else {
        return Err(Error::Precondition("not a shapeless instance".into()));
    };
    let Some(root) = root else {
        return Err(Error::Precondition("unrooted shapeless instances have infinitely many solutions".into()));
    };
    let k = inst.tiles.iter().position(|t| t.id() == root.tile).expect("validated root");
    let v = orient(&inst.tiles[k], Orientation::square(root.rot), false)?;
    let mut s = Search {
        inst,
        bound: bound.unwrap_or(inst.tiles.len() as i32),
        limit,
        placed: HashMap::from([((0, 0), (k, root.rot, v))]),
        empty: HashSet::new(),
        used: vec![false; inst.tiles.len()],
        remaining: inst.tiles.len() - 1,
        count: 0,
        found: Vec::new(),
    };
    s.used[k] = true;
    s.run()?;
    Ok((s.count, s.found))
}

/// Counts rooted shapeless solutions whose cells lie within `bound` of the
/// origin in both coordinates (default: the tile count, which holds every
/// connected placement).
pub fn enumerate_shapeless(inst: &Instance, bound: Option<i32>) -> Result<u64> {
    search(inst, bound, None).map(|r| r.0)
}

/// First rooted shapeless solution in search order, if any.
pub fn find_shapeless(inst: &Instance, bound: Option<i32>) -> Result<Option<Solution>> {
    search(inst, bound, Some(1)).map(|r| r.1.into_iter().next())
}
