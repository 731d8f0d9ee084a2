use std::collections::{BTreeMap, HashMap, HashSet};

use super::{GameInstance, GameOutcome, Move, Player, Pools};
use crate::error::{Error, Result};
use crate::model::{compatible, rotate_square, Axis, Label};

type Sides = [Label; 4];

fn canonical(s: Sides) -> Sides {
    (0..4).map(|r| rotate_square(s, r)).min().expect("four rotations")
}

struct Solver<'a> {
    g: &'a GameInstance,
    classes: Vec<Sides>,
    /// For each class, which pool it draws from: 0 shared or P1, 1 P2.
    pool_of: Vec<usize>,
    memo: HashMap<(Label, Vec<u8>), bool>,
}

impl Solver<'_> {
    fn moves(&self, exposed: Label, counts: &[u8], mover: Player) -> Result<Vec<(usize, Label)>> {
        let pool = match (&self.g.pools, mover) {
            (Pools::Shared, _) | (_, Player::P1) => 0,
            (_, Player::P2) => 1,
        };
        let mut out = Vec::new();
        let mut seen = HashSet::new();
        for (k, &c) in counts.iter().enumerate() {
            if c == 0 || self.pool_of[k] != pool {
                continue;
            }
            for r in 0..4 {
                let v = rotate_square(self.classes[k], r);
                if compatible(exposed, v[3], self.g.rule, Axis::Horizontal)? && seen.insert((k, v[1])) {
                    out.push((k, v[1]));
                }
            }
        }
        Ok(out)
    }

    fn wins(&mut self, exposed: Label, counts: &mut Vec<u8>, mover: Player) -> Result<bool> {
        if let Some(&w) = self.memo.get(&(exposed, counts.clone())) {
            return Ok(w);
        }
        let mut win = false;
        for (k, next) in self.moves(exposed, counts, mover)? {
            counts[k] -= 1;
            let opp = self.wins(next, counts, mover.other())?;
            counts[k] += 1;
            if !opp {
                win = true;
                break;
            }
        }
        self.memo.insert((exposed, counts.clone()), win);
        Ok(win)
    }
}

/// Exact winner of the 1×n matching game by memoized search; identical tiles
/// (up to rotation) in the same pool are merged.
pub fn solve_match_game(g: &GameInstance) -> Result<GameOutcome> {
    let mut pool_of_tile = vec![0usize; g.tiles.len()];
    if let Pools::PerPlayer { p1, p2 } = &g.pools {
        let ids: Vec<_> = g.tiles.iter().map(|t| t.id).collect();
        let mut all: Vec<_> = p1.iter().chain(p2).copied().collect();
        all.sort_unstable();
        let mut sorted = ids.clone();
        sorted.sort_unstable();
        if all != sorted {
            return Err(Error::Precondition("player pools must partition the tiles".into()));
        }
        for (i, id) in ids.iter().enumerate() {
            pool_of_tile[i] = usize::from(p2.contains(id));
        }
    }
    let mut class_index: BTreeMap<(usize, Sides), usize> = BTreeMap::new();
    for (i, t) in g.tiles.iter().enumerate() {
        let n = class_index.len();
        class_index.entry((pool_of_tile[i], canonical(t.sides))).or_insert(n);
    }
    let mut classes = vec![g.tiles.first().map_or([g.left; 4], |t| t.sides); class_index.len()];
    let mut pool_of = vec![0; class_index.len()];
    for (&(p, s), &k) in &class_index {
        classes[k] = s;
        pool_of[k] = p;
    }
    let mut counts = vec![0u8; classes.len()];
    let class_of: Vec<usize> =
        g.tiles.iter().enumerate().map(|(i, t)| class_index[&(pool_of_tile[i], canonical(t.sides))]).collect();
    for &k in &class_of {
        counts[k] = counts[k].checked_add(1).ok_or_else(|| Error::Precondition("too many identical tiles".into()))?;
    }
    let mut s = Solver { g, classes, pool_of, memo: HashMap::new() };
    for (i, t) in g.tiles.iter().enumerate() {
        if pool_of_tile[i] != 0 {
            continue;
        }
        for rot in 0..4u8 {
            let v = rotate_square(t.sides, rot);
            if !compatible(g.left, v[3], g.rule, Axis::Horizontal)? {
                continue;
            }
            counts[class_of[i]] -= 1;
            let opp = s.wins(v[1], &mut counts, Player::P2)?;
            counts[class_of[i]] += 1;
            if !opp {
                return Ok(GameOutcome { winner: Player::P1, principal: Some(Move::Tile { tile: t.id, rot }) });
            }
        }
    }
    Ok(GameOutcome { winner: Player::P2, principal: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{CompatRule, SquareTile};

    fn game(tiles: Vec<SquareTile>, left: Label, pools: Pools) -> GameInstance {
        GameInstance { tiles, left, rule: CompatRule::SignedOpp, pools }
    }

    #[test]
    fn one_matching_tile_wins() {
        let t = SquareTile::new(0, Label::plus("u1"), Label::plus("v"), Label::plus("u2"), Label::minus("s"));
        let o = solve_match_game(&game(vec![t], Label::plus("s"), Pools::Shared)).unwrap();
        assert_eq!(o.winner, Player::P1);
        assert_eq!(o.principal, Some(Move::Tile { tile: 0, rot: 0 }));
    }

    #[test]
    fn unmatched_tile_loses() {
        let t = SquareTile::new(0, Label::plus("a"), Label::plus("b"), Label::plus("c"), Label::plus("d"));
        assert_eq!(solve_match_game(&game(vec![t], Label::plus("s"), Pools::Shared)).unwrap().winner, Player::P2);
    }

    #[test]
    fn own_pool_restricts_first_move() {
        let t = SquareTile::new(0, Label::plus("u1"), Label::plus("v"), Label::plus("u2"), Label::minus("s"));
        let pools = Pools::PerPlayer { p1: vec![], p2: vec![0] };
        assert_eq!(solve_match_game(&game(vec![t], Label::plus("s"), pools)).unwrap().winner, Player::P2);
    }
}
