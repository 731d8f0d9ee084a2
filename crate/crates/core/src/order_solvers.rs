//! Sorting-based solvers for inequality-compatible square puzzles.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::model::{rotate_square, Label, Orientation, Placement, Solution, SquareTile, TileId};

/// Numeric sides (north, east, south, west) after `rot` quarter turns.
fn nums(t: &SquareTile, rot: u8) -> Result<[i64; 4]> {
    let mut out = [0; 4];
    for (o, l) in out.iter_mut().zip(rotate_square(t.sides, rot)) {
        match l {
            Label::Num(v) => *o = v,
            other => return Err(Error::FamilyMismatch(format!("tile {} has non-numeric label {other:?}", t.id))),
        }
    }
    Ok(out)
}

struct Oriented {
    id: TileId,
    rot: u8,
    sides: [i64; 4],
}

fn place(order: impl IntoIterator<Item = Oriented>) -> Solution {
    Solution::Cells(order.into_iter().map(|o| Placement { tile: o.id, orient: Orientation::square(o.rot) }).collect())
}

/// Places any m×n set of numeric squares so that every contact satisfies
/// left ≤ right and top ≤ bottom. Each tile is turned so its left label is
/// at least its right and its top at least its bottom; tiles are dealt into
/// rows by bottom label and each row is sorted by right label.
pub fn solve_leq_rect(m: usize, n: usize, tiles: &[SquareTile]) -> Result<Solution> {
    if tiles.len() != m * n {
        return Err(Error::CapacityMismatch { expected: m * n, found: tiles.len() });
    }
    let mut all = Vec::with_capacity(tiles.len());
    for t in tiles {
        let mut chosen = None;
        for rot in 0..4 {
            let [no, e, s, w] = nums(t, rot)?;
            if w >= e && no >= s {
                chosen = Some(Oriented { id: t.id, rot, sides: [no, e, s, w] });
                break;
            }
        }
        all.push(chosen.expect("one of the four turns orders both pairs"));
    }
    all.sort_by_key(|o| (o.sides[2], o.id));
    let mut out = Vec::with_capacity(all.len());
    let mut rest = all.into_iter();
    for _ in 0..m {
        let mut row: Vec<Oriented> = rest.by_ref().take(n).collect();
        row.sort_by_key(|o| (o.sides[1], o.id));
        out.extend(row);
    }
    Ok(place(out))
}

/// Strict-inequality version for tiles whose 4mn labels are pairwise
/// distinct: the ≤ layout is then automatically strict.
pub fn solve_lt_distinct_rect(m: usize, n: usize, tiles: &[SquareTile]) -> Result<Solution> {
    let mut seen = HashSet::new();
    for t in tiles {
        for v in nums(t, 0)? {
            if !seen.insert(v) {
                return Err(Error::Precondition(format!("label {v} occurs more than once")));
            }
        }
    }
    solve_leq_rect(m, n, tiles)
}

/// 1×n strict-inequality strip for tiles that each have an opposite pair of
/// unequal labels. Each tile is turned so left > right (largest gap first),
/// then tiles are placed by increasing left label.
pub fn solve_lt_strip(tiles: &[SquareTile]) -> Result<Solution> {
    let mut all = Vec::with_capacity(tiles.len());
    for t in tiles {
        let mut best: Option<Oriented> = None;
        for rot in 0..4 {
            let sides = nums(t, rot)?;
            let gap = sides[3] - sides[1];
            if gap > 0 && best.as_ref().map_or(true, |b| gap > b.sides[3] - b.sides[1]) {
                best = Some(Oriented { id: t.id, rot, sides });
            }
        }
        let Some(b) = best else {
            return Err(Error::Precondition(format!("tile {} has equal labels on both opposite pairs", t.id)));
        };
        all.push(b);
    }
    all.sort_by_key(|o| (o.sides[3], o.id));
    Ok(place(all))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{verify, BoardSpec, CompatRule, Instance, Tile};

    fn sq(id: TileId, w: i64, n: i64, e: i64, s: i64) -> SquareTile {
        SquareTile::new(id, Label::Num(n), Label::Num(e), Label::Num(s), Label::Num(w))
    }

    fn check(board: BoardSpec, rule: CompatRule, tiles: &[SquareTile], sol: &Solution) {
        let inst = Instance::new(board, rule, tiles.iter().copied().map(Tile::Square).collect());
        assert!(verify(&inst, sol).is_ok(), "{}", verify(&inst, sol));
    }

    #[test]
    fn leq_pair_turns_the_first_tile() {
        let tiles = [sq(1, 1, 0, 5, 0), sq(2, 9, 0, 2, 0)];
        let sol = solve_leq_rect(1, 2, &tiles).unwrap();
        let Solution::Cells(c) = &sol else { panic!() };
        assert_eq!((c[0].tile, c[0].orient), (1, Orientation::square(2)));
        assert_eq!((c[1].tile, c[1].orient), (2, Orientation::square(0)));
        check(BoardSpec::Rect { rows: 1, cols: 2 }, CompatRule::LessOrEq, &tiles, &sol);
    }

    #[test]
    fn leq_all_zero() {
        let tiles: Vec<_> = (0..4).map(|i| sq(i, 0, 0, 0, 0)).collect();
        let sol = solve_leq_rect(2, 2, &tiles).unwrap();
        check(BoardSpec::Rect { rows: 2, cols: 2 }, CompatRule::LessOrEq, &tiles, &sol);
    }

    #[test]
    fn wrong_count_and_family_are_rejected() {
        assert!(matches!(solve_leq_rect(2, 2, &[sq(0, 1, 2, 3, 4)]), Err(Error::CapacityMismatch { .. })));
        let t = SquareTile::new(0, Label::color("a"), Label::color("a"), Label::color("a"), Label::color("a"));
        assert!(matches!(solve_leq_rect(1, 1, &[t]), Err(Error::FamilyMismatch(_))));
    }

    #[test]
    fn distinct_labels() {
        let tiles = [sq(0, 1, 2, 3, 4), sq(1, 5, 6, 7, 8)];
        let sol = solve_lt_distinct_rect(1, 2, &tiles).unwrap();
        check(BoardSpec::Rect { rows: 1, cols: 2 }, CompatRule::StrictLess, &tiles, &sol);
        assert!(matches!(solve_lt_distinct_rect(1, 2, &[sq(0, 1, 2, 3, 4), sq(1, 4, 6, 7, 8)]), Err(Error::Precondition(_))));
    }

    #[test]
    fn strip_orders_by_left_label() {
        let tiles = [sq(0, 5, 0, 2, 0), sq(1, 4, 0, 1, 0)];
        let sol = solve_lt_strip(&tiles).unwrap();
        let Solution::Cells(c) = &sol else { panic!() };
        assert_eq!(c.iter().map(|p| p.tile).collect::<Vec<_>>(), vec![1, 0]);
        check(BoardSpec::strip(2), CompatRule::StrictLess, &tiles, &sol);
        assert!(solve_lt_strip(&[sq(0, 3, 3, 3, 3)]).is_err());
        let one = [sq(7, 1, 1, 1, 2)];
        check(BoardSpec::strip(1), CompatRule::StrictLess, &one, &solve_lt_strip(&one).unwrap());
    }
}
