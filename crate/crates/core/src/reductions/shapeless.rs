//! Enclosing a 1×n strip in a frame so that shapeless placement is forced
//! back onto the strip.

use crate::error::{Error, Result};
use crate::model::{
    BoardSpec, CompatRule, FreeCell, Instance, Label, Orientation, Placement, Root, Solution, SquareTile, Tile,
    TileId,
};

#[derive(Clone, Copy, PartialEq, Eq)]
enum Side {
    N,
    E,
    S,
    W,
}

/// One frame tile in reading order around the spiral, with its position
/// relative to the cap, the sides it shares with its predecessor and
/// successor, and the wall its incoming contact belongs to.
struct Slot {
    x: i32,
    y: i32,
    entry: Option<Side>,
    exit: Option<Side>,
    wall: &'static str,
}

fn spiral(n: usize) -> Vec<Slot> {
    let n = n as i32;
    let mut v = vec![Slot { x: 0, y: 0, entry: None, exit: Some(Side::E), wall: "TW" }];
    for x in 1..=n + 1 {
        v.push(Slot { x, y: 0, entry: Some(Side::W), exit: Some(Side::E), wall: "TW" });
    }
    v.push(Slot { x: n + 2, y: 0, entry: Some(Side::W), exit: Some(Side::S), wall: "TW" });
    for y in 1..=3 {
        v.push(Slot { x: n + 2, y, entry: Some(Side::N), exit: Some(Side::S), wall: "RW" });
    }
    v.push(Slot { x: n + 2, y: 4, entry: Some(Side::N), exit: Some(Side::W), wall: "RW" });
    for x in (1..=n + 1).rev() {
        v.push(Slot { x, y: 4, entry: Some(Side::E), exit: Some(Side::W), wall: "BW" });
    }
    v.push(Slot { x: 0, y: 4, entry: Some(Side::E), exit: Some(Side::N), wall: "BW" });
    v.push(Slot { x: 0, y: 3, entry: Some(Side::S), exit: Some(Side::N), wall: "LW" });
    v.push(Slot { x: 0, y: 2, entry: Some(Side::S), exit: Some(Side::E), wall: "LW" });
    v
}

/// Row of the frame that holds the strip, relative to the cap.
const STRIP_ROW: i32 = 2;

/// Shapeless instance whose solutions contain the strip's solutions inside a
/// fixed frame. Frame tiles get ids after the largest strip id; the cap is the
/// first of them. With `rooted` every wall contact gets its own color and the
/// cap is fixed at the origin, which makes the frame unique and the count of
/// solutions equal to the strip's.
pub fn strip_to_shapeless(i: &Instance, rooted: bool) -> Result<Instance> {
    i.validate()?;
    let BoardSpec::Strip { len, left: Some(left), right: None } = i.board else {
        return Err(Error::Precondition("need a square strip with a left boundary and no right boundary".into()));
    };
    let signed = match i.rule {
        CompatRule::UnsignedEq => false,
        CompatRule::SignedOpp => true,
        _ => return Err(Error::Precondition("frame colors need a color rule".into())),
    };
    let lab = |name: String, plus: bool| match (signed, plus) {
        (false, _) => Label::color(&name),
        (true, true) => Label::plus(&name),
        (true, false) => Label::minus(&name),
    };
    let first = i.tiles.iter().map(|t| t.id()).max().map_or(0, |m| m + 1);
    let slots = spiral(len);
    let mut unique = 0;
    let mut tiles = i.tiles.clone();
    for (k, slot) in slots.iter().enumerate() {
        let mut sides = [None; 4];
        let at = |s: Side| match s {
            Side::N => 0,
            Side::E => 1,
            Side::S => 2,
            Side::W => 3,
        };
        let contact = |k: usize| {
            if rooted {
                format!("frame.C{k}")
            } else {
                format!("frame.{}", slots[k].wall)
            }
        };
        if let Some(s) = slot.entry {
            sides[at(s)] = Some(lab(contact(k), true));
        }
        if let Some(s) = slot.exit {
            sides[at(s)] = Some(if k + 1 == slots.len() { left } else { lab(contact(k + 1), false) });
        }
        let sides = sides.map(|s| {
            s.unwrap_or_else(|| {
                unique += 1;
                lab(format!("frame.U{unique}"), true)
            })
        });
        let [n, e, s, w] = sides;
        tiles.push(Tile::Square(SquareTile::new(first + k as TileId, n, e, s, w)));
    }
    let root = rooted.then_some(Root { tile: first, rot: 0 });
    Ok(Instance::new(BoardSpec::Shapeless { root }, i.rule, tiles))
}

/// Strip solution read off a shapeless solution of [`strip_to_shapeless`].
pub fn shapeless_solution_to_strip(source: &Instance, sol: &Solution) -> Result<Solution> {
    let Solution::Free(cells) = sol else {
        return Err(Error::Precondition("expected a shapeless solution".into()));
    };
    let BoardSpec::Strip { len, .. } = source.board else {
        return Err(Error::Precondition("source must be a strip".into()));
    };
    let first = source.tiles.iter().map(|t| t.id()).max().map_or(0, |m| m + 1);
    let lb = first + spiral(len).len() as TileId - 1;
    let rot_of = |c: &FreeCell| match c.orient {
        Orientation::Square { rot } => rot,
        _ => 0,
    };
    let anchor = cells.iter().find(|c| c.tile == lb).ok_or_else(|| Error::Precondition("frame not found".into()))?;
    let r = rot_of(anchor);
    // Direction the boundary tile's east side faces after its rotation.
    let (dx, dy) = [(1, 0), (0, 1), (-1, 0), (0, -1)][r as usize % 4];
    let mut out = Vec::new();
    for k in 1..=len as i32 {
        let (x, y) = (anchor.x + k * dx, anchor.y + k * dy);
        let c = cells
            .iter()
            .find(|c| (c.x, c.y) == (x, y))
            .ok_or_else(|| Error::Precondition("strip cell missing".into()))?;
        out.push(Placement { tile: c.tile, orient: Orientation::square((rot_of(c) + 4 - r) % 4) });
    }
    Ok(Solution::Cells(out))
}

/// Positions of the frame tiles relative to the cap, in spiral order.
pub fn frame_layout(n: usize) -> Vec<(i32, i32)> {
    spiral(n).iter().map(|s| (s.x, s.y)).collect()
}

/// Cell relative to the cap where strip position `k` (from 0) sits.
pub fn strip_cell(k: usize) -> (i32, i32) {
    (k as i32 + 1, STRIP_ROW)
}
