//! Labels, tiles, boards, solutions and the universal verifier.

mod board;
mod label;
mod tile;
mod verify;

pub use board::{Acute, BoardSpec, FreeCell, Instance, Placement, Points, Root, Solution};
pub use label::{compatible, Axis, Color, CompatRule, Label, LabelFamily, Sign};
pub use tile::{
    orient, orientations, rotate_square, Corner, EqTriTile, LegPlacement, Orientation, RightTriTile, SquareTile,
    Tile, TileFamily, TileId, View,
};
pub use verify::{verify, BoundarySide, Cell, Structural, Verdict, Violation};

/// Square tile with numeric sides given as (north, east, south, west).
pub fn num_square(id: TileId, n: i64, e: i64, s: i64, w: i64) -> Tile {
    Tile::Square(SquareTile::new(id, Label::Num(n), Label::Num(e), Label::Num(s), Label::Num(w)))
}

/// Places every tile of a shaped instance in listed order with the given
/// orientation; a convenience for building solutions by hand.
pub fn cells(items: &[(TileId, Orientation)]) -> Solution {
    Solution::Cells(items.iter().map(|&(tile, orient)| Placement { tile, orient }).collect())
}
