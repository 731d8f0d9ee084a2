use serde::{Deserialize, Serialize};

use super::label::Label;
use crate::error::{Error, Result};

pub type TileId = u32;

/// Square tile, sides in the order north, east, south, west.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SquareTile {
    pub id: TileId,
    pub sides: [Label; 4],
}

impl SquareTile {
    pub fn new(id: TileId, n: Label, e: Label, s: Label, w: Label) -> SquareTile {
        SquareTile { id, sides: [n, e, s, w] }
    }
}

/// Equilateral triangle, edges listed clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EqTriTile {
    pub id: TileId,
    pub edges: [Label; 3],
}

/// Right isosceles triangle read with its hypotenuse down, legs left to right.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RightTriTile {
    pub id: TileId,
    pub leg_l: Label,
    pub leg_r: Label,
    pub hyp: Label,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Tile {
    Square(SquareTile),
    EqTri(EqTriTile),
    RightTri(RightTriTile),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TileFamily {
    Square,
    EqTri,
    RightTri,
}

impl Tile {
    pub fn id(&self) -> TileId {
        match self {
            Tile::Square(t) => t.id,
            Tile::EqTri(t) => t.id,
            Tile::RightTri(t) => t.id,
        }
    }

    pub fn family(&self) -> TileFamily {
        match self {
            Tile::Square(_) => TileFamily::Square,
            Tile::EqTri(_) => TileFamily::EqTri,
            Tile::RightTri(_) => TileFamily::RightTri,
        }
    }

    pub fn labels(&self) -> Vec<Label> {
        match self {
            Tile::Square(t) => t.sides.to_vec(),
            Tile::EqTri(t) => t.edges.to_vec(),
            Tile::RightTri(t) => vec![t.leg_l, t.leg_r, t.hyp],
        }
    }

    pub fn as_square(&self) -> Option<&SquareTile> {
        match self {
            Tile::Square(t) => Some(t),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LegPlacement {
    HypDown,
    HypUp,
}

/// Position of the right angle of a triangle in a hypotenuse-contact strip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Corner {
    Bl,
    Tl,
    Tr,
    Br,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// Quarter turns clockwise.
    Square { rot: u8 },
    EqTri { rot: u8, up: bool, flipped: bool },
    Leg(LegPlacement),
    Hyp(Corner),
}

impl Orientation {
    pub fn square(rot: u8) -> Orientation {
        Orientation::Square { rot }
    }
}

/// Labels exposed on each side of a placed tile; `None` where the shape has
/// no side facing that way. For hypotenuse-contact cells the diagonal is
/// reported on the side facing the partner triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct View {
    pub n: Option<Label>,
    pub e: Option<Label>,
    pub s: Option<Label>,
    pub w: Option<Label>,
}

impl View {
    fn square(sides: [Label; 4]) -> View {
        View { n: Some(sides[0]), e: Some(sides[1]), s: Some(sides[2]), w: Some(sides[3]) }
    }

    pub fn sides(&self) -> [Option<Label>; 4] {
        [self.n, self.e, self.s, self.w]
    }
}

/// Rotates square sides `rot` quarter turns clockwise.
pub fn rotate_square(sides: [Label; 4], rot: u8) -> [Label; 4] {
    let r = (rot % 4) as usize;
    std::array::from_fn(|k| sides[(k + 4 - r) % 4])
}

/// All orientations legal for a tile family; `allow_reflection` only matters
/// for equilateral triangles.
pub fn orientations(family: TileFamily, allow_reflection: bool) -> Vec<Orientation> {
    match family {
        TileFamily::Square => (0..4).map(Orientation::square).collect(),
        TileFamily::EqTri => {
            let flips: &[bool] = if allow_reflection { &[false, true] } else { &[false] };
            let mut out = Vec::new();
            for &up in &[true, false] {
                for &flipped in flips {
                    for rot in 0..3 {
                        out.push(Orientation::EqTri { rot, up, flipped });
                    }
                }
            }
            out
        }
        TileFamily::RightTri => vec![
            Orientation::Leg(LegPlacement::HypDown),
            Orientation::Leg(LegPlacement::HypUp),
            Orientation::Hyp(Corner::Bl),
            Orientation::Hyp(Corner::Tl),
            Orientation::Hyp(Corner::Tr),
            Orientation::Hyp(Corner::Br),
        ],
    }
}

pub fn orient(tile: &Tile, o: Orientation, allow_reflection: bool) -> Result<View> {
    match (tile, o) {
        (Tile::Square(t), Orientation::Square { rot }) if rot < 4 => {
            Ok(View::square(rotate_square(t.sides, rot)))
        }
        (Tile::EqTri(t), Orientation::EqTri { rot, up, flipped }) if rot < 3 => {
            if flipped && !allow_reflection {
                return Err(Error::IllegalOrientation(format!(
                    "tile {} flipped while reflection is disabled",
                    t.id
                )));
            }
            let cyc = if flipped { [t.edges[0], t.edges[2], t.edges[1]] } else { t.edges };
            let r = rot as usize;
            let slot = |k: usize| Some(cyc[(k + r) % 3]);
            // Clockwise slots: up = (west, east, south), down = (west, north, east).
            Ok(if up {
                View { w: slot(0), e: slot(1), s: slot(2), n: None }
            } else {
                View { w: slot(0), n: slot(1), e: slot(2), s: None }
            })
        }
        (Tile::RightTri(t), Orientation::Leg(p)) => Ok(match p {
            LegPlacement::HypDown => View { w: Some(t.leg_l), e: Some(t.leg_r), s: Some(t.hyp), n: None },
            LegPlacement::HypUp => View { w: Some(t.leg_r), e: Some(t.leg_l), n: Some(t.hyp), s: None },
        }),
        (Tile::RightTri(t), Orientation::Hyp(c)) => {
            let (l, r, h) = (Some(t.leg_l), Some(t.leg_r), Some(t.hyp));
            Ok(match c {
                Corner::Bl => View { s: l, w: r, e: h, n: None },
                Corner::Tl => View { w: l, n: r, e: h, s: None },
                Corner::Tr => View { n: l, e: r, w: h, s: None },
                Corner::Br => View { e: l, s: r, w: h, n: None },
            })
        }
        _ => Err(Error::IllegalOrientation(format!(
            "{o:?} does not apply to tile {}",
            tile.id()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sq(n: &str, e: &str, s: &str, w: &str) -> Tile {
        Tile::Square(SquareTile::new(0, Label::color(n), Label::color(e), Label::color(s), Label::color(w)))
    }

    #[test]
    fn half_turn_swaps_opposite_sides() {
        let v = orient(&sq("b", "c", "d", "a"), Orientation::square(2), false).unwrap();
        assert_eq!(v.sides(), [Some(Label::color("d")), Some(Label::color("a")), Some(Label::color("b")), Some(Label::color("c"))]);
        let v = orient(&sq("b", "c", "d", "a"), Orientation::square(0), false).unwrap();
        assert_eq!(v.n, Some(Label::color("b")));
        assert_eq!(v.w, Some(Label::color("a")));
    }

    #[test]
    fn quarter_turn_moves_west_to_north() {
        let v = orient(&sq("n", "e", "s", "w"), Orientation::square(1), false).unwrap();
        assert_eq!(v.n, Some(Label::color("w")));
        assert_eq!(v.e, Some(Label::color("n")));
    }

    #[test]
    fn square_rotations_compose() {
        let sides = [Label::Num(1), Label::Num(2), Label::Num(3), Label::Num(4)];
        for a in 0..4 {
            for b in 0..4 {
                assert_eq!(rotate_square(rotate_square(sides, a), b), rotate_square(sides, (a + b) % 4));
            }
            assert_eq!(rotate_square(rotate_square(sides, a), (4 - a) % 4), sides);
        }
    }

    #[test]
    fn hyp_up_swaps_legs() {
        let t = Tile::RightTri(RightTriTile { id: 0, leg_l: Label::color("u"), leg_r: Label::color("v"), hyp: Label::color("h") });
        let v = orient(&t, Orientation::Leg(LegPlacement::HypUp), false).unwrap();
        assert_eq!((v.w, v.e), (Some(Label::color("v")), Some(Label::color("u"))));
    }

    #[test]
    fn flip_needs_reflection_flag() {
        let t = Tile::EqTri(EqTriTile { id: 3, edges: [Label::Num(1), Label::Num(2), Label::Num(3)] });
        let o = Orientation::EqTri { rot: 0, up: true, flipped: true };
        assert!(orient(&t, o, false).is_err());
        assert!(orient(&t, o, true).is_ok());
        assert!(orient(&t, Orientation::square(0), true).is_err());
    }

    #[test]
    fn triangle_orientations_are_distinct_views() {
        let t = Tile::EqTri(EqTriTile { id: 0, edges: [Label::Num(1), Label::Num(2), Label::Num(3)] });
        for refl in [false, true] {
            let os = orientations(TileFamily::EqTri, refl);
            let views: std::collections::HashSet<_> =
                os.iter().map(|&o| orient(&t, o, refl).unwrap()).collect();
            assert_eq!(views.len(), os.len());
        }
    }
}
