use serde::{Deserialize, Serialize};

use super::label::{CompatRule, Label};
use super::tile::{Orientation, Tile, TileFamily, TileId};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Points {
    Up,
    Down,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Acute {
    Top,
    Bottom,
}

impl Acute {
    pub fn flip(self) -> Acute {
        match self {
            Acute::Top => Acute::Bottom,
            Acute::Bottom => Acute::Top,
        }
    }
}

/// Fixed tile of a rooted shapeless instance: it sits at the origin with the
/// given rotation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    pub tile: TileId,
    pub rot: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoardSpec {
    Rect {
        rows: usize,
        cols: usize,
    },
    Strip {
        len: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        left: Option<Label>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        right: Option<Label>,
    },
    EqTriStrip {
        len: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        left: Option<Label>,
        first_points: Points,
    },
    LegStrip {
        len: usize,
        left_acute: Acute,
    },
    /// `len` triangles pairing into `len / 2` squares.
    HypStrip {
        len: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        left: Option<Label>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        right: Option<Label>,
    },
    Shapeless {
        #[serde(default, skip_serializing_if = "Option::is_none")]
        root: Option<Root>,
    },
}

impl BoardSpec {
    pub fn strip(len: usize) -> BoardSpec {
        BoardSpec::Strip { len, left: None, right: None }
    }

    /// Number of cells, or `None` for shapeless boards.
    pub fn capacity(&self) -> Option<usize> {
        match *self {
            BoardSpec::Rect { rows, cols } => Some(rows * cols),
            BoardSpec::Strip { len, .. }
            | BoardSpec::EqTriStrip { len, .. }
            | BoardSpec::LegStrip { len, .. }
            | BoardSpec::HypStrip { len, .. } => Some(len),
            BoardSpec::Shapeless { .. } => None,
        }
    }

    pub fn tile_family(&self) -> TileFamily {
        match self {
            BoardSpec::Rect { .. } | BoardSpec::Strip { .. } | BoardSpec::Shapeless { .. } => TileFamily::Square,
            BoardSpec::EqTriStrip { .. } => TileFamily::EqTri,
            BoardSpec::LegStrip { .. } | BoardSpec::HypStrip { .. } => TileFamily::RightTri,
        }
    }

    /// Acute-angle position at the right end of a leg-contact strip. The
    /// placements alternate, so the last tile is hyp-down exactly when the
    /// first is and `len` is odd; a hyp-down tile has its right acute angle
    /// at the bottom.
    pub fn leg_right_acute(len: usize, left_acute: Acute) -> Acute {
        if len % 2 == 1 {
            left_acute
        } else {
            left_acute.flip()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub board: BoardSpec,
    pub rule: CompatRule,
    #[serde(default)]
    pub allow_reflection: bool,
    pub tiles: Vec<Tile>,
}

impl Instance {
    pub fn new(board: BoardSpec, rule: CompatRule, tiles: Vec<Tile>) -> Instance {
        Instance { board, rule, allow_reflection: false, tiles }
    }

    pub fn tile(&self, id: TileId) -> Option<&Tile> {
        self.tiles.iter().find(|t| t.id() == id)
    }

    /// Every label used anywhere: tiles first, then boundaries.
    pub fn labels(&self) -> Vec<Label> {
        let mut out: Vec<Label> = self.tiles.iter().flat_map(|t| t.labels()).collect();
        match &self.board {
            BoardSpec::Strip { left, right, .. } | BoardSpec::HypStrip { left, right, .. } => {
                out.extend(left.iter().chain(right.iter()).copied());
            }
            BoardSpec::EqTriStrip { left, .. } => out.extend(left.iter().copied()),
            _ => {}
        }
        out
    }

    /// Checks family consistency, capacity and unique tile ids.
    pub fn validate(&self) -> Result<()> {
        let fam = self.board.tile_family();
        if let Some(t) = self.tiles.iter().find(|t| t.family() != fam) {
            return Err(Error::FamilyMismatch(format!("tile {} does not fit board {:?}", t.id(), self.board)));
        }
        let rf = self.rule.family();
        if let Some(l) = self.labels().into_iter().find(|l| l.family() != rf) {
            return Err(Error::FamilyMismatch(format!("label {l} under rule {:?}", self.rule)));
        }
        if let Some(cap) = self.board.capacity() {
            if cap != self.tiles.len() {
                return Err(Error::CapacityMismatch { expected: cap, found: self.tiles.len() });
            }
        }
        if let BoardSpec::HypStrip { len, .. } = self.board {
            if len % 2 != 0 {
                return Err(Error::Precondition("hypotenuse strip length must be even".into()));
            }
        }
        let mut ids: Vec<TileId> = self.tiles.iter().map(|t| t.id()).collect();
        ids.sort_unstable();
        if ids.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Precondition("tile ids are not unique".into()));
        }
        if let BoardSpec::Shapeless { root: Some(r) } = self.board {
            if self.tile(r.tile).is_none() || r.rot >= 4 {
                return Err(Error::Precondition("root tile missing or rotation out of range".into()));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Placement {
    pub tile: TileId,
    pub orient: Orientation,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeCell {
    pub x: i32,
    pub y: i32,
    pub tile: TileId,
    pub orient: Orientation,
}

/// Shaped boards list one placement per cell in reading order; shapeless
/// boards list occupied grid cells (x to the right, y downward).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Solution {
    Cells(Vec<Placement>),
    Free(Vec<FreeCell>),
}

impl Solution {
    /// Sorts free cells by position so equal placements compare equal.
    pub fn normalized(mut self) -> Solution {
        if let Solution::Free(cells) = &mut self {
            cells.sort_by_key(|c| (c.y, c.x));
        }
        self
    }
}
