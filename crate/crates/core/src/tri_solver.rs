//! Leg-contact right-triangle strips via antidirected Eulerian trails.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::euler::{antidirected_eulerian, ft_antidirected_eulerian, Dir, MultiDigraph, PartitionSystem};
use crate::model::{
    Acute, BoardSpec, Color, CompatRule, Instance, Label, LegPlacement, Orientation, Placement, RightTriTile, Sign,
    Solution, Tile,
};

/// Leg colors as vertices, one edge `legL -> legR` per tile (edge id = tile
/// position). Signed tiles also get the four sign groups at every color.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LegGraph {
    pub graph: MultiDigraph,
    pub partition: Option<PartitionSystem>,
    pub colors: Vec<Color>,
}

/// Group slot at a color: outgoing +c, outgoing −c, incoming +c, incoming −c.
/// Outgoing groups come first so a self-loop's first listing is its tail.
fn group_slot(incoming: bool, sign: Sign) -> usize {
    match (incoming, sign) {
        (false, Sign::Plus) => 0,
        (false, Sign::Minus) => 1,
        (true, Sign::Plus) => 2,
        (true, Sign::Minus) => 3,
    }
}

pub fn to_digraph(tiles: &[RightTriTile]) -> Result<LegGraph> {
    let mut index: HashMap<Color, usize> = HashMap::new();
    let mut colors = Vec::new();
    let mut vertex = |l: Label| -> Result<usize> {
        let c = match l {
            Label::Unsigned(c) | Label::Signed(c, _) => c,
            Label::Num(_) => return Err(Error::FamilyMismatch(format!("numeric leg label {l}"))),
        };
        Ok(*index.entry(c).or_insert_with(|| {
            colors.push(c);
            colors.len() - 1
        }))
    };
    let mut edges = Vec::with_capacity(tiles.len());
    for t in tiles {
        edges.push((vertex(t.leg_l)?, vertex(t.leg_r)?));
    }
    let signed = tiles.iter().any(|t| matches!(t.leg_l, Label::Signed(..)));
    let partition = if signed {
        let mut groups = vec![vec![Vec::new(); 4]; colors.len()];
        for (e, t) in tiles.iter().enumerate() {
            let (Label::Signed(_, sl), Label::Signed(_, sr)) = (t.leg_l, t.leg_r) else {
                return Err(Error::FamilyMismatch(format!("tile {} mixes signed and unsigned legs", t.id)));
            };
            groups[edges[e].0][group_slot(false, sl)].push(e);
            groups[edges[e].1][group_slot(true, sr)].push(e);
        }
        Some(PartitionSystem { groups })
    } else {
        None
    };
    Ok(LegGraph { graph: MultiDigraph::with_edges(colors.len(), &edges), partition, colors })
}

fn dir_of(a: Acute) -> Dir {
    match a {
        Acute::Bottom => Dir::Forward,
        Acute::Top => Dir::Backward,
    }
}

/// Solves a 1×n leg-contact strip, or returns `None` when it has no
/// solution. A forward step places a tile hypotenuse down, a backward step
/// places it turned half a turn, hypotenuse up.
pub fn solve_leg_contact(inst: &Instance) -> Result<Option<Solution>> {
    inst.validate()?;
    let BoardSpec::LegStrip { len, left_acute } = inst.board else {
        return Err(Error::FamilyMismatch(format!("expected a leg-contact strip, got {:?}", inst.board)));
    };
    if !matches!(inst.rule, CompatRule::UnsignedEq | CompatRule::SignedOpp) {
        return Err(Error::FamilyMismatch(format!("rule {:?} on a triangle strip", inst.rule)));
    }
    let tiles: Vec<RightTriTile> = inst
        .tiles
        .iter()
        .map(|t| match t {
            Tile::RightTri(r) => *r,
            _ => unreachable!("validated family"),
        })
        .collect();
    let lg = to_digraph(&tiles)?;
    let start = Some(dir_of(left_acute));
    let end = Some(dir_of(BoardSpec::leg_right_acute(len, left_acute)));
    let trail = match &lg.partition {
        None => antidirected_eulerian(&lg.graph, start, end),
        Some(p) => ft_antidirected_eulerian(&lg.graph, p, start, end)?,
    };
    Ok(trail.map(|t| {
        Solution::Cells(
            t.iter()
                .map(|s| Placement {
                    tile: tiles[s.edge].id,
                    orient: Orientation::Leg(match s.dir {
                        Dir::Forward => LegPlacement::HypDown,
                        Dir::Backward => LegPlacement::HypUp,
                    }),
                })
                .collect(),
        )
    }))
}
