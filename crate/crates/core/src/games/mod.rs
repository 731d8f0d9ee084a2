//! Geography and the two-player 1×n edge-matching game.

mod geography;
mod match_game;
mod matching;

use serde::{Deserialize, Serialize};

use crate::euler::{EdgeId, MultiDigraph, MultiGraph, VertexId};
use crate::model::{CompatRule, Label, SquareTile, TileId};

pub use geography::solve_geography;
pub use match_game::solve_match_game;
pub use matching::{max_bipartite_matching, solve_geography_matching};
pub(crate) use matching::two_color;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Player {
    P1,
    P2,
}

impl Player {
    pub fn other(self) -> Player {
        match self {
            Player::P1 => Player::P2,
            Player::P2 => Player::P1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeoGraph {
    Directed(MultiDigraph),
    Undirected(MultiGraph),
}

impl GeoGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            GeoGraph::Directed(g) => g.vertex_count,
            GeoGraph::Undirected(g) => g.vertex_count,
        }
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        match self {
            GeoGraph::Directed(g) => &g.edges,
            GeoGraph::Undirected(g) => &g.edges,
        }
    }

    pub fn directed(&self) -> bool {
        matches!(self, GeoGraph::Directed(_))
    }

    /// Moves (edge, destination) available from `v`, ignoring use and colors.
    pub fn moves_from(&self, v: VertexId) -> Vec<(EdgeId, VertexId)> {
        let mut out = Vec::new();
        for (e, &(a, b)) in self.edges().iter().enumerate() {
            if a == v {
                out.push((e, b));
            } else if b == v && !self.directed() {
                out.push((e, a));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GeoRule {
    /// No vertex may be visited twice; the start counts as visited.
    Vertex,
    /// No edge may be used twice; vertices may repeat.
    Edge,
}

/// Which player may use each vertex (entered by the move) or each edge.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Partizan {
    #[default]
    None,
    VertexColors(Vec<Player>),
    EdgeColors(Vec<Player>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeoInstance {
    pub graph: GeoGraph,
    pub start: VertexId,
    pub rule: GeoRule,
    #[serde(default)]
    pub partizan: Partizan,
}

impl GeoInstance {
    pub fn new(graph: GeoGraph, start: VertexId, rule: GeoRule) -> GeoInstance {
        GeoInstance { graph, start, rule, partizan: Partizan::None }
    }

    pub fn validate(&self) -> crate::Result<()> {
        let n = self.graph.vertex_count();
        if self.start >= n {
            return Err(crate::Error::Precondition(format!("start vertex {} out of range", self.start)));
        }
        if self.graph.edges().iter().any(|&(a, b)| a >= n || b >= n) {
            return Err(crate::Error::Precondition("edge endpoint out of range".into()));
        }
        match &self.partizan {
            Partizan::VertexColors(c) if c.len() != n => {
                Err(crate::Error::Precondition("vertex colors must cover every vertex".into()))
            }
            Partizan::EdgeColors(c) if c.len() != self.graph.edges().len() => {
                Err(crate::Error::Precondition("edge colors must cover every edge".into()))
            }
            _ => Ok(()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pools {
    Shared,
    PerPlayer { p1: Vec<TileId>, p2: Vec<TileId> },
}

/// Two players alternately place tiles left to right on a 1×n board, n being
/// the number of tiles. A player with no legal placement loses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameInstance {
    pub tiles: Vec<SquareTile>,
    pub left: Label,
    pub rule: CompatRule,
    pub pools: Pools,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Move {
    Edge(EdgeId),
    Tile { tile: TileId, rot: u8 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GameOutcome {
    pub winner: Player,
    /// A winning first move for P1, when P1 wins and has a move.
    pub principal: Option<Move>,
}
