//! Reductions between geography variants and into the 1×n matching game.

use serde::{Deserialize, Serialize};

use super::ham::vertex_triple;
use crate::error::{Error, Result};
use crate::euler::{MultiDigraph, MultiGraph};
use crate::games::{GameInstance, GeoGraph, GeoInstance, GeoRule, Partizan, Player, Pools};
use crate::model::{CompatRule, Label, SquareTile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PartizanMode {
    VertexFromBipartition,
    EdgeFromDirection,
    UndirectEdgePartizan,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PoolMode {
    Shared,
    PerPlayer,
}

/// Directed vertex geography as directed edge geography. Vertex v becomes a
/// central edge b_v -> c_v (ids n+v and v); edge e = u -> v becomes
/// c_u -> a_e -> b_v with a_e = 2n+e. The start keeps its id and has no
/// central edge, so it can never be re-entered.
pub fn vertex_geo_to_edge_geo(geo: &GeoInstance) -> Result<GeoInstance> {
    geo.validate()?;
    let GeoGraph::Directed(g) = &geo.graph else {
        return Err(Error::Precondition("vertex_geo_to_edge_geo needs a directed graph".into()));
    };
    if geo.rule != GeoRule::Vertex || geo.partizan != Partizan::None {
        return Err(Error::Precondition("vertex_geo_to_edge_geo needs impartial vertex geography".into()));
    }
    let n = g.vertex_count;
    let mut h = MultiDigraph::new(2 * n + g.edges.len());
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        h.add_edge(u, 2 * n + e);
        h.add_edge(2 * n + e, n + v);
    }
    for v in (0..n).filter(|&v| v != geo.start) {
        h.add_edge(n + v, v);
    }
    Ok(GeoInstance::new(GeoGraph::Directed(h), geo.start, GeoRule::Edge))
}

/// Vertex colors from the bipartition of the start's component: the start's
/// side is P2, the other side P1.
fn bipartition_colors(geo: &GeoInstance) -> Result<Vec<Player>> {
    let side = crate::games::two_color(geo.graph.vertex_count(), geo.graph.edges())
        .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    Ok(side.iter().map(|&s| if s == side[geo.start] { Player::P2 } else { Player::P1 }).collect())
}

/// Colors an impartial instance without changing the winner, or expands an
/// edge-partizan digraph into an undirected edge-partizan graph.
pub fn partizanize(geo: &GeoInstance, mode: PartizanMode) -> Result<GeoInstance> {
    geo.validate()?;
    match mode {
        PartizanMode::VertexFromBipartition => {
            if geo.partizan != Partizan::None {
                return Err(Error::Precondition("input is already partizan".into()));
            }
            let colors = bipartition_colors(geo)?;
            Ok(GeoInstance { partizan: Partizan::VertexColors(colors), ..geo.clone() })
        }
        PartizanMode::EdgeFromDirection => {
            if geo.partizan != Partizan::None || !geo.graph.directed() {
                return Err(Error::Precondition("edge_from_direction needs an impartial digraph".into()));
            }
            let colors = bipartition_colors(geo)?;
            let edges = geo.graph.edges().iter().map(|&(_, v)| colors[v]).collect();
            Ok(GeoInstance { partizan: Partizan::EdgeColors(edges), ..geo.clone() })
        }
        PartizanMode::UndirectEdgePartizan => undirect(geo),
    }
}

/// Edge u -> v of color P becomes u-x (P), x-y (other), y-v (P) and a leaf
/// y-l (other). Walking it backwards from v leaves P's opponent the leaf.
fn undirect(geo: &GeoInstance) -> Result<GeoInstance> {
    let (GeoGraph::Directed(g), Partizan::EdgeColors(colors)) = (&geo.graph, &geo.partizan) else {
        return Err(Error::Precondition("undirect_edge_partizan needs an edge-colored digraph".into()));
    };
    let mut h = MultiGraph::new(g.vertex_count);
    let mut out = Vec::new();
    for (&(u, v), &p) in g.edges.iter().zip(colors) {
        let (x, y, l) = (h.add_vertex(), h.add_vertex(), h.add_vertex());
        for (a, b, c) in [(u, x, p), (x, y, p.other()), (y, v, p), (y, l, p.other())] {
            h.add_edge(a, b);
            out.push(c);
        }
    }
    Ok(GeoInstance {
        graph: GeoGraph::Undirected(h),
        start: geo.start,
        rule: geo.rule,
        partizan: Partizan::EdgeColors(out),
    })
}

/// The 1×n matching game with the same winner. Edge geography gives one tile
/// per edge (signed -u/+v for digraphs, unsigned u/v otherwise) with unique
/// colors north and south. Directed vertex geography of degree at most 3
/// gives three signed tiles per reachable vertex, shared pool only.
pub fn geo_to_matching_game(geo: &GeoInstance, pools: PoolMode) -> Result<GameInstance> {
    geo.validate()?;
    match geo.rule {
        GeoRule::Edge => edge_game(geo, pools),
        GeoRule::Vertex => vertex_game(geo, pools),
    }
}

fn edge_game(geo: &GeoInstance, pools: PoolMode) -> Result<GameInstance> {
    let signed = geo.graph.directed();
    let (rule, lab) = if signed {
        (CompatRule::SignedOpp, Label::plus as fn(&str) -> Label)
    } else {
        (CompatRule::UnsignedEq, Label::color as fn(&str) -> Label)
    };
    let tiles: Vec<SquareTile> = geo
        .graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| {
            let w = if signed { Label::minus(&format!("v{u}")) } else { Label::color(&format!("v{u}")) };
            SquareTile::new(e as u32, lab(&format!("U{}", 2 * e)), lab(&format!("v{v}")), lab(&format!("U{}", 2 * e + 1)), w)
        })
        .collect();
    let pools = match (pools, &geo.partizan) {
        (PoolMode::Shared, Partizan::None) => Pools::Shared,
        (PoolMode::PerPlayer, Partizan::EdgeColors(c)) => {
            let of = |p| (0..c.len()).filter(|&e| c[e] == p).map(|e| e as u32).collect();
            Pools::PerPlayer { p1: of(Player::P1), p2: of(Player::P2) }
        }
        _ => return Err(Error::Precondition("shared pools need impartial play, per-player pools edge colors".into())),
    };
    Ok(GameInstance { tiles, left: lab(&format!("v{}", geo.start)), rule, pools })
}

fn vertex_game(geo: &GeoInstance, pools: PoolMode) -> Result<GameInstance> {
    let GeoGraph::Directed(g) = &geo.graph else {
        return Err(Error::Precondition("vertex geography game needs a directed graph".into()));
    };
    if pools != PoolMode::Shared || geo.partizan != Partizan::None {
        return Err(Error::Precondition("vertex geography game needs impartial play and a shared pool".into()));
    }
    let (ins, outs) = (g.in_degrees(), g.out_degrees());
    let s = geo.start;
    let mut tiles = Vec::new();
    let mut left = None;
    for v in 0..g.vertex_count {
        if ins[v] + outs[v] > 3 || ins[v] > 2 || outs[v] > 2 {
            return Err(Error::Precondition(format!("vertex {v} exceeds degree 3 or in/outdegree 2")));
        }
        let name = |e: usize| format!("e{e}");
        let mut vin: Vec<String> = (0..g.edges.len()).filter(|&e| g.edges[e].1 == v).map(name).collect();
        let mut vout: Vec<String> = (0..g.edges.len()).filter(|&e| g.edges[e].0 == v).map(name).collect();
        if vin.is_empty() {
            if v != s {
                continue;
            }
            vin.push(format!("d{v}_in"));
        }
        // Missing exits get dead colors: whoever must continue from one loses.
        let want = 3 - vin.len();
        for k in vout.len()..want {
            vout.push(format!("d{v}_{k}"));
        }
        let mut triple = vertex_triple(v, &vin, &vout, true);
        if v == s {
            triple.remove(0);
            left = Some(match vin.len() {
                1 => Label::minus(&format!("vI{v}")),
                _ => Label::plus(&format!("vI{v}")),
            });
        }
        for [n, e, s_, w] in triple {
            tiles.push(SquareTile::new(tiles.len() as u32, n, e, s_, w));
        }
    }
    let left = left.expect("start handled");
    Ok(GameInstance { tiles, left, rule: CompatRule::SignedOpp, pools: Pools::Shared })
}
