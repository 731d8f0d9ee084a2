use super::{GameOutcome, GeoGraph, GeoInstance, GeoRule, Move, Partizan, Player};
use crate::error::{Error, Result};
use crate::euler::{EdgeId, VertexId};

/// Two-coloring of an undirected graph, or None if some cycle is odd.
pub(crate) fn two_color(n: usize, edges: &[(VertexId, VertexId)]) -> Option<Vec<bool>> {
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let mut side: Vec<Option<bool>> = vec![None; n];
    for root in 0..n {
        if side[root].is_some() {
            continue;
        }
        side[root] = Some(false);
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            let sv = side[v].expect("colored");
            for &w in &adj[v] {
                match side[w] {
                    None => {
                        side[w] = Some(!sv);
                        stack.push(w);
                    }
                    Some(sw) if sw == sv => return None,
                    _ => {}
                }
            }
        }
    }
    Some(side.into_iter().map(|s| s.expect("colored")).collect())
}

/// Maximum matching of a bipartite graph by augmenting paths. `left[v]`
/// tells which side v is on; vertices in `skip` are left out. Returns the
/// matched edge at each vertex.
pub fn max_bipartite_matching(
    n: usize,
    edges: &[(VertexId, VertexId)],
    left: &[bool],
    skip: Option<VertexId>,
) -> Vec<Option<EdgeId>> {
    let mut adj: Vec<Vec<(EdgeId, VertexId)>> = vec![Vec::new(); n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        if a == b || Some(a) == skip || Some(b) == skip {
            continue;
        }
        let (l, r) = if left[a] { (a, b) } else { (b, a) };
        adj[l].push((e, r));
    }
    let mut mate: Vec<Option<EdgeId>> = vec![None; n];
    fn augment(
        v: VertexId,
        adj: &[Vec<(EdgeId, VertexId)>],
        edges: &[(VertexId, VertexId)],
        mate: &mut Vec<Option<EdgeId>>,
        seen: &mut Vec<bool>,
    ) -> bool {
        for &(e, r) in &adj[v] {
            if seen[r] {
                continue;
            }
            seen[r] = true;
            let free = match mate[r] {
                None => true,
                Some(f) => {
                    let (a, b) = edges[f];
                    let l = if a == r { b } else { a };
                    augment(l, adj, edges, mate, seen)
                }
            };
            if free {
                mate[r] = Some(e);
                mate[v] = Some(e);
                return true;
            }
        }
        false
    }
    for v in 0..n {
        if left[v] && Some(v) != skip {
            let mut seen = vec![false; n];
            augment(v, &adj, edges, &mut mate, &mut seen);
        }
    }
    mate
}

/// Undirected vertex geography on a bipartite graph, or undirected
/// vertex-partizan vertex geography, decided by matchings: P1 wins exactly
/// when every maximum matching covers the start vertex.
pub fn solve_geography_matching(g: &GeoInstance) -> Result<GameOutcome> {
    g.validate()?;
    let GeoGraph::Undirected(graph) = &g.graph else {
        return Err(Error::Precondition("matching route needs an undirected graph".into()));
    };
    if g.rule != GeoRule::Vertex {
        return Err(Error::Precondition("matching route needs the vertex rule".into()));
    }
    let n = graph.vertex_count;
    let (edges, left): (Vec<(VertexId, VertexId)>, Vec<bool>) = match &g.partizan {
        Partizan::None => {
            let side = two_color(n, &graph.edges)
                .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
            (graph.edges.clone(), side)
        }
        Partizan::VertexColors(c) => {
            // The start is never re-entered, so it behaves as P2's vertex; an
            // edge between two vertices of one color can never be played.
            let mut c = c.clone();
            c[g.start] = Player::P2;
            let kept = graph.edges.iter().map(|&(a, b)| if c[a] != c[b] { (a, b) } else { (a, a) }).collect();
            (kept, c.iter().map(|&p| p == Player::P1).collect())
        }
        Partizan::EdgeColors(_) => {
            return Err(Error::Precondition("matching route does not handle edge colors".into()))
        }
    };
    let full = max_bipartite_matching(n, &edges, &left, None);
    let without = max_bipartite_matching(n, &edges, &left, Some(g.start));
    let size = |m: &[Option<EdgeId>]| m.iter().filter(|x| x.is_some()).count();
    if size(&without) < size(&full) {
        Ok(GameOutcome { winner: Player::P1, principal: full[g.start].map(Move::Edge) })
    } else {
        Ok(GameOutcome { winner: Player::P2, principal: None })
    }
}
