use std::collections::HashMap;

use super::{GameOutcome, GeoInstance, GeoRule, Move, Partizan, Player};
use crate::error::{Error, Result};
use crate::euler::{EdgeId, VertexId};

struct Solver<'a> {
    g: &'a GeoInstance,
    adj: Vec<Vec<(EdgeId, VertexId)>>,
    memo: HashMap<(VertexId, u128), bool>,
}

impl Solver<'_> {
    fn legal(&self, mover: Player, used: u128, e: EdgeId, w: VertexId) -> bool {
        let fresh = match self.g.rule {
            GeoRule::Vertex => used >> w & 1 == 0,
            GeoRule::Edge => used >> e & 1 == 0,
        };
        fresh
            && match &self.g.partizan {
                Partizan::None => true,
                Partizan::VertexColors(c) => c[w] == mover,
                Partizan::EdgeColors(c) => c[e] == mover,
            }
    }

    /// Whether the player about to move from `cur` wins.
    fn wins(&mut self, cur: VertexId, used: u128, mover: Player) -> bool {
        if let Some(&w) = self.memo.get(&(cur, used)) {
            return w;
        }
        let mut win = false;
        for i in 0..self.adj[cur].len() {
            let (e, w) = self.adj[cur][i];
            if !self.legal(mover, used, e, w) {
                continue;
            }
            let bit = match self.g.rule {
                GeoRule::Vertex => w,
                GeoRule::Edge => e,
            };
            if !self.wins(w, used | 1 << bit, mover.other()) {
                win = true;
                break;
            }
        }
        self.memo.insert((cur, used), win);
        win
    }
}

/// Exact winner by memoized search. P1 moves first from the start vertex.
pub fn solve_geography(g: &GeoInstance) -> Result<GameOutcome> {
    g.validate()?;
    let ids = match g.rule {
        GeoRule::Vertex => g.graph.vertex_count(),
        GeoRule::Edge => g.graph.edges().len(),
    };
    if ids > 128 {
        return Err(Error::Precondition("geography search supports at most 128 vertices or edges".into()));
    }
    let adj = (0..g.graph.vertex_count()).map(|v| g.graph.moves_from(v)).collect();
    let mut s = Solver { g, adj, memo: HashMap::new() };
    let used: u128 = match g.rule {
        GeoRule::Vertex => 1 << g.start,
        GeoRule::Edge => 0,
    };
    for i in 0..s.adj[g.start].len() {
        let (e, w) = s.adj[g.start][i];
        if !s.legal(Player::P1, used, e, w) {
            continue;
        }
        let bit = match g.rule {
            GeoRule::Vertex => w,
            GeoRule::Edge => e,
        };
        if !s.wins(w, used | 1 << bit, Player::P2) {
            return Ok(GameOutcome { winner: Player::P1, principal: Some(Move::Edge(e)) });
        }
    }
    Ok(GameOutcome { winner: Player::P2, principal: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{MultiDigraph, MultiGraph};
    use crate::games::GeoGraph;

    fn undirected(n: usize, e: &[(usize, usize)], rule: GeoRule) -> GeoInstance {
        GeoInstance::new(GeoGraph::Undirected(MultiGraph::with_edges(n, e)), 0, rule)
    }

    #[test]
    fn path_of_two_is_a_first_player_win() {
        let o = solve_geography(&undirected(2, &[(0, 1)], GeoRule::Vertex)).unwrap();
        assert_eq!(o.winner, Player::P1);
        assert_eq!(o.principal, Some(Move::Edge(0)));
    }

    #[test]
    fn isolated_start_loses() {
        assert_eq!(solve_geography(&undirected(1, &[], GeoRule::Vertex)).unwrap().winner, Player::P2);
        assert_eq!(solve_geography(&undirected(1, &[], GeoRule::Edge)).unwrap().winner, Player::P2);
    }

    #[test]
    fn directed_triangle() {
        // Vertex rule: P1 to 1, P2 to 2, P1 stuck. Edge rule: three moves, P1 last.
        let g = MultiDigraph::with_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let v = GeoInstance::new(GeoGraph::Directed(g.clone()), 0, GeoRule::Vertex);
        assert_eq!(solve_geography(&v).unwrap().winner, Player::P2);
        let e = GeoInstance::new(GeoGraph::Directed(g), 0, GeoRule::Edge);
        assert_eq!(solve_geography(&e).unwrap().winner, Player::P1);
    }

    #[test]
    fn partizan_colors_restrict_moves() {
        let mut g = undirected(2, &[(0, 1)], GeoRule::Vertex);
        g.partizan = Partizan::VertexColors(vec![Player::P2, Player::P2]);
        assert_eq!(solve_geography(&g).unwrap().winner, Player::P2);
        g.partizan = Partizan::EdgeColors(vec![Player::P1]);
        assert_eq!(solve_geography(&g).unwrap().winner, Player::P1);
    }
}
