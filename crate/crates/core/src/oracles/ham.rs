use crate::error::{Error, Result};
use crate::euler::{AnyGraph, EdgeId, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HamMode {
    Cycle,
    Path,
}

struct Search {
    n: usize,
    mode: HamMode,
    start: VertexId,
    target: Option<VertexId>,
    /// Arcs (edge id, head) leaving each vertex, loops dropped.
    out: Vec<Vec<(EdgeId, VertexId)>>,
    /// Arcs (edge id, tail) entering each vertex, loops dropped.
    inc: Vec<Vec<(EdgeId, VertexId)>>,
    visited: Vec<bool>,
    in_opts: Vec<usize>,
    out_opts: Vec<usize>,
    zero_out: usize,
    count: u64,
    stop_early: bool,
    path: Vec<EdgeId>,
    first: Option<Vec<EdgeId>>,
}

impl Search {
    fn new(n: usize, arcs: &[(EdgeId, VertexId, VertexId)], mode: HamMode, start: VertexId, target: Option<VertexId>) -> Search {
        let mut out = vec![Vec::new(); n];
        let mut inc = vec![Vec::new(); n];
        for &(e, a, b) in arcs {
            if a != b {
                out[a].push((e, b));
                inc[b].push((e, a));
            }
        }
        let mut s = Search {
            n,
            mode,
            start,
            target,
            out,
            inc,
            visited: vec![false; n],
            in_opts: vec![0; n],
            out_opts: vec![0; n],
            zero_out: 0,
            count: 0,
            stop_early: false,
            path: Vec::new(),
            first: None,
        };
        s.visited[start] = true;
        for w in 0..n {
            s.in_opts[w] = s.inc[w].len();
            s.out_opts[w] = s.out[w].iter().filter(|&&(_, u)| u != start || mode == HamMode::Cycle).count();
            if w != start && s.out_opts[w] == 0 {
                s.zero_out += 1;
            }
        }
        s
    }

    /// Vertices other than the designated end that may lack an exit.
    fn zero_out_ok(&self) -> bool {
        match (self.mode, self.target) {
            (HamMode::Cycle, _) => self.zero_out == 0,
            (HamMode::Path, Some(t)) => self.zero_out == usize::from(!self.visited[t] && self.out_opts[t] == 0),
            (HamMode::Path, None) => self.zero_out <= 1,
        }
    }

    fn feasible_start(&self) -> bool {
        (0..self.n).all(|w| w == self.start || self.in_opts[w] > 0) && self.zero_out_ok()
    }

    fn dfs(&mut self, cur: VertexId, depth: usize, last_edge: Option<EdgeId>) -> Result<()> {
        if self.first.is_some() && self.count > 0 && self.stop_early {
            return Ok(());
        }
        if depth == self.n {
            let closing: Vec<EdgeId> = match self.mode {
                HamMode::Path if self.target.map_or(true, |t| t == cur) => vec![usize::MAX],
                HamMode::Path => vec![],
                HamMode::Cycle => self.out[cur]
                    .iter()
                    .filter(|&&(e, u)| u == self.start && Some(e) != last_edge)
                    .map(|&(e, _)| e)
                    .collect(),
            };
            if self.first.is_none() {
                if let Some(&e) = closing.first() {
                    let mut p = self.path.clone();
                    if e != usize::MAX {
                        p.push(e);
                    }
                    self.first = Some(p);
                }
            }
            self.count = self.count.checked_add(closing.len() as u64).ok_or(Error::Overflow)?;
            return Ok(());
        }
        for i in 0..self.out[cur].len() {
            let (e, w) = self.out[cur][i];
            if self.visited[w] || (self.target == Some(w) && depth + 1 < self.n) {
                continue;
            }
            let mut ok = true;
            self.visited[w] = true;
            for j in 0..self.out[cur].len() {
                let (_, x) = self.out[cur][j];
                if !self.visited[x] {
                    self.in_opts[x] -= 1;
                    ok &= self.in_opts[x] > 0;
                }
            }
            if self.out_opts[w] == 0 {
                self.zero_out -= 1;
            }
            for j in 0..self.inc[w].len() {
                let (_, y) = self.inc[w][j];
                if !self.visited[y] {
                    self.out_opts[y] -= 1;
                    if self.out_opts[y] == 0 {
                        self.zero_out += 1;
                    }
                }
            }
            if ok && self.zero_out_ok() {
                self.path.push(e);
                self.dfs(w, depth + 1, Some(e))?;
                self.path.pop();
            }
            for j in 0..self.inc[w].len() {
                let (_, y) = self.inc[w][j];
                if !self.visited[y] {
                    if self.out_opts[y] == 0 {
                        self.zero_out -= 1;
                    }
                    self.out_opts[y] += 1;
                }
            }
            if self.out_opts[w] == 0 {
                self.zero_out += 1;
            }
            for j in 0..self.out[cur].len() {
                let (_, x) = self.out[cur][j];
                if !self.visited[x] {
                    self.in_opts[x] += 1;
                }
            }
            self.visited[w] = false;
        }
        Ok(())
    }
}

fn run(
    g: AnyGraph,
    mode: HamMode,
    s: Option<VertexId>,
    t: Option<VertexId>,
    stop_early: bool,
) -> Result<(u64, Option<Vec<EdgeId>>)> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok((0, None));
    }
    let mut arcs: Vec<(EdgeId, VertexId, VertexId)> = Vec::new();
    for (e, &(a, b)) in g.edges().iter().enumerate() {
        arcs.push((e, a, b));
        if !g.directed() {
            arcs.push((e, b, a));
        }
    }
    if n == 1 {
        let loops: Vec<EdgeId> = (0..g.edges().len()).filter(|&e| g.edges()[e].0 == g.edges()[e].1).collect();
        return Ok(match mode {
            HamMode::Path => (1, Some(Vec::new())),
            HamMode::Cycle => (loops.len() as u64, loops.first().map(|&e| vec![e])),
        });
    }
    let starts: Vec<VertexId> = match (mode, s) {
        (HamMode::Cycle, _) => vec![0],
        (HamMode::Path, Some(s)) => vec![s],
        (HamMode::Path, None) => (0..n).collect(),
    };
    let mut total: u64 = 0;
    let mut first = None;
    for st in starts {
        if mode == HamMode::Path && t == Some(st) {
            continue;
        }
        let mut search = Search::new(n, &arcs, mode, st, if mode == HamMode::Path { t } else { None });
        search.stop_early = stop_early;
        if search.feasible_start() {
            search.dfs(st, 1, None)?;
        }
        total = total.checked_add(search.count).ok_or(Error::Overflow)?;
        if first.is_none() {
            first = search.first;
        }
        if stop_early && first.is_some() {
            break;
        }
    }
    let halve = !g.directed() && (mode == HamMode::Cycle || (s.is_none() && t.is_none()));
    Ok((if halve { total / 2 } else { total }, first))
}

/// Counts Hamiltonian cycles or paths. Parallel edges give distinct objects.
/// Undirected cycles, and undirected paths with both ends free, are counted
/// once rather than once per direction.
pub fn count_ham(g: AnyGraph, mode: HamMode, s: Option<VertexId>, t: Option<VertexId>) -> Result<u64> {
    run(g, mode, s, t, false).map(|r| r.0)
}

/// Some Hamiltonian cycle or path as its edge ids in traversal order
/// (a cycle starts at vertex 0).
pub fn find_ham(g: AnyGraph, mode: HamMode, s: Option<VertexId>, t: Option<VertexId>) -> Result<Option<Vec<EdgeId>>> {
    run(g, mode, s, t, true).map(|r| r.1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::euler::{MultiDigraph, MultiGraph};

    #[test]
    fn directed_triangle_and_complete_digraph() {
        let c3 = MultiDigraph::with_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(count_ham(AnyGraph::Directed(&c3), HamMode::Cycle, None, None).unwrap(), 1);
        let k3 = MultiDigraph::with_edges(3, &[(0, 1), (1, 0), (1, 2), (2, 1), (0, 2), (2, 0)]);
        assert_eq!(count_ham(AnyGraph::Directed(&k3), HamMode::Cycle, None, None).unwrap(), 2);
    }

    #[test]
    fn undirected_triangle_paths() {
        let k3 = MultiGraph::with_edges(3, &[(0, 1), (1, 2), (2, 0)]);
        let g = AnyGraph::Undirected(&k3);
        assert_eq!(count_ham(g, HamMode::Path, Some(0), Some(2)).unwrap(), 1);
        assert_eq!(count_ham(g, HamMode::Cycle, None, None).unwrap(), 1);
        assert_eq!(count_ham(g, HamMode::Path, None, None).unwrap(), 3);
    }

    #[test]
    fn parallel_edges_are_distinct() {
        let g = MultiGraph::with_edges(2, &[(0, 1), (0, 1)]);
        assert_eq!(count_ham(AnyGraph::Undirected(&g), HamMode::Cycle, None, None).unwrap(), 1);
        let d = MultiDigraph::with_edges(2, &[(0, 1), (0, 1), (1, 0)]);
        assert_eq!(count_ham(AnyGraph::Directed(&d), HamMode::Cycle, None, None).unwrap(), 2);
    }

    #[test]
    fn matches_plain_enumeration_on_k4() {
        let mut edges = Vec::new();
        for a in 0..4 {
            for b in 0..4 {
                if a != b {
                    edges.push((a, b));
                }
            }
        }
        let k4 = MultiDigraph::with_edges(4, &edges);
        // (4-1)! directed Hamiltonian cycles; 4! paths between any ordered ends.
        assert_eq!(count_ham(AnyGraph::Directed(&k4), HamMode::Cycle, None, None).unwrap(), 6);
        assert_eq!(count_ham(AnyGraph::Directed(&k4), HamMode::Path, None, None).unwrap(), 24);
        assert_eq!(count_ham(AnyGraph::Directed(&k4), HamMode::Path, Some(0), Some(3)).unwrap(), 2);
        let c = find_ham(AnyGraph::Directed(&k4), HamMode::Cycle, None, None).unwrap().unwrap();
        assert_eq!(c.len(), 4);
        let p = find_ham(AnyGraph::Directed(&k4), HamMode::Path, Some(0), Some(3)).unwrap().unwrap();
        assert_eq!((k4.edges[p[0]].0, k4.edges[p[2]].1), (0, 3));
    }
}
