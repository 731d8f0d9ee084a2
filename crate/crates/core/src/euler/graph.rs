use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Undirected multigraph; edge ids are positions in `edges`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MultiGraph {
    pub vertex_count: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

/// Directed multigraph; each edge is (tail, head).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct MultiDigraph {
    pub vertex_count: usize,
    pub edges: Vec<(VertexId, VertexId)>,
}

/// Which end of an edge a traversal leaves from or arrives at. For directed
/// edges `First` is the tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum End {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dir {
    Forward,
    Backward,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
        }
    }
}

/// One traversed edge. `Forward` runs from the first endpoint to the second.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Step {
    pub edge: EdgeId,
    pub dir: Dir,
}

impl Step {
    pub fn new(edge: EdgeId, dir: Dir) -> Step {
        Step { edge, dir }
    }

    pub fn reversed(self) -> Step {
        Step { edge: self.edge, dir: self.dir.flip() }
    }

    /// Ends left from and arrived at.
    pub fn ends(self) -> (End, End) {
        match self.dir {
            Dir::Forward => (End::First, End::Second),
            Dir::Backward => (End::Second, End::First),
        }
    }
}

pub type Trail = Vec<Step>;

/// Reverses a trail: steps in opposite order, each traversed the other way.
pub fn reverse_trail(t: &[Step]) -> Trail {
    t.iter().rev().map(|s| s.reversed()).collect()
}

fn endpoint(edges: &[(VertexId, VertexId)], s: Step) -> (VertexId, VertexId) {
    let (a, b) = edges[s.edge];
    match s.dir {
        Dir::Forward => (a, b),
        Dir::Backward => (b, a),
    }
}

macro_rules! common_graph_impl {
    ($t:ty) => {
        impl $t {
            pub fn new(vertex_count: usize) -> Self {
                Self { vertex_count, edges: Vec::new() }
            }

            pub fn with_edges(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Self {
                Self { vertex_count, edges: edges.to_vec() }
            }

            pub fn add_vertex(&mut self) -> VertexId {
                self.vertex_count += 1;
                self.vertex_count - 1
            }

            pub fn add_edge(&mut self, a: VertexId, b: VertexId) -> EdgeId {
                self.edges.push((a, b));
                self.edges.len() - 1
            }

            pub fn edge_count(&self) -> usize {
                self.edges.len()
            }

            /// The vertex at the given end of an edge.
            pub fn end_vertex(&self, e: EdgeId, end: End) -> VertexId {
                match end {
                    End::First => self.edges[e].0,
                    End::Second => self.edges[e].1,
                }
            }

            /// (from, to) of a traversal step.
            pub fn step_endpoints(&self, s: Step) -> (VertexId, VertexId) {
                endpoint(&self.edges, s)
            }

            /// Edge ends incident to each vertex, in edge-id order; a self-loop
            /// contributes both of its ends.
            pub fn incidence(&self) -> Vec<Vec<(EdgeId, End)>> {
                let mut inc = vec![Vec::new(); self.vertex_count];
                for (e, &(a, b)) in self.edges.iter().enumerate() {
                    inc[a].push((e, End::First));
                    inc[b].push((e, End::Second));
                }
                inc
            }

            pub fn validate(&self) -> Result<()> {
                match self.edges.iter().find(|&&(a, b)| a >= self.vertex_count || b >= self.vertex_count) {
                    Some(e) => Err(Error::Precondition(format!("edge {e:?} names a missing vertex"))),
                    None => Ok(()),
                }
            }

            /// Whether all edges lie in one connected component, ignoring
            /// direction and edge-free vertices.
            pub fn edges_connected(&self) -> bool {
                let mut uf: Vec<usize> = (0..self.vertex_count).collect();
                fn find(uf: &mut [usize], mut x: usize) -> usize {
                    while uf[x] != x {
                        uf[x] = uf[uf[x]];
                        x = uf[x];
                    }
                    x
                }
                for &(a, b) in &self.edges {
                    let (ra, rb) = (find(&mut uf, a), find(&mut uf, b));
                    uf[ra] = rb;
                }
                let mut root = None;
                for &(a, _) in &self.edges {
                    let r = find(&mut uf, a);
                    if *root.get_or_insert(r) != r {
                        return false;
                    }
                }
                true
            }
        }
    };
}

common_graph_impl!(MultiGraph);
common_graph_impl!(MultiDigraph);

impl MultiGraph {
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(a, b) in &self.edges {
            d[a] += 1;
            d[b] += 1;
        }
        d
    }
}

impl MultiDigraph {
    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(_, b) in &self.edges {
            d[b] += 1;
        }
        d
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for &(a, _) in &self.edges {
            d[a] += 1;
        }
        d
    }

    pub fn underlying(&self) -> MultiGraph {
        MultiGraph { vertex_count: self.vertex_count, edges: self.edges.clone() }
    }
}

/// Borrowed graph of either kind, for code that handles both.
#[derive(Debug, Clone, Copy)]
pub enum AnyGraph<'a> {
    Directed(&'a MultiDigraph),
    Undirected(&'a MultiGraph),
}

impl<'a> AnyGraph<'a> {
    pub fn directed(&self) -> bool {
        matches!(self, AnyGraph::Directed(_))
    }

    pub fn vertex_count(&self) -> usize {
        match self {
            AnyGraph::Directed(g) => g.vertex_count,
            AnyGraph::Undirected(g) => g.vertex_count,
        }
    }

    pub fn edges(&self) -> &'a [(VertexId, VertexId)] {
        match self {
            AnyGraph::Directed(g) => &g.edges,
            AnyGraph::Undirected(g) => &g.edges,
        }
    }
}

/// Per-vertex groups of incident edges. A group lists edge ids; a self-loop
/// is listed once per end (its first listing at the vertex is the first end).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct PartitionSystem {
    pub groups: Vec<Vec<Vec<EdgeId>>>,
}

impl PartitionSystem {
    /// Every incident edge end in its own group.
    pub fn singletons(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> PartitionSystem {
        let mut groups = vec![Vec::new(); vertex_count];
        for (e, &(a, b)) in edges.iter().enumerate() {
            groups[a].push(vec![e]);
            groups[b].push(vec![e]);
        }
        PartitionSystem { groups }
    }

    /// Group index for every edge end, checking that the groups at each vertex
    /// partition its incident ends. Indexed by edge, then by end.
    pub fn slot_groups(&self, vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Vec<[usize; 2]>> {
        if self.groups.len() != vertex_count {
            return Err(Error::InvalidPartition(format!(
                "{} vertex entries for {vertex_count} vertices",
                self.groups.len()
            )));
        }
        const UNSET: usize = usize::MAX;
        let mut out = vec![[UNSET; 2]; edges.len()];
        for (v, groups) in self.groups.iter().enumerate() {
            for (gi, group) in groups.iter().enumerate() {
                for &e in group {
                    let Some(&(a, b)) = edges.get(e) else {
                        return Err(Error::InvalidPartition(format!("edge {e} does not exist")));
                    };
                    let end = if a == v && out[e][0] == UNSET {
                        0
                    } else if b == v && out[e][1] == UNSET {
                        1
                    } else {
                        return Err(Error::InvalidPartition(format!("edge {e} listed too often at vertex {v}")));
                    };
                    out[e][end] = gi;
                }
            }
        }
        if let Some(e) = out.iter().position(|s| s[0] == UNSET || s[1] == UNSET) {
            return Err(Error::InvalidPartition(format!("edge {e} missing from its endpoint groups")));
        }
        Ok(out)
    }
}
