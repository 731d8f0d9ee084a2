//! Positive one-in-three SAT to directed Hamiltonicity, and on to square
//! strips.

use super::formula::Cnf;
use crate::error::{Error, Result};
use crate::euler::{EdgeId, MultiDigraph, VertexId};
use crate::model::{BoardSpec, CompatRule, Instance, Label, SquareTile, Tile};

/// Directed gadget graph with the edges that encode each variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetGraph {
    pub graph: MultiDigraph,
    /// Entry edge of each variable's true side; a Hamiltonian cycle uses it
    /// exactly when the variable is true.
    pub var_true: Vec<EdgeId>,
    pub var_false: Vec<EdgeId>,
    pub clauses: Vec<Vec<VertexId>>,
}

/// Links two edges so that every Hamiltonian cycle uses exactly one of them.
/// Both edges are rerouted through six new vertices; the returned pair holds
/// the edges now ending at the old heads of `e1` and `e2`.
pub fn xor_edges(g: &mut MultiDigraph, e1: EdgeId, e2: EdgeId) -> (EdgeId, EdgeId) {
    let (_, v1) = g.edges[e1];
    let (_, v2) = g.edges[e2];
    let base = g.vertex_count;
    let v: Vec<VertexId> = (0..6).map(|_| g.add_vertex()).collect();
    debug_assert_eq!(v[0], base);
    for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 2)] {
        g.add_edge(v[a], v[b]);
    }
    g.edges[e1].1 = v[0];
    g.edges[e2].1 = v[4];
    let out1 = g.add_edge(v[5], v1);
    let out2 = g.add_edge(v[1], v2);
    (out1, out2)
}

/// Vertex order: x1 x2 x3 y1 y2 y3 c1..c6. Returns the vertices and the three
/// literal edges x_i -> y_i.
fn clause_gadget(g: &mut MultiDigraph) -> (Vec<VertexId>, [EdgeId; 3]) {
    let v: Vec<VertexId> = (0..12).map(|_| g.add_vertex()).collect();
    let (x, y, c) = (&v[0..3], &v[3..6], &v[6..12]);
    g.add_edge(x[0], c[0]);
    g.add_edge(x[1], c[4]);
    g.add_edge(x[2], c[2]);
    g.add_edge(c[5], y[0]);
    g.add_edge(c[3], y[1]);
    g.add_edge(c[1], y[2]);
    for k in 0..6 {
        g.add_edge(c[k], c[(k + 1) % 6]);
    }
    let r = [g.add_edge(x[0], y[0]), g.add_edge(x[1], y[1]), g.add_edge(x[2], y[2])];
    g.add_edge(y[0], x[1]);
    g.add_edge(y[1], x[2]);
    (v, r)
}

/// Gadget graph whose Hamiltonian cycles correspond one to one with the
/// assignments making exactly one literal per clause true.
pub fn one_in_three_to_ham_cycle(f: &Cnf) -> Result<GadgetGraph> {
    f.validate()?;
    if f.clauses.iter().any(|c| c.len() != 3 || c.iter().any(|l| !l.positive())) {
        return Err(Error::Precondition("every clause needs exactly three positive literals".into()));
    }
    if f.vars == 0 {
        return Err(Error::Precondition("formula has no variables".into()));
    }
    let mut g = MultiDigraph::new(0);
    let a: Vec<VertexId> = (0..f.vars).map(|_| g.add_vertex()).collect();
    let b: Vec<VertexId> = (0..f.vars).map(|_| g.add_vertex()).collect();
    let var_true: Vec<EdgeId> = (0..f.vars).map(|i| g.add_edge(a[i], b[i])).collect();
    let var_false: Vec<EdgeId> = (0..f.vars).map(|i| g.add_edge(a[i], b[i])).collect();
    for i in 0..f.vars - 1 {
        g.add_edge(b[i], a[i + 1]);
    }
    let mut prev = b[f.vars - 1];
    let mut clauses = Vec::new();
    let mut tail = var_true.clone();
    for c in &f.clauses {
        let (v, r) = clause_gadget(&mut g);
        g.add_edge(prev, v[0]);
        prev = v[5];
        for (k, l) in c.iter().enumerate() {
            let (t, _) = xor_edges(&mut g, tail[l.var()], r[k]);
            tail[l.var()] = t;
        }
        clauses.push(v);
    }
    g.add_edge(prev, a[0]);
    Ok(GadgetGraph { graph: g, var_true, var_false, clauses })
}

/// Reads the assignment off a Hamiltonian cycle given as edge ids.
pub fn ham_cycle_to_assignment(gg: &GadgetGraph, cycle: &[EdgeId]) -> Vec<bool> {
    gg.var_true.iter().map(|e| cycle.contains(e)).collect()
}

fn check_cubic(g: &MultiDigraph) -> Result<()> {
    g.validate()?;
    let (ins, outs) = (g.in_degrees(), g.out_degrees());
    for v in 0..g.vertex_count {
        if ins[v] + outs[v] != 3 || ins[v] > 2 || outs[v] > 2 {
            return Err(Error::Precondition(format!(
                "vertex {v} has indegree {} and outdegree {}",
                ins[v], outs[v]
            )));
        }
    }
    Ok(())
}

/// Hamiltonian s-t path instance from a Hamiltonian cycle instance. The
/// output keeps every original edge id (the forced edge now leads into the end
/// gadget), so a path maps back to a cycle by dropping the new edges.
pub fn ham_cycle_to_ham_path(g: &MultiDigraph) -> Result<(MultiDigraph, VertexId, VertexId)> {
    check_cubic(g)?;
    let ins = g.in_degrees();
    let u = (0..g.vertex_count)
        .find(|&v| ins[v] == 2)
        .ok_or_else(|| Error::Precondition("no vertex with indegree 2".into()))?;
    let uv = g.edges.iter().position(|&(a, _)| a == u).expect("outdegree 1");
    let v = g.edges[uv].1;
    let mut h = g.clone();
    let gs: Vec<VertexId> = (0..4).map(|_| h.add_vertex()).collect();
    let t = h.add_vertex();
    h.edges[uv].1 = gs[0];
    for (a, b) in [(gs[0], gs[1]), (gs[1], gs[2]), (gs[2], gs[3]), (gs[3], gs[0]), (gs[3], t), (t, gs[1]), (t, gs[2])] {
        h.add_edge(a, b);
    }
    let hs: Vec<VertexId> = (0..4).map(|_| h.add_vertex()).collect();
    let s = h.add_vertex();
    for (a, b) in [(hs[0], v), (hs[1], hs[0]), (hs[2], hs[1]), (hs[3], hs[2]), (hs[0], hs[3]), (s, hs[3]), (hs[1], s), (hs[2], s)] {
        h.add_edge(a, b);
    }
    Ok((h, s, t))
}

/// Edges of the source cycle used by a path of [`ham_cycle_to_ham_path`].
pub fn ham_path_to_cycle(source: &MultiDigraph, path: &[EdgeId]) -> Vec<EdgeId> {
    path.iter().copied().filter(|&e| e < source.edges.len()).collect()
}

fn vcolor(kind: &str, v: VertexId, signed_plus: Option<bool>) -> Label {
    let name = format!("{kind}{v}");
    match signed_plus {
        None => Label::color(&name),
        Some(true) => Label::plus(&name),
        Some(false) => Label::minus(&name),
    }
}

/// The three tiles (N, E, S, W) of a vertex with one in-edge and two
/// out-edges, or two in-edges and one out-edge, given the edge color names.
/// One in-edge: the entry tile, then one tile per out-edge. Two in-edges: one
/// tile per in-edge, then the exit tile. A walk through the vertex places all
/// three in a row; the middle tile picks the exit.
pub(crate) fn vertex_triple(v: VertexId, ins: &[String], outs: &[String], signed: bool) -> Vec<[Label; 4]> {
    let c = |kind: &str, plus: bool| vcolor(kind, v, signed.then_some(plus));
    let e = |name: &str, plus: bool| match signed {
        false => Label::color(name),
        true if plus => Label::plus(name),
        true => Label::minus(name),
    };
    let mut out = Vec::new();
    if ins.len() == 1 {
        out.push([c("vX", false), c("vI", false), c("vX", false), e(&ins[0], true)]);
        for o in outs {
            out.push([c("vO", false), c("vI", true), e(o, false), c("vO", true)]);
        }
    } else {
        for i in ins {
            out.push([c("vI", true), c("vO", false), e(i, true), c("vI", false)]);
        }
        out.push([c("vX", true), c("vO", true), c("vX", true), e(&outs[0], false)]);
    }
    out
}

/// Square strip whose solutions with the left boundary correspond one to one
/// with Hamiltonian s-t paths. The unsigned variant drops every sign.
pub fn ham_path_to_square_strip(g: &MultiDigraph, s: VertexId, t: VertexId, signed: bool) -> Result<Instance> {
    check_cubic(g)?;
    let (ins, outs) = (g.in_degrees(), g.out_degrees());
    if outs[s] != 1 || ins[t] != 1 || s == t {
        return Err(Error::Precondition("s needs outdegree 1 and t indegree 1".into()));
    }
    let mut tiles = Vec::new();
    for v in 0..g.vertex_count {
        let ins: Vec<String> = (0..g.edges.len()).filter(|&e| g.edges[e].1 == v).map(|e| format!("e{e}")).collect();
        let outs: Vec<String> = (0..g.edges.len()).filter(|&e| g.edges[e].0 == v).map(|e| format!("e{e}")).collect();
        let mut triple = vertex_triple(v, &ins, &outs, signed);
        if v == t {
            triple.truncate(1);
        }
        if v == s {
            triple.drain(..2);
        }
        for [n, e, s_, w] in triple {
            let id = tiles.len() as u32;
            tiles.push(Tile::Square(SquareTile::new(id, n, e, s_, w)));
        }
    }
    let len = tiles.len();
    let (rule, left) = if signed {
        (CompatRule::SignedOpp, Label::minus(&format!("vO{s}")))
    } else {
        (CompatRule::UnsignedEq, Label::color(&format!("vO{s}")))
    };
    Ok(Instance::new(BoardSpec::Strip { len, left: Some(left), right: None }, rule, tiles))
}
