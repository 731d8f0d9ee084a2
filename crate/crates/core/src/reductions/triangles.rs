//! Reductions onto triangle strips.

use crate::error::{Error, Result};
use crate::euler::{MultiGraph, VertexId};
use crate::model::{
    Acute, BoardSpec, CompatRule, Corner, EqTriTile, Instance, Label, Orientation, Placement, Points, RightTriTile,
    Solution, Tile,
};

fn lab(name: String, sign: Option<bool>) -> Label {
    match sign {
        None => Label::color(&name),
        Some(true) => Label::plus(&name),
        Some(false) => Label::minus(&name),
    }
}

/// Equilateral-triangle strip for Hamiltonian paths in a graph of maximum
/// degree 3. Edges are oriented first to second endpoint; in the signed
/// variant an edge side is positive on its head's tiles.
///
/// With `ends = Some((s, t))`, both of degree 1, the strip starts at `s` (left
/// boundary) and its solutions correspond one to one with Hamiltonian s-t
/// paths. Without ends every vertex gets three tiles and the board has no
/// boundary.
pub fn ham_path_to_eqtri_strip(g: &MultiGraph, ends: Option<(VertexId, VertexId)>, signed: bool) -> Result<Instance> {
    g.validate()?;
    let deg = g.degrees();
    if let Some((s, t)) = ends {
        if s == t || deg[s] != 1 || deg[t] != 1 {
            return Err(Error::Precondition("s and t need degree 1".into()));
        }
    }
    let is_end = |v: VertexId| ends.is_some_and(|(s, t)| v == s || v == t);
    if g.edges.iter().any(|&(a, b)| a == b) {
        return Err(Error::Precondition("self-loops are not supported".into()));
    }
    for v in 0..g.vertex_count {
        if !is_end(v) && !(2..=3).contains(&deg[v]) {
            return Err(Error::Precondition(format!("vertex {v} has degree {}", deg[v])));
        }
    }
    let sg = |plus: bool| signed.then_some(plus);
    let edge_side = |e: usize, v: VertexId| lab(format!("e{e}"), sg(g.edges[e].1 == v));
    let mut tiles = Vec::new();
    let mut push = |edges: [Label; 3]| {
        let id = tiles.len() as u32;
        tiles.push(Tile::EqTri(EqTriTile { id, edges }));
    };
    let mut unique = 0;
    let mut fresh = || {
        unique += 1;
        lab(format!("U{unique}"), signed.then_some(true))
    };
    for v in 0..g.vertex_count {
        let inc: Vec<usize> = (0..g.edges.len()).filter(|&e| g.edges[e].0 == v || g.edges[e].1 == v).collect();
        if is_end(v) {
            continue;
        }
        let mut sides: Vec<Label> = inc.iter().map(|&e| edge_side(e, v)).collect();
        if sides.len() == 2 {
            sides.push(lab(format!("h{v}"), sg(true)));
        }
        for side in sides {
            push([lab(format!("v{v}"), sg(true)), lab(format!("v{v}"), sg(false)), side]);
        }
    }
    let (len, left) = match ends {
        Some((s, t)) => {
            let es = (0..g.edges.len()).find(|&e| g.edges[e].0 == s || g.edges[e].1 == s).expect("degree 1");
            let et = (0..g.edges.len()).find(|&e| g.edges[e].0 == t || g.edges[e].1 == t).expect("degree 1");
            push([lab(format!("v{s}"), sg(false)), edge_side(es, s), fresh()]);
            push([edge_side(et, t), fresh(), fresh()]);
            (tiles.len(), Some(lab(format!("v{s}"), sg(true))))
        }
        None => (tiles.len(), None),
    };
    let rule = if signed { CompatRule::SignedOpp } else { CompatRule::UnsignedEq };
    Ok(Instance::new(BoardSpec::EqTriStrip { len, left, first_points: Points::Up }, rule, tiles))
}

/// Splits every square of a strip into two right triangles joined along a
/// hypotenuse color of their own. Square k becomes tiles 2k (legs south,
/// west) and 2k+1 (legs north, east).
pub fn square_strip_to_hyp_tri(i: &Instance) -> Result<Instance> {
    i.validate()?;
    let BoardSpec::Strip { len, left, right } = i.board else {
        return Err(Error::Precondition("input must be a square strip".into()));
    };
    let signed = match i.rule {
        CompatRule::UnsignedEq => false,
        CompatRule::SignedOpp => true,
        _ => return Err(Error::Precondition("hypotenuse colors need a color rule".into())),
    };
    let mut tiles = Vec::new();
    for (k, t) in i.tiles.iter().enumerate() {
        let sq = t.as_square().ok_or_else(|| Error::Precondition("input must hold square tiles".into()))?;
        let [n, e, s, w] = sq.sides;
        let name = format!("U{k}");
        let (h1, h2) = if signed {
            (Label::plus(&name), Label::minus(&name))
        } else {
            (Label::color(&name), Label::color(&name))
        };
        tiles.push(Tile::RightTri(RightTriTile { id: 2 * k as u32, leg_l: s, leg_r: w, hyp: h1 }));
        tiles.push(Tile::RightTri(RightTriTile { id: 2 * k as u32 + 1, leg_l: n, leg_r: e, hyp: h2 }));
    }
    Ok(Instance::new(BoardSpec::HypStrip { len: 2 * len, left, right }, i.rule, tiles))
}

/// Square solution read off a solution of [`square_strip_to_hyp_tri`].
pub fn hyp_tri_solution_to_square(source: &Instance, sol: &Solution) -> Result<Solution> {
    let Solution::Cells(cells) = sol else {
        return Err(Error::Precondition("expected a cell solution".into()));
    };
    let mut out = Vec::new();
    for pair in cells.chunks(2) {
        let k = (pair[0].tile / 2) as usize;
        let second_half = pair[0].tile % 2 == 1;
        let rot = match (pair[0].orient, second_half) {
            (Orientation::Hyp(Corner::Bl), false) => 0,
            (Orientation::Hyp(Corner::Tl), false) => 1,
            (Orientation::Hyp(Corner::Bl), true) => 2,
            (Orientation::Hyp(Corner::Tl), true) => 3,
            _ => return Err(Error::Precondition("unexpected triangle placement".into())),
        };
        let tile = source.tiles.get(k).ok_or_else(|| Error::Precondition("unknown tile".into()))?;
        out.push(Placement { tile: tile.id(), orient: Orientation::square(rot) });
    }
    Ok(Solution::Cells(out))
}

/// Leg-contact strip for Eulerian paths. Two pendant vertices s and t are
/// attached to the lowest vertex, so the strip solutions are walks of G'
/// between them. Unsigned: one solution per Eulerian path of G' (counting each
/// direction). Signed: exactly `blowup` times as many, where blowup is
/// 2^(m'-1) times the product over vertices of G' of ((degree/2)!)^2.
pub fn euler_to_leg_strip(g: &MultiGraph, signed: bool) -> Result<(Instance, u64)> {
    g.validate()?;
    if g.vertex_count == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    if !g.edges_connected() || g.edges.is_empty() && g.vertex_count > 1 {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let deg = g.degrees();
    if let Some(v) = (0..g.vertex_count).find(|&v| deg[v] % 2 == 1) {
        return Err(Error::Precondition(format!("vertex {v} has odd degree")));
    }
    let mut h = g.clone();
    let s = h.add_vertex();
    let t = h.add_vertex();
    h.add_edge(0, s);
    h.add_edge(0, t);
    let deg = h.degrees();
    let sg = |plus: bool| signed.then_some(plus);
    let mut tiles = Vec::new();
    let mut hyp = 0;
    let mut push = |leg_l: Label, leg_r: Label| {
        hyp += 1;
        let id = tiles.len() as u32;
        tiles.push(Tile::RightTri(RightTriTile { id, leg_l, leg_r, hyp: lab(format!("H{hyp}"), signed.then_some(true)) }));
    };
    push(lab("U1".into(), sg(true)), lab(format!("v{s}"), sg(true)));
    push(lab("U2".into(), sg(true)), lab(format!("v{t}"), sg(true)));
    if signed {
        for v in 0..g.vertex_count {
            for _ in 0..deg[v] / 2 {
                push(lab(format!("x{v}"), Some(false)), lab(format!("v{v}"), Some(true)));
                push(lab(format!("x{v}"), Some(true)), lab(format!("v{v}"), Some(true)));
            }
        }
    }
    for (e, &(a, b)) in h.edges.iter().enumerate() {
        let (u, v) = (a.min(b), a.max(b));
        push(lab(format!("e{e}"), sg(false)), lab(format!("v{u}"), sg(false)));
        push(lab(format!("e{e}"), sg(true)), lab(format!("v{v}"), sg(false)));
    }
    let blowup = if signed { leg_blowup(&h, &deg[..g.vertex_count])? } else { 1 };
    let rule = if signed { CompatRule::SignedOpp } else { CompatRule::UnsignedEq };
    let len = tiles.len();
    Ok((Instance::new(BoardSpec::LegStrip { len, left_acute: Acute::Bottom }, rule, tiles), blowup))
}

fn leg_blowup(h: &MultiGraph, inner: &[usize]) -> Result<u64> {
    let mut c = 1u64;
    for _ in 1..h.edges.len() {
        c = c.checked_mul(2).ok_or(Error::Overflow)?;
    }
    for &d in inner {
        let f = (1..=(d / 2) as u64).try_fold(1u64, |a, k| a.checked_mul(k)).ok_or(Error::Overflow)?;
        c = c.checked_mul(f).and_then(|c| c.checked_mul(f)).ok_or(Error::Overflow)?;
    }
    Ok(c)
}
