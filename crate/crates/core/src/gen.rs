//! Random instances for testing and benchmarking. Every generator draws only
//! from the supplied RNG, so a seeded RNG gives reproducible output.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::euler::{MultiDigraph, MultiGraph};
use crate::games::{GeoGraph, GeoInstance, GeoRule};
use crate::model::{num_square, Acute, BoardSpec, CompatRule, Instance, Label, RightTriTile, Tile};
use crate::reductions::{Cnf, Lit};

/// m×n LessOrEq rectangle with labels in `0..labels`.
pub fn rect_leq(rng: &mut impl Rng, m: usize, n: usize, labels: i64) -> Instance {
    let tiles = (0..(m * n) as u32)
        .map(|i| num_square(i, rng.gen_range(0..labels), rng.gen_range(0..labels), rng.gen_range(0..labels), rng.gen_range(0..labels)))
        .collect();
    Instance::new(BoardSpec::Rect { rows: m, cols: n }, CompatRule::LessOrEq, tiles)
}

/// StrictLess strip where every tile has an unequal opposite pair.
pub fn strip_lt(rng: &mut impl Rng, n: usize, labels: i64) -> Instance {
    let labels = labels.max(2);
    let tiles = (0..n as u32)
        .map(|i| loop {
            let s: [i64; 4] = std::array::from_fn(|_| rng.gen_range(0..labels));
            if s[0] != s[2] || s[1] != s[3] {
                break num_square(i, s[0], s[1], s[2], s[3]);
            }
        })
        .collect();
    Instance::new(BoardSpec::strip(n), CompatRule::StrictLess, tiles)
}

/// Leg-contact strip of `n` right triangles over `colors` leg colors.
pub fn leg_tiles(rng: &mut impl Rng, n: usize, colors: usize, signed: bool) -> Instance {
    let colors = colors.max(1);
    let leg = |rng: &mut dyn rand::RngCore| {
        let name = format!("c{}", rng.gen_range(0..colors));
        match (signed, rng.gen_bool(0.5)) {
            (false, _) => Label::color(&name),
            (true, true) => Label::plus(&name),
            (true, false) => Label::minus(&name),
        }
    };
    let tiles = (0..n as u32)
        .map(|i| {
            let (l, r) = (leg(rng), leg(rng));
            let h = format!("h{i}");
            let hyp = if signed { Label::plus(&h) } else { Label::color(&h) };
            Tile::RightTri(RightTriTile { id: i, leg_l: l, leg_r: r, hyp })
        })
        .collect();
    let left_acute = if rng.gen_bool(0.5) { Acute::Bottom } else { Acute::Top };
    let rule = if signed { CompatRule::SignedOpp } else { CompatRule::UnsignedEq };
    Instance::new(BoardSpec::LegStrip { len: n, left_acute }, rule, tiles)
}

/// A formula meeting N3P, 2P and E1N with 1..=max_vars variables and
/// 1..=max_clauses clauses: each variable is negated once and positive in up
/// to two other clause slots.
pub fn cnf_n3p(rng: &mut impl Rng, max_vars: usize, max_clauses: usize) -> Cnf {
    loop {
        let vars = rng.gen_range(1..=max_vars.max(1));
        let m = rng.gen_range(1..=max_clauses.max(1));
        let mut clauses: Vec<Vec<Lit>> = vec![Vec::new(); m];
        for v in 0..vars {
            clauses[rng.gen_range(0..m)].push(Lit::neg(v));
            let mut cs: Vec<usize> = (0..m).collect();
            cs.shuffle(rng);
            for &c in cs.iter().take(rng.gen_range(0..=2)) {
                clauses[c].push(Lit::pos(v));
            }
        }
        let f = Cnf { vars, clauses };
        if f.clauses.iter().all(|c| !c.is_empty()) && f.is_n3p() && f.is_2p() && f.is_e1n() {
            return f;
        }
    }
}

/// 3-regular digraph on an even number `n ≥ 2` of vertices, half with
/// out-degree 2 and half with in-degree 2, without self-loops.
pub fn digraph_3reg(rng: &mut impl Rng, n: usize) -> MultiDigraph {
    let n = (n.max(2) + 1) / 2 * 2;
    loop {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let (outs2, ins2) = order.split_at(n / 2);
        let mut tails: Vec<usize> = (0..n).collect();
        tails.extend(outs2);
        let mut heads: Vec<usize> = (0..n).collect();
        heads.extend(ins2);
        heads.shuffle(rng);
        if tails.iter().zip(&heads).all(|(a, b)| a != b) {
            let mut edges: Vec<(usize, usize)> = tails.into_iter().zip(heads).collect();
            edges.sort_unstable();
            return MultiDigraph::with_edges(n, &edges);
        }
    }
}

/// Random geography instance on `n ≥ 1` vertices with `m` edges (loops and
/// parallel edges allowed), start vertex 0, impartial.
pub fn geo(rng: &mut impl Rng, n: usize, m: usize, directed: bool, rule: GeoRule) -> GeoInstance {
    let n = n.max(1);
    let edges: Vec<(usize, usize)> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    let graph = if directed {
        GeoGraph::Directed(MultiDigraph::with_edges(n, &edges))
    } else {
        GeoGraph::Undirected(MultiGraph::with_edges(n, &edges))
    };
    GeoInstance::new(graph, 0, rule)
}
