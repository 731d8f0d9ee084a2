//! From restricted 3SAT through interval-pair cover to 1×n strict-inequality
//! strips.

use std::collections::BTreeSet;

use super::formula::{Cnf, Ipc, Lit};
use crate::error::{Error, Result};
use crate::euler::MultiGraph;
use crate::model::{num_square, BoardSpec, CompatRule, Instance, Orientation, Solution};

/// Sets variables with no negative occurrence to true until none remain, then
/// renumbers the survivors. Satisfiability is preserved, counts are not.
pub fn enforce_e1n(f: &Cnf) -> Result<Cnf> {
    f.validate()?;
    if !f.is_n3p() {
        return Err(Error::Precondition("formula has a clause with three positive literals".into()));
    }
    if f.occurrences().iter().any(|&(p, n)| p + n > 3 || n > 1) {
        return Err(Error::Precondition("a variable occurs more than three times or negatively twice".into()));
    }
    if f.clauses.iter().any(Vec::is_empty) {
        return Ok(Cnf::unsatisfiable());
    }
    let mut clauses = f.clauses.clone();
    loop {
        let mut neg = vec![false; f.vars];
        let mut seen = vec![false; f.vars];
        for l in clauses.iter().flatten() {
            seen[l.var()] = true;
            neg[l.var()] |= !l.positive();
        }
        let drop: Vec<usize> = (0..f.vars).filter(|&v| seen[v] && !neg[v]).collect();
        if drop.is_empty() {
            let keep: Vec<usize> = (0..f.vars).filter(|&v| seen[v]).collect();
            let mut index = vec![usize::MAX; f.vars];
            for (k, &v) in keep.iter().enumerate() {
                index[v] = k;
            }
            let renamed = clauses
                .iter()
                .map(|c| c.iter().map(|l| if l.positive() { Lit::pos(index[l.var()]) } else { Lit::neg(index[l.var()]) }).collect())
                .collect();
            return Ok(Cnf { vars: keep.len(), clauses: renamed });
        }
        clauses.retain(|c| !c.iter().any(|l| drop.contains(&l.var())));
    }
}

/// Clause graph with one edge per literal shared by two clauses; `literals`
/// is indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SharedLiteralGraph {
    pub graph: MultiGraph,
    pub literals: Vec<Lit>,
}

pub fn shared_literal_graph(f: &Cnf) -> SharedLiteralGraph {
    let mut holders: std::collections::BTreeMap<Lit, BTreeSet<usize>> = Default::default();
    for (ci, c) in f.clauses.iter().enumerate() {
        for &l in c {
            holders.entry(l).or_default().insert(ci);
        }
    }
    let mut graph = MultiGraph::new(f.clauses.len());
    let mut literals = Vec::new();
    for (l, cs) in holders {
        let cs: Vec<usize> = cs.into_iter().collect();
        for i in 0..cs.len() {
            for &d in &cs[i + 1..] {
                graph.add_edge(cs[i], d);
                literals.push(l);
            }
        }
    }
    SharedLiteralGraph { graph, literals }
}

fn check_chain_input(f: &Cnf) -> Result<()> {
    f.validate()?;
    if !(f.is_n3p() && f.is_2p() && f.is_e1n()) {
        return Err(Error::Precondition("formula is not N3P, 2P and E1N".into()));
    }
    Ok(())
}

/// Directs every path from its lower-numbered end and every cycle from its
/// lowest clause towards that clause's lower-numbered neighbor. Returns
/// (edge, from, to) triples in walk order.
fn orient_paths_and_cycles(g: &MultiGraph) -> Vec<(usize, usize, usize)> {
    let inc = g.incidence();
    let deg = g.degrees();
    let mut used = vec![false; g.edges.len()];
    let mut out = Vec::new();
    let mut done = vec![false; g.vertex_count];
    for v in 0..g.vertex_count {
        if done[v] || deg[v] == 0 {
            continue;
        }
        // Collect the component and find where to start.
        let mut comp = vec![v];
        done[v] = true;
        let mut k = 0;
        while k < comp.len() {
            for &(e, _) in &inc[comp[k]] {
                let (a, b) = g.edges[e];
                for w in [a, b] {
                    if !done[w] {
                        done[w] = true;
                        comp.push(w);
                    }
                }
            }
            k += 1;
        }
        let ends: Vec<usize> = comp.iter().copied().filter(|&w| deg[w] == 1).collect();
        let mut cur = ends.iter().copied().min().unwrap_or_else(|| *comp.iter().min().expect("nonempty"));
        loop {
            let next = inc[cur]
                .iter()
                .filter(|&&(e, _)| !used[e])
                .map(|&(e, _)| {
                    let (a, b) = g.edges[e];
                    (if a == cur { b } else { a }, e)
                })
                .min();
            let Some((w, e)) = next else { break };
            used[e] = true;
            out.push((e, cur, w));
            cur = w;
        }
    }
    out
}

/// Rewrites the formula so its shared-literal graph is a matching: for each
/// directed shared-literal edge (c, d) on x, the occurrence of x in d becomes
/// a fresh helper h and the clause (¬h ∨ x) is added. Helpers are numbered
/// after the original variables.
pub fn to_literal_matching(f: &Cnf) -> Result<Cnf> {
    check_chain_input(f)?;
    let slg = shared_literal_graph(f);
    if slg.graph.degrees().iter().any(|&d| d > 2) {
        return Err(Error::Precondition("shared-literal graph has a vertex of degree above 2".into()));
    }
    let mut out = f.clone();
    for (e, _, d) in orient_paths_and_cycles(&slg.graph) {
        let x = slg.literals[e];
        let h = out.vars;
        out.vars += 1;
        let slot = out.clauses[d].iter().position(|&l| l == x).expect("shared literal present");
        out.clauses[d][slot] = Lit::pos(h);
        out.clauses.push(vec![Lit::neg(h), x]);
    }
    Ok(out)
}

/// Restricts an assignment of a rewritten formula to the original variables.
pub fn literal_matching_assignment_to_source(a: &[bool], source_vars: usize) -> Vec<bool> {
    a[..source_vars].to_vec()
}

/// Places clauses on 1..=m (matched pairs adjacent, by lowest clause index,
/// then unmatched clauses) and makes one interval pair per variable: the
/// clause where it is negative, then the clause(s) where it is positive.
pub fn lm_to_ipc(f: &Cnf) -> Result<Ipc> {
    check_chain_input(f)?;
    let slg = shared_literal_graph(f);
    let g = &slg.graph;
    if g.degrees().iter().any(|&d| d > 1) {
        return Err(Error::Precondition("shared-literal graph is not a matching".into()));
    }
    let m = f.clauses.len();
    let mut coord = vec![0u32; m];
    let mut next = 1;
    let mut pairs: Vec<(usize, usize)> = g.edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    pairs.sort_unstable();
    for (a, b) in pairs {
        coord[a] = next;
        coord[b] = next + 1;
        next += 2;
    }
    for c in coord.iter_mut() {
        if *c == 0 {
            *c = next;
            next += 1;
        }
    }
    let mut neg_at = vec![0u32; f.vars];
    let mut pos_at: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); f.vars];
    for (ci, c) in f.clauses.iter().enumerate() {
        for l in c {
            if l.positive() {
                pos_at[l.var()].insert(coord[ci]);
            } else {
                neg_at[l.var()] = coord[ci];
            }
        }
    }
    let pairs = (0..f.vars)
        .map(|v| {
            let first = [neg_at[v], neg_at[v]];
            let second = match (pos_at[v].first(), pos_at[v].last()) {
                (Some(&lo), Some(&hi)) => [lo, hi],
                _ => first,
            };
            [first, second]
        })
        .collect();
    Ok(Ipc { universe: m as u32, pairs })
}

/// Variable x is true exactly when its pair's second interval is chosen and
/// differs from the first (a variable never positive stays false).
pub fn ipc_cover_to_assignment(p: &Ipc, second: &[bool]) -> Vec<bool> {
    p.pairs.iter().zip(second).map(|(pair, &s)| s && pair[0] != pair[1]).collect()
}

/// Two all-i element tiles per universe element (ids 2(i−1) and 2i−1), then
/// one tile per pair (id 2n + j) with west a−1, north c−1, east b+1 and
/// south d+1, on a strict-inequality strip of length 2n + m.
pub fn ipc_to_lt_strip(p: &Ipc) -> Result<Instance> {
    p.validate()?;
    let n = p.universe;
    let mut tiles = Vec::with_capacity(2 * n as usize + p.pairs.len());
    for i in 1..=n {
        let v = i64::from(i);
        tiles.push(num_square(2 * (i - 1), v, v, v, v));
        tiles.push(num_square(2 * i - 1, v, v, v, v));
    }
    for (j, [[a, b], [c, d]]) in p.pairs.iter().enumerate() {
        let (a, b, c, d) = (i64::from(*a), i64::from(*b), i64::from(*c), i64::from(*d));
        tiles.push(num_square(2 * n + j as u32, c - 1, b + 1, d + 1, a - 1));
    }
    Ok(Instance::new(BoardSpec::strip(tiles.len()), CompatRule::StrictLess, tiles))
}

/// Reads a cover off a strip solution: a pair tile lying with its first
/// interval horizontal (quarter turns 0 or 2) chooses the first interval.
pub fn lt_strip_solution_to_cover(p: &Ipc, sol: &Solution) -> Result<Vec<bool>> {
    let Solution::Cells(cells) = sol else {
        return Err(Error::Precondition("expected a strip solution".into()));
    };
    let base = 2 * p.universe;
    let mut second = vec![false; p.pairs.len()];
    for c in cells {
        if c.tile >= base {
            let Orientation::Square { rot } = c.orient else {
                return Err(Error::IllegalOrientation(format!("{:?}", c.orient)));
            };
            second[(c.tile - base) as usize] = rot % 2 == 1;
        }
    }
    Ok(second)
}
