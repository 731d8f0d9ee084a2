use edgematch::euler::{AnyGraph, EdgeId, MultiDigraph, VertexId};
use edgematch::gen::digraph_3reg;
use edgematch::oracles::{count_ham, count_sat, enumerate_strip_solutions, find_ham, HamMode, SatMode};
use edgematch::reductions::{
    ham_cycle_to_assignment, ham_cycle_to_ham_path, ham_path_to_cycle, ham_path_to_square_strip,
    one_in_three_to_ham_cycle, xor_edges, Cnf,
};
use edgematch::model::{BoardSpec, Instance};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn cycles(g: &MultiDigraph) -> u64 {
    count_ham(AnyGraph::Directed(g), HamMode::Cycle, None, None).unwrap()
}

fn degrees_ok(g: &MultiDigraph) -> bool {
    let (i, o) = (g.in_degrees(), g.out_degrees());
    (0..g.vertex_count).all(|v| i[v] + o[v] == 3 && i[v] <= 2 && o[v] <= 2)
}

/// Ways to cover every internal vertex with disjoint paths, each running from
/// an entry vertex to an exit vertex, using all of the given entries and exits.
fn covers(g: &MultiDigraph, internal: &[VertexId], entries: &[VertexId], exits: &[VertexId]) -> u64 {
    fn extend(
        g: &MultiDigraph,
        internal: &[VertexId],
        entries: &[VertexId],
        exits: &[VertexId],
        cur: VertexId,
        seen: &mut Vec<VertexId>,
        used_exits: &mut Vec<VertexId>,
    ) -> u64 {
        let mut total = 0;
        if exits.contains(&cur) && !used_exits.contains(&cur) {
            used_exits.push(cur);
            total += start(g, internal, &entries[1..], exits, seen, used_exits);
            used_exits.pop();
        }
        for &(a, b) in &g.edges {
            if a == cur && internal.contains(&b) && !seen.contains(&b) {
                seen.push(b);
                total += extend(g, internal, entries, exits, b, seen, used_exits);
                seen.pop();
            }
        }
        total
    }
    fn start(
        g: &MultiDigraph,
        internal: &[VertexId],
        entries: &[VertexId],
        exits: &[VertexId],
        seen: &mut Vec<VertexId>,
        used_exits: &mut Vec<VertexId>,
    ) -> u64 {
        let Some(&e) = entries.first() else {
            return u64::from(seen.len() == internal.len() && used_exits.len() == exits.len());
        };
        if seen.contains(&e) {
            return 0;
        }
        seen.push(e);
        let r = extend(g, internal, entries, exits, e, seen, used_exits);
        seen.pop();
        r
    }
    start(g, internal, entries, exits, &mut Vec::new(), &mut Vec::new())
}

#[test]
fn xor_gadget_admits_one_traversal_per_side() {
    let mut g = MultiDigraph::with_edges(4, &[(0, 1), (2, 3)]);
    let (b, d) = xor_edges(&mut g, 0, 1);
    let internal: Vec<VertexId> = (4..10).collect();
    // Ports: A enters via edge 0, C via edge 1; B and D leave via b and d.
    let a_in = g.edges[0].1;
    let c_in = g.edges[1].1;
    let b_out = g.edges[b].0;
    let d_out = g.edges[d].0;
    assert_eq!(covers(&g, &internal, &[a_in], &[b_out]), 1);
    assert_eq!(covers(&g, &internal, &[c_in], &[d_out]), 1);
    assert_eq!(covers(&g, &internal, &[a_in], &[d_out]), 0);
    assert_eq!(covers(&g, &internal, &[c_in], &[b_out]), 0);
    assert_eq!(covers(&g, &internal, &[a_in, c_in], &[b_out, d_out]), 0);
    assert_eq!(covers(&g, &internal, &[c_in, a_in], &[b_out, d_out]), 0);
}

#[test]
fn single_clause_has_three_cycles() {
    let f = Cnf::new(3, vec![vec![1, 2, 3]]);
    let gg = one_in_three_to_ham_cycle(&f).unwrap();
    assert!(degrees_ok(&gg.graph));
    assert_eq!(cycles(&gg.graph), 3);
    let c = find_ham(AnyGraph::Directed(&gg.graph), HamMode::Cycle, None, None).unwrap().unwrap();
    let a = ham_cycle_to_assignment(&gg, &c);
    assert_eq!(a.iter().filter(|&&x| x).count(), 1);
}

#[test]
fn two_clauses_match_one_in_three_count() {
    let f = Cnf::new(4, vec![vec![1, 2, 3], vec![1, 2, 4]]);
    let gg = one_in_three_to_ham_cycle(&f).unwrap();
    assert!(degrees_ok(&gg.graph));
    assert_eq!(cycles(&gg.graph), count_sat(&f, SatMode::OneInThree).unwrap());
}

#[test]
fn unused_variable_doubles_the_count() {
    let f = Cnf::new(4, vec![vec![1, 2, 3]]);
    let gg = one_in_three_to_ham_cycle(&f).unwrap();
    assert_eq!(cycles(&gg.graph), 6);
}

#[test]
fn negative_literal_rejected() {
    assert!(one_in_three_to_ham_cycle(&Cnf::new(3, vec![vec![1, -2, 3]])).is_err());
    assert!(one_in_three_to_ham_cycle(&Cnf::new(2, vec![vec![1, 2]])).is_err());
}

fn paths(g: &MultiDigraph, s: VertexId, t: VertexId) -> u64 {
    count_ham(AnyGraph::Directed(g), HamMode::Path, Some(s), Some(t)).unwrap()
}

#[test]
fn cycle_to_path_is_bijective_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [4, 4, 6, 6, 8, 8, 8] {
        let g = digraph_3reg(&mut rng, n);
        let (h, s, t) = ham_cycle_to_ham_path(&g).unwrap();
        assert_eq!(h.out_degrees()[s], 1);
        assert_eq!(h.in_degrees()[t], 1);
        assert!(degrees_ok(&h));
        assert_eq!(paths(&h, s, t), cycles(&g));
        if let Some(p) = find_ham(AnyGraph::Directed(&h), HamMode::Path, Some(s), Some(t)).unwrap() {
            let c: Vec<EdgeId> = ham_path_to_cycle(&g, &p);
            assert_eq!(c.len(), g.vertex_count);
        }
    }
}

#[test]
fn clause_gadget_through_path_stage() {
    let gg = one_in_three_to_ham_cycle(&Cnf::new(3, vec![vec![1, 2, 3]])).unwrap();
    let (h, s, t) = ham_cycle_to_ham_path(&gg.graph).unwrap();
    assert_eq!(paths(&h, s, t), 3);
}

fn without_boundary(i: &Instance) -> Instance {
    let mut j = i.clone();
    if let BoardSpec::Strip { len, .. } = i.board {
        j.board = BoardSpec::strip(len);
    }
    j
}

#[test]
fn square_strip_counts_paths() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut nonzero = 0;
    for n in [2, 4, 4, 6, 6, 8] {
        let g = digraph_3reg(&mut rng, n);
        let (h, s, t) = ham_cycle_to_ham_path(&g).unwrap();
        let expect = paths(&h, s, t);
        nonzero += usize::from(expect > 0);
        for signed in [true, false] {
            let inst = ham_path_to_square_strip(&h, s, t, signed).unwrap();
            assert_eq!(inst.tiles.len(), 3 * h.vertex_count - 4);
            assert_eq!(enumerate_strip_solutions(&inst, None).unwrap().count, expect, "signed {signed}");
            let free = without_boundary(&inst);
            assert_eq!(enumerate_strip_solutions(&free, None).unwrap().count, 2 * expect, "signed {signed}");
        }
    }
    assert!(nonzero >= 3);
}
