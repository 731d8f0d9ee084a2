use edgematch::euler::{MultiDigraph, MultiGraph};
use edgematch::games::{
    solve_geography, solve_geography_matching, solve_match_game, GameInstance, GeoGraph, GeoInstance, GeoRule,
    Partizan, Player, Pools,
};
use edgematch::model::{rotate_square, Label, SquareTile};
use edgematch::reductions::{geo_to_matching_game, partizanize, vertex_geo_to_edge_geo, PartizanMode, PoolMode};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn winner(g: &GeoInstance) -> Player {
    solve_geography(g).unwrap().winner
}

fn game_winner(g: &GameInstance) -> Player {
    solve_match_game(g).unwrap().winner
}

/// Every digraph on up to 4 vertices with at most 6 edges: loops allowed on
/// up to 3 vertices, plus all two-vertex multigraphs with up to 4 edges.
fn small_digraphs() -> Vec<MultiDigraph> {
    let mut out = Vec::new();
    for n in 1..=4usize {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| n <= 3 || a != b).collect();
        for mask in 0u32..1 << pairs.len() {
            if mask.count_ones() <= 6 {
                let e: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
                out.push(MultiDigraph::with_edges(n, &e));
            }
        }
    }
    for a in 0..=2usize {
        for b in 0..=2usize {
            if a + b >= 2 {
                let e: Vec<_> = std::iter::repeat((0, 1)).take(a).chain(std::iter::repeat((1, 0)).take(b)).collect();
                out.push(MultiDigraph::with_edges(2, &e));
            }
        }
    }
    out
}

fn random_digraph(rng: &mut impl Rng, n: usize, m: usize) -> MultiDigraph {
    let e: Vec<_> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
    MultiDigraph::with_edges(n, &e)
}

fn degree_ok(g: &MultiDigraph) -> bool {
    let (i, o) = (g.in_degrees(), g.out_degrees());
    (0..g.vertex_count).all(|v| i[v] + o[v] <= 3 && i[v] <= 2 && o[v] <= 2)
}

fn random_colors(rng: &mut impl Rng, k: usize) -> Vec<Player> {
    (0..k).map(|_| if rng.gen() { Player::P1 } else { Player::P2 }).collect()
}

/// All winner-preservation checks for one digraph and start vertex.
fn check_all(g: &MultiDigraph, s: usize, rng: &mut impl Rng) {
    let vg = GeoInstance::new(GeoGraph::Directed(g.clone()), s, GeoRule::Vertex);
    let eg = GeoInstance::new(GeoGraph::Directed(g.clone()), s, GeoRule::Edge);
    let (wv, we) = (winner(&vg), winner(&eg));
    let ctx = format!("{g:?} start {s}");

    assert_eq!(winner(&vertex_geo_to_edge_geo(&vg).unwrap()), wv, "vertex->edge {ctx}");
    if degree_ok(g) {
        assert_eq!(game_winner(&geo_to_matching_game(&vg, PoolMode::Shared).unwrap()), wv, "vertex game {ctx}");
    }
    assert_eq!(game_winner(&geo_to_matching_game(&eg, PoolMode::Shared).unwrap()), we, "edge game {ctx}");

    let ug = MultiGraph::with_edges(g.vertex_count, &g.edges);
    let ue = GeoInstance::new(GeoGraph::Undirected(ug.clone()), s, GeoRule::Edge);
    assert_eq!(game_winner(&geo_to_matching_game(&ue, PoolMode::Shared).unwrap()), winner(&ue), "undirected edge game {ctx}");

    for (base, w) in [(&vg, wv), (&eg, we)] {
        if let Ok(p) = partizanize(base, PartizanMode::EdgeFromDirection) {
            assert_eq!(winner(&p), w, "edge_from_direction {ctx}");
        }
        if let Ok(p) = partizanize(base, PartizanMode::VertexFromBipartition) {
            assert_eq!(winner(&p), w, "vertex_from_bipartition {ctx}");
        }
        let mut colored = base.clone();
        colored.partizan = Partizan::EdgeColors(random_colors(rng, g.edges.len()));
        let wc = winner(&colored);
        assert_eq!(winner(&partizanize(&colored, PartizanMode::UndirectEdgePartizan).unwrap()), wc, "undirect {ctx}");
        if base.rule == GeoRule::Edge {
            let m = geo_to_matching_game(&colored, PoolMode::PerPlayer).unwrap();
            assert_eq!(game_winner(&m), wc, "per-player game {ctx}");
        }
    }
}

#[test]
fn winners_agree_on_all_small_digraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let graphs = small_digraphs();
    assert!(graphs.len() > 2500);
    for g in &graphs {
        for s in 0..g.vertex_count {
            check_all(g, s, &mut rng);
        }
    }
}

#[test]
fn winners_agree_on_random_larger_digraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..200 {
        let n = rng.gen_range(4..=7);
        let m = rng.gen_range(5..=9);
        let g = random_digraph(&mut rng, n, m);
        let s = rng.gen_range(0..n);
        check_all(&g, s, &mut rng);
    }
}

#[test]
fn vertex_to_edge_keeps_max_degrees() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..100 {
        let g = random_digraph(&mut rng, 5, 8);
        let vg = GeoInstance::new(GeoGraph::Directed(g.clone()), 0, GeoRule::Vertex);
        let GeoGraph::Directed(h) = vertex_geo_to_edge_geo(&vg).unwrap().graph else { panic!() };
        let max = |v: Vec<usize>| v.into_iter().max().unwrap_or(0);
        assert!(max(h.in_degrees()) <= max(g.in_degrees()).max(1));
        assert!(max(h.out_degrees()) <= max(g.out_degrees()).max(1));
    }
}

#[test]
fn edge_game_shape() {
    // s -> a, s -> b, a -> b
    let g = MultiDigraph::with_edges(3, &[(0, 1), (0, 2), (1, 2)]);
    let eg = GeoInstance::new(GeoGraph::Directed(g), 0, GeoRule::Edge);
    let m = geo_to_matching_game(&eg, PoolMode::Shared).unwrap();
    assert_eq!(m.tiles.len(), 3);
    assert_eq!(m.left, Label::plus("v0"));
    assert_eq!(m.tiles[2].sides[3], Label::minus("v1"));
    assert_eq!(m.tiles[2].sides[1], Label::plus("v2"));
    assert_eq!(game_winner(&m), winner(&eg));
}

#[test]
fn per_player_pools_follow_edge_colors() {
    let g = MultiDigraph::with_edges(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]);
    let mut eg = GeoInstance::new(GeoGraph::Directed(g), 0, GeoRule::Edge);
    eg.partizan = Partizan::EdgeColors(vec![Player::P1, Player::P2, Player::P2, Player::P1]);
    let m = geo_to_matching_game(&eg, PoolMode::PerPlayer).unwrap();
    assert_eq!(m.pools, Pools::PerPlayer { p1: vec![0, 3], p2: vec![1, 2] });
    assert!(geo_to_matching_game(&eg, PoolMode::Shared).is_err());
}

#[test]
fn mode_mismatches_are_rejected() {
    let tri = MultiDigraph::with_edges(3, &[(0, 1), (1, 2), (2, 0)]);
    let vg = GeoInstance::new(GeoGraph::Directed(tri.clone()), 0, GeoRule::Vertex);
    assert!(partizanize(&vg, PartizanMode::VertexFromBipartition).is_err());
    assert!(partizanize(&vg, PartizanMode::EdgeFromDirection).is_err());
    assert!(partizanize(&vg, PartizanMode::UndirectEdgePartizan).is_err());
    assert!(geo_to_matching_game(&vg, PoolMode::PerPlayer).is_err());
    let star = MultiDigraph::with_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]);
    let vs = GeoInstance::new(GeoGraph::Directed(star), 0, GeoRule::Vertex);
    assert!(geo_to_matching_game(&vs, PoolMode::Shared).is_err());
    let ug = GeoInstance::new(GeoGraph::Undirected(MultiGraph::with_edges(2, &[(0, 1)])), 0, GeoRule::Edge);
    assert!(vertex_geo_to_edge_geo(&ug).is_err());
}

#[test]
fn bipartite_path_colors_alternate() {
    let g = MultiGraph::with_edges(3, &[(0, 1), (1, 2)]);
    let geo = GeoInstance::new(GeoGraph::Undirected(g), 0, GeoRule::Vertex);
    let p = partizanize(&geo, PartizanMode::VertexFromBipartition).unwrap();
    assert_eq!(p.partizan, Partizan::VertexColors(vec![Player::P2, Player::P1, Player::P2]));
    assert_eq!(winner(&p), winner(&geo));
}

fn connected(n: usize, e: &[(usize, usize)]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &(a, b) in e {
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    seen.iter().all(|&s| s)
}

#[test]
fn matching_route_agrees_on_all_connected_bipartite_graphs() {
    let mut checked = 0;
    for n in 1..=7usize {
        for a in 1..=n / 2 {
            let pairs: Vec<_> = (0..a).flat_map(|x| (a..n).map(move |y| (x, y))).collect();
            for mask in 0u32..1 << pairs.len() {
                let e: Vec<_> = (0..pairs.len()).filter(|&i| mask >> i & 1 == 1).map(|i| pairs[i]).collect();
                if !connected(n, &e) {
                    continue;
                }
                let g = MultiGraph::with_edges(n, &e);
                for s in 0..n {
                    let geo = GeoInstance::new(GeoGraph::Undirected(g.clone()), s, GeoRule::Vertex);
                    assert_eq!(solve_geography_matching(&geo).unwrap().winner, winner(&geo), "{e:?} start {s}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 10_000, "{checked}");
}

#[test]
fn matching_route_agrees_on_random_bipartite_and_vertex_partizan() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..500 {
        let n = rng.gen_range(2..=12);
        let a = rng.gen_range(1..n);
        let m = rng.gen_range(1..=2 * n);
        let e: Vec<_> = (0..m).map(|_| (rng.gen_range(0..a), rng.gen_range(a..n))).collect();
        let g = MultiGraph::with_edges(n, &e);
        let s = rng.gen_range(0..n);
        let geo = GeoInstance::new(GeoGraph::Undirected(g.clone()), s, GeoRule::Vertex);
        assert_eq!(solve_geography_matching(&geo).unwrap().winner, winner(&geo));

        // Vertex-partizan on an arbitrary graph.
        let e: Vec<_> = (0..m).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect();
        let mut geo = GeoInstance::new(GeoGraph::Undirected(MultiGraph::with_edges(n, &e)), s, GeoRule::Vertex);
        geo.partizan = Partizan::VertexColors(random_colors(&mut rng, n));
        assert_eq!(solve_geography_matching(&geo).unwrap().winner, winner(&geo));
    }
}

#[test]
fn every_partizan_variant_terminates() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for directed in [false, true] {
        for rule in [GeoRule::Vertex, GeoRule::Edge] {
            for vertex_colors in [false, true] {
                for _ in 0..20 {
                    let n = rng.gen_range(2..=8);
                    let m = rng.gen_range(1..=12);
                    let g = random_digraph(&mut rng, n, m);
                    let graph = if directed {
                        GeoGraph::Directed(g.clone())
                    } else {
                        GeoGraph::Undirected(MultiGraph::with_edges(n, &g.edges))
                    };
                    let mut geo = GeoInstance::new(graph, 0, rule);
                    geo.partizan = if vertex_colors {
                        Partizan::VertexColors(random_colors(&mut rng, n))
                    } else {
                        Partizan::EdgeColors(random_colors(&mut rng, g.edges.len()))
                    };
                    let w = winner(&geo);
                    let poly = !directed && rule == GeoRule::Vertex && vertex_colors;
                    assert_eq!(solve_geography_matching(&geo).is_ok(), poly);
                    if poly {
                        assert_eq!(solve_geography_matching(&geo).unwrap().winner, w);
                    }
                }
            }
        }
    }
}

fn permuted(g: &MultiDigraph, perm: &[usize]) -> MultiDigraph {
    let e: Vec<_> = g.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
    MultiDigraph::with_edges(g.vertex_count, &e)
}

proptest! {
    #[test]
    fn geography_is_invariant_under_relabeling(
        edges in prop::collection::vec((0usize..6, 0usize..6), 0..10),
        perm in Just((0..6).collect::<Vec<usize>>()).prop_shuffle(),
        s in 0usize..6,
        edge_rule: bool,
    ) {
        let g = MultiDigraph::with_edges(6, &edges);
        let rule = if edge_rule { GeoRule::Edge } else { GeoRule::Vertex };
        let a = GeoInstance::new(GeoGraph::Directed(g.clone()), s, rule);
        let b = GeoInstance::new(GeoGraph::Directed(permuted(&g, &perm)), perm[s], rule);
        prop_assert_eq!(winner(&a), winner(&b));
    }

    #[test]
    fn match_game_ignores_tile_order_and_rotation(
        edges in prop::collection::vec((0usize..4, 0usize..4), 1..7),
        rots in prop::collection::vec(0u8..4, 7),
        seed: u64,
    ) {
        let g = MultiDigraph::with_edges(4, &edges);
        let eg = GeoInstance::new(GeoGraph::Directed(g), 0, GeoRule::Edge);
        let m = geo_to_matching_game(&eg, PoolMode::Shared).unwrap();
        let mut shuffled = m.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in (1..shuffled.tiles.len()).rev() {
            shuffled.tiles.swap(i, rng.gen_range(0..=i));
        }
        shuffled.tiles = shuffled
            .tiles
            .iter()
            .zip(&rots)
            .enumerate()
            .map(|(k, (t, &r))| {
                let [n, e, s, w] = rotate_square(t.sides, r);
                SquareTile::new(k as u32, n, e, s, w)
            })
            .collect();
        prop_assert_eq!(game_winner(&m), game_winner(&shuffled));
    }
}
