use clap::{Args, ValueEnum};
use edgematch::games::{
    solve_geography, solve_geography_matching, solve_match_game, GameOutcome, GeoGraph, GeoRule, Move, Partizan,
    Player,
};
use edgematch::gen;
use edgematch::model::{verify as check, BoardSpec, CompatRule, Instance, Solution};
use edgematch::oracles::{enumerate_shapeless, enumerate_strip_solutions, find_shapeless, find_strip_solution};
use edgematch::order_solvers::{solve_leq_rect, solve_lt_distinct_rect, solve_lt_strip};
use edgematch::reductions as red;
use edgematch::tri_solver::solve_leg_contact;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::doc::{read_doc, write_doc, Doc, VERSION};
use crate::error::CliError;
use crate::{Guard, ModeArg, PoolsArg, Stage};

const TILE_LIMIT: usize = 12;
const EDGE_LIMIT: usize = 14;

type Out = Result<i32, CliError>;

fn expect_instance(path: &str) -> Result<Instance, CliError> {
    match read_doc(path)? {
        Doc::Instance { instance, .. } => {
            instance.validate()?;
            Ok(instance)
        }
        d => Err(CliError::Parse(format!("{path}: expected an instance, found {}", d.kind()))),
    }
}

fn guard(g: Guard, size: usize, default: usize, what: &str) -> Result<(), CliError> {
    let limit = g.exact_limit.unwrap_or(default);
    if g.exact || size <= limit {
        Ok(())
    } else {
        Err(CliError::Guard(format!("{size} {what} exceeds the limit of {limit}")))
    }
}

fn squares(inst: &Instance) -> Option<Vec<edgematch::model::SquareTile>> {
    inst.tiles.iter().map(|t| t.as_square().copied()).collect()
}

/// Polynomial route for the board and rule, if one applies. `Ok(None)`
/// means the route proved there is no solution.
fn fast_solve(inst: &Instance) -> Option<edgematch::Result<Option<Solution>>> {
    match (&inst.board, inst.rule) {
        (BoardSpec::Rect { rows, cols }, CompatRule::LessOrEq) => {
            Some(solve_leq_rect(*rows, *cols, &squares(inst)?).map(Some))
        }
        (BoardSpec::Rect { rows, cols }, CompatRule::StrictLess) => {
            solve_lt_distinct_rect(*rows, *cols, &squares(inst)?).ok().map(|s| Ok(Some(s)))
        }
        (BoardSpec::Strip { left: None, right: None, .. }, CompatRule::StrictLess) => {
            solve_lt_strip(&squares(inst)?).ok().map(|s| Ok(Some(s)))
        }
        (BoardSpec::LegStrip { .. }, _) => Some(solve_leg_contact(inst)),
        _ => None,
    }
}

pub fn solve(path: &str, out: &str, g: Guard) -> Out {
    let inst = expect_instance(path)?;
    let found = match fast_solve(&inst) {
        Some(r) => r?,
        None => {
            guard(g, inst.tiles.len(), TILE_LIMIT, "tiles")?;
            match inst.board {
                BoardSpec::Shapeless { .. } => find_shapeless(&inst, None)?,
                _ => find_strip_solution(&inst)?,
            }
        }
    };
    let Some(sol) = found else {
        println!("UNSAT");
        return Ok(1);
    };
    let verdict = check(&inst, &sol);
    if !verdict.is_ok() {
        return Err(CliError::Usage(format!("internal error: solver output failed verification: {verdict}")));
    }
    write_doc(out, &Doc::solution(sol))?;
    Ok(0)
}

pub fn count(path: &str, limit: Option<u64>, g: Guard) -> Out {
    let inst = expect_instance(path)?;
    if let BoardSpec::Shapeless { root: None } = inst.board {
        return Err(CliError::Usage("unrooted shapeless instances have infinitely many placements".into()));
    }
    guard(g, inst.tiles.len(), TILE_LIMIT, "tiles")?;
    let n = match inst.board {
        BoardSpec::Shapeless { .. } => enumerate_shapeless(&inst, None)?,
        _ => enumerate_strip_solutions(&inst, limit)?.count,
    };
    println!("{n}");
    Ok(0)
}

pub fn verify(inst_path: &str, sol_path: &str) -> Out {
    let inst = expect_instance(inst_path)?;
    let sol = match read_doc(sol_path)? {
        Doc::Solution { solution, .. } => solution,
        d => return Err(CliError::Parse(format!("{sol_path}: expected a solution, found {}", d.kind()))),
    };
    let v = check(&inst, &sol);
    println!("{v}");
    Ok(if v.is_ok() { 0 } else { 1 })
}

fn print_outcome(o: &GameOutcome) {
    println!("{}", if o.winner == Player::P1 { "P1" } else { "P2" });
    match o.principal {
        Some(Move::Edge(e)) => println!("move: edge {e}"),
        Some(Move::Tile { tile, rot }) => println!("move: tile {tile} rot {rot}"),
        None => {}
    }
}

pub fn game_solve(path: &str, g: Guard) -> Out {
    let game = match read_doc(path)? {
        Doc::Game { game, .. } => game,
        d => return Err(CliError::Parse(format!("{path}: expected a game, found {}", d.kind()))),
    };
    guard(g, game.tiles.len(), TILE_LIMIT, "tiles")?;
    print_outcome(&solve_match_game(&game)?);
    Ok(0)
}

pub fn game_geo(path: &str, g: Guard) -> Out {
    let geo = match read_doc(path)? {
        Doc::Geo { geo, .. } => geo.to_geo()?,
        d => return Err(CliError::Parse(format!("{path}: expected a geo, found {}", d.kind()))),
    };
    // Undirected vertex geography that is bipartite or vertex-partizan has a
    // polynomial route; everything else is searched.
    let poly = !geo.graph.directed()
        && geo.rule == GeoRule::Vertex
        && !matches!(geo.partizan, Partizan::EdgeColors(_));
    if poly {
        if let Ok(o) = solve_geography_matching(&geo) {
            print_outcome(&o);
            return Ok(0);
        }
    }
    guard(g, geo.graph.edges().len(), EDGE_LIMIT, "edges")?;
    print_outcome(&solve_geography(&geo)?);
    Ok(0)
}

pub struct ReduceOpts {
    pub unsigned: bool,
    pub rooted: bool,
    pub mode: ModeArg,
    pub pools: PoolsArg,
}

fn wrong(stage: Stage, want: &str, got: &Doc) -> CliError {
    CliError::Usage(format!("stage {stage:?} expects a {want} document, found {}", got.kind()))
}

fn directed(g: GeoGraph, stage: Stage) -> Result<edgematch::euler::MultiDigraph, CliError> {
    match g {
        GeoGraph::Directed(d) => Ok(d),
        GeoGraph::Undirected(_) => Err(CliError::Usage(format!("stage {stage:?} needs a directed graph"))),
    }
}

fn undirected(g: GeoGraph, stage: Stage) -> Result<edgematch::euler::MultiGraph, CliError> {
    match g {
        GeoGraph::Undirected(u) => Ok(u),
        GeoGraph::Directed(_) => Err(CliError::Usage(format!("stage {stage:?} needs an undirected graph"))),
    }
}

pub fn reduce(stage: Stage, input: &str, output: &str, o: ReduceOpts) -> Out {
    let doc = read_doc(input)?;
    let signed = !o.unsigned;
    let (out, map) = match (stage, &doc) {
        (Stage::E1n, Doc::Cnf { cnf, .. }) => (Doc::Cnf { version: VERSION, cnf: red::enforce_e1n(cnf)? }, None),
        (Stage::Litmatch, Doc::Cnf { cnf, .. }) => {
            let lm = red::to_literal_matching(cnf)?;
            (Doc::Cnf { version: VERSION, cnf: lm }, Some(json!({ "source_vars": cnf.vars })))
        }
        (Stage::Ipc, Doc::Cnf { cnf, .. }) => (Doc::Ipc { version: VERSION, ipc: red::lm_to_ipc(cnf)? }, None),
        (Stage::LtStrip, Doc::Ipc { ipc, .. }) => (Doc::instance(red::ipc_to_lt_strip(ipc)?), None),
        (Stage::HamCycle, Doc::Cnf { cnf, .. }) => {
            let gg = red::one_in_three_to_ham_cycle(cnf)?;
            let map = json!({ "var_true": gg.var_true, "var_false": gg.var_false, "clauses": gg.clauses });
            (Doc::graph(&GeoGraph::Directed(gg.graph), None), Some(map))
        }
        (Stage::HamPath, Doc::Graph { graph, .. }) => {
            let g = directed(graph.to_graph()?, stage)?;
            let (h, s, t) = red::ham_cycle_to_ham_path(&g)?;
            (Doc::graph(&GeoGraph::Directed(h), Some((s, t))), Some(json!({ "source_edges": g.edges.len() })))
        }
        (Stage::SquareStrip, Doc::Graph { graph, .. }) => {
            let (s, t) = graph.ends.ok_or_else(|| CliError::Usage("square-strip needs a graph with ends".into()))?;
            let g = directed(graph.to_graph()?, stage)?;
            (Doc::instance(red::ham_path_to_square_strip(&g, s, t, signed)?), None)
        }
        (Stage::EqtriStrip, Doc::Graph { graph, .. }) => {
            let g = undirected(graph.to_graph()?, stage)?;
            (Doc::instance(red::ham_path_to_eqtri_strip(&g, graph.ends, signed)?), None)
        }
        (Stage::HypTri, Doc::Instance { instance, .. }) => (Doc::instance(red::square_strip_to_hyp_tri(instance)?), None),
        (Stage::LegStrip, Doc::Graph { graph, .. }) => {
            let g = undirected(graph.to_graph()?, stage)?;
            let (inst, blowup) = red::euler_to_leg_strip(&g, signed)?;
            (Doc::instance(inst), Some(json!({ "blowup": blowup })))
        }
        (Stage::Shapeless, Doc::Instance { instance, .. }) => {
            (Doc::instance(red::strip_to_shapeless(instance, o.rooted)?), None)
        }
        (Stage::GeoEdge, Doc::Geo { geo, .. }) => (Doc::geo(&red::vertex_geo_to_edge_geo(&geo.to_geo()?)?), None),
        (Stage::Partizan, Doc::Geo { geo, .. }) => {
            let mode = match o.mode {
                ModeArg::VertexFromBipartition => red::PartizanMode::VertexFromBipartition,
                ModeArg::EdgeFromDirection => red::PartizanMode::EdgeFromDirection,
                ModeArg::UndirectEdgePartizan => red::PartizanMode::UndirectEdgePartizan,
            };
            (Doc::geo(&red::partizanize(&geo.to_geo()?, mode)?), None)
        }
        (Stage::MatchGame, Doc::Geo { geo, .. }) => {
            let pools = match o.pools {
                PoolsArg::Shared => red::PoolMode::Shared,
                PoolsArg::PerPlayer => red::PoolMode::PerPlayer,
            };
            let game = red::geo_to_matching_game(&geo.to_geo()?, pools)?;
            (Doc::Game { version: VERSION, game }, None)
        }
        (s, d) => {
            let want = match s {
                Stage::E1n | Stage::Litmatch | Stage::Ipc | Stage::HamCycle => "cnf",
                Stage::LtStrip => "ipc",
                Stage::HamPath | Stage::SquareStrip | Stage::EqtriStrip | Stage::LegStrip => "graph",
                Stage::HypTri | Stage::Shapeless => "instance",
                Stage::GeoEdge | Stage::Partizan | Stage::MatchGame => "geo",
            };
            return Err(wrong(s, want, d));
        }
    };
    write_doc(output, &out)?;
    if let (Some(data), false) = (map, output == "-") {
        let stage = format!("{stage:?}").to_lowercase();
        let base = output.strip_suffix(".json").unwrap_or(output);
        write_doc(&format!("{base}.map.json"), &Doc::Map { version: VERSION, stage, data })?;
    }
    Ok(0)
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum GenKind {
    RectLeq,
    StripLt,
    LegTiles,
    CnfN3p,
    #[value(name = "digraph-3reg")]
    Digraph3reg,
    Geo,
}

#[derive(Args)]
pub struct GenArgs {
    kind: GenKind,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Rows (rect-leq).
    #[arg(long, default_value_t = 3)]
    rows: usize,
    /// Columns, strip length, vertex count or maximum variable count.
    #[arg(long, default_value_t = 4)]
    n: usize,
    /// Edges (geo) or maximum clause count (cnf-n3p).
    #[arg(long, default_value_t = 6)]
    m: usize,
    /// Numeric label range or leg color count.
    #[arg(long, default_value_t = 5)]
    labels: usize,
    #[arg(long)]
    signed: bool,
    /// Directed geography graph.
    #[arg(long)]
    directed: bool,
    /// Edge rule instead of vertex rule (geo).
    #[arg(long)]
    edge_rule: bool,
    #[arg(short, long, default_value = "-")]
    out: String,
}

pub fn gen(a: &GenArgs) -> Out {
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let doc = match a.kind {
        GenKind::RectLeq => Doc::instance(gen::rect_leq(&mut rng, a.rows, a.n, a.labels as i64)),
        GenKind::StripLt => Doc::instance(gen::strip_lt(&mut rng, a.n, a.labels as i64)),
        GenKind::LegTiles => Doc::instance(gen::leg_tiles(&mut rng, a.n, a.labels, a.signed)),
        GenKind::CnfN3p => Doc::Cnf { version: VERSION, cnf: gen::cnf_n3p(&mut rng, a.n.max(1), a.m.max(1)) },
        GenKind::Digraph3reg => Doc::graph(&GeoGraph::Directed(gen::digraph_3reg(&mut rng, a.n)), None),
        GenKind::Geo => {
            let rule = if a.edge_rule { GeoRule::Edge } else { GeoRule::Vertex };
            Doc::geo(&gen::geo(&mut rng, a.n, a.m, a.directed, rule))
        }
    };
    write_doc(&a.out, &doc)?;
    Ok(0)
}
