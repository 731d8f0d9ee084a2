//! Command-line front end: JSON documents in, JSON documents or verdicts out.

pub mod commands;
pub mod doc;
pub mod error;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "edgematch", version, about = "Edge-matching puzzles, reductions and games")]
pub struct Cli {
    #[command(subcommand)]
    pub cmd: Cmd,
}

#[derive(Args, Clone, Copy)]
pub struct Guard {
    /// Run exponential search regardless of size.
    #[arg(long)]
    pub exact: bool,
    /// Largest input (tiles, or graph edges for geography) searched without --exact.
    #[arg(long)]
    pub exact_limit: Option<usize>,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Solve an instance; prints a solution document or UNSAT.
    Solve {
        instance: String,
        #[arg(short, long, default_value = "-")]
        out: String,
        #[command(flatten)]
        guard: Guard,
    },
    /// Count solutions exactly.
    Count {
        instance: String,
        /// Stop counting after this many.
        #[arg(long)]
        limit: Option<u64>,
        #[command(flatten)]
        guard: Guard,
    },
    /// Apply one reduction stage.
    Reduce {
        stage: Stage,
        input: String,
        output: String,
        /// Drop signs (square-strip, eqtri-strip, leg-strip).
        #[arg(long)]
        unsigned: bool,
        /// Fix the frame cap (shapeless).
        #[arg(long)]
        rooted: bool,
        #[arg(long, value_enum, default_value = "vertex-from-bipartition")]
        mode: ModeArg,
        #[arg(long, value_enum, default_value = "shared")]
        pools: PoolsArg,
    },
    /// Solve a game.
    Game {
        #[command(subcommand)]
        what: GameCmd,
    },
    /// Check a solution against an instance.
    Verify { instance: String, solution: String },
    /// Write a reproducible random input.
    Gen(commands::GenArgs),
}

#[derive(Subcommand)]
pub enum GameCmd {
    /// The two-player 1×n matching game.
    Solve {
        game: String,
        #[command(flatten)]
        guard: Guard,
    },
    /// Geography.
    Geo {
        geo: String,
        #[command(flatten)]
        guard: Guard,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Stage {
    E1n,
    Litmatch,
    Ipc,
    LtStrip,
    HamCycle,
    HamPath,
    SquareStrip,
    EqtriStrip,
    HypTri,
    LegStrip,
    Shapeless,
    GeoEdge,
    Partizan,
    MatchGame,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    VertexFromBipartition,
    EdgeFromDirection,
    UndirectEdgePartizan,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum PoolsArg {
    Shared,
    PerPlayer,
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = match cli.cmd {
        Cmd::Solve { instance, out, guard } => commands::solve(&instance, &out, guard),
        Cmd::Count { instance, limit, guard } => commands::count(&instance, limit, guard),
        Cmd::Reduce { stage, input, output, unsigned, rooted, mode, pools } => {
            let opts = commands::ReduceOpts { unsigned, rooted, mode, pools };
            commands::reduce(stage, &input, &output, opts)
        }
        Cmd::Game { what: GameCmd::Solve { game, guard } } => commands::game_solve(&game, guard),
        Cmd::Game { what: GameCmd::Geo { geo, guard } } => commands::game_geo(&geo, guard),
        Cmd::Verify { instance, solution } => commands::verify(&instance, &solution),
        Cmd::Gen(args) => commands::gen(&args),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
