//! Edge-matching puzzles, Eulerian-path variants, hardness reductions and
//! small combinatorial games.
//!
//! The crate is organised bottom-up: [`model`] holds tiles, boards and the
//! universal verifier; [`order_solvers`], [`euler`] and [`tri_solver`] are the
//! polynomial algorithms; [`reductions`] builds instances from formulas and
//! graphs; [`games`] solves geography and the two-player strip game; and
//! [`oracles`] contains brute-force counters used to cross-check everything.
//! [`gen`] makes reproducible random inputs for tests and the command line.

pub mod error;
pub mod euler;
pub mod games;
pub mod gen;
pub mod model;
pub mod oracles;
pub mod order_solvers;
pub mod reductions;
pub mod tri_solver;

pub use error::{Error, Result};
