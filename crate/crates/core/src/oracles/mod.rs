//! Brute-force enumerators used to check solvers and reductions on small
//! inputs. None of them share search code with the solvers.

mod euler;
mod ham;
mod sat;
mod shapeless;
mod strip;

pub use euler::{count_euler, count_euler_paths, find_euler, trail_satisfies, EulerMode, EulerQuery};
pub use ham::{count_ham, find_ham, HamMode};
pub use sat::{count_sat, enumerate_ipc, SatMode};
pub use shapeless::{enumerate_shapeless, find_shapeless};
pub use strip::{enumerate_strip_solutions, find_strip_solution, strip_solvable, Enumeration};
