//! Instance-to-instance transforms and their certificate mappers.

mod formula;
mod geo;
mod ham;
mod sat_chain;
mod shapeless;
mod triangles;

pub use formula::{Cnf, Ipc, Lit};
pub use sat_chain::{
    enforce_e1n, ipc_cover_to_assignment, ipc_to_lt_strip, literal_matching_assignment_to_source, lm_to_ipc,
    lt_strip_solution_to_cover, shared_literal_graph, to_literal_matching, SharedLiteralGraph,
};
pub use ham::{
    ham_cycle_to_assignment, ham_cycle_to_ham_path, ham_path_to_cycle, ham_path_to_square_strip,
    one_in_three_to_ham_cycle, xor_edges, GadgetGraph,
};
pub use triangles::{euler_to_leg_strip, ham_path_to_eqtri_strip, hyp_tri_solution_to_square, square_strip_to_hyp_tri};
pub use shapeless::{frame_layout, shapeless_solution_to_strip, strip_cell, strip_to_shapeless};
pub use geo::{geo_to_matching_game, partizanize, vertex_geo_to_edge_geo, PartizanMode, PoolMode};
