//! Pseudo-deterministic path finding in configuration graphs.
//!
//! A nondeterministic machine may accept along many computation paths.
//! [`lex_first_shortest_path`] always returns the same one: among the
//! accepting paths of minimal length, the first in choice order. The
//! distance oracle is plain breadth-first search; the selection logic is
//! the point, not the space bound.

mod graph;
mod machine;
mod path;

pub use graph::{ConfigGraph, Path};
pub use machine::{build_config_graph, ChoiceMachine, Config, ConfigSpace, Move, TableMachine, DEFAULT_CONFIG_LIMIT};
pub use path::{
    brute_force_lex_first, distances_to_accept, lex_first_shortest_path, shortest_accepting_length,
    DEFAULT_ENUMERATION_LIMIT,
};
