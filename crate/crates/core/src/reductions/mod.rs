//! Instance generators: graph reductions, constraint splitting and seeded
//! random instances.

mod clique;
mod graph;
mod indset;
mod random;
mod split;

use thiserror::Error;

pub use clique::{clique_to_cecac_single_attr, clique_to_cecac_two_attrs};
pub use graph::Graph;
pub use indset::independent_set_to_cecac;
pub use random::{random_instance, GeneratorParams, UNBOUNDED};
pub use split::{split_constraint, split_instance, Split, SplitMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error("graph is not regular: vertex {vertex} has degree {degree}, expected {expected}")]
    NotRegular { vertex: usize, degree: usize, expected: usize },
    #[error("malformed input: {0}")]
    MalformedInput(String),
    #[error("inconsistent parameters: {0}")]
    InconsistentParams(String),
}
