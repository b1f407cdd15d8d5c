//! Exact solvers for committee elections with candidate attribute constraints.
//!
//! A committee of exactly `k` candidates is sought whose induced attribute
//! assignment (an attribute is true iff some member owns it) satisfies every
//! implication constraint and whose total profit reaches the bound `p`.
//!
//! The crate ships four solvers that all return a [`Solution`]:
//!
//! * [`solver::oracle`]: exhaustive enumeration, the reference for everything else;
//! * [`solver::treedp`]: polynomial DP over the formula tree when every candidate
//!   has at most one attribute and every attribute occurs at most once;
//! * [`solver::chaindp`]: polynomial DP over implication strings for simple
//!   (literal to literal) constraints with attribute occurrence at most two;
//! * [`solver::fpt`]: enumeration over occurring attribute types.
//!
//! [`reductions`] builds structured instances from graphs, and [`io`] holds the
//! JSON file formats used by the `cecac` binary.

pub mod bench;
pub mod io;
pub mod lang;
pub mod model;
pub mod reductions;
pub mod solver;

pub use lang::{Constraint, Formula, Literal};
pub use model::{Assignment, Attribute, Candidate, ClassDescriptor, Instance, Solution, SolverTag};
