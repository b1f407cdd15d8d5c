//! Constraint language: AST, parser, canonical printer, NNF, the combined
//! formula tree and simple-constraint normalization.

mod ast;
mod parser;
mod simple;
mod tree;

pub use ast::{render, to_nnf_formula, Constraint, Formula, Literal};
pub use parser::{is_identifier, parse_constraint, parse_formula, ParseError};
pub use simple::{normalize_simple, NotSimple, SimpleConstraint};
pub use tree::{combine, Combined, FormulaTree, NodeId, NodeKind};
