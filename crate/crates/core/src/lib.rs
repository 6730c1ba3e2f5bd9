//! Exact Turán numbers for graphs with bounded clique number and bounded
//! circumference (or bounded longest path), together with the extremal
//! constructions, exact invariant checkers and an isomorphism-free
//! enumeration oracle used to verify them.

pub mod constructions;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod oracle;

#[cfg(test)]
mod testutil;

pub use graph::{Graph, GraphError, VertexSet};
