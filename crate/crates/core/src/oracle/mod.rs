//! Ground truth at desk scale: isomorphism-free enumeration of family-free
//! graphs, exact maxima with witnesses, and a randomized saturation search
//! for lower bounds beyond the enumeration range.

mod canon;
mod enumerate;
mod lower_bound;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::graph::Graph;
use crate::invariants::{ForbiddenFamily, InvariantError};

pub use canon::{Code, SmallGraph, MAX_ORDER};
pub use enumerate::{brute_force_ex, enumerate_free_graphs, Enumeration};
pub use lower_bound::{addable_edges, lower_bound_search, lower_bound_search_from};

/// Default largest `n` the enumerator accepts.
pub const DEFAULT_CAP: usize = 10;
/// Default number of witnesses kept per result.
pub const DEFAULT_WITNESS_CAP: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Connectivity {
    #[default]
    Any,
    Connected,
    TwoConnected,
}

impl Connectivity {
    pub fn holds(self, g: &Graph) -> bool {
        match self {
            Connectivity::Any => true,
            Connectivity::Connected => g.is_connected(),
            Connectivity::TwoConnected => crate::invariants::is_two_connected(g),
        }
    }
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Connectivity::Any => "any",
            Connectivity::Connected => "connected",
            Connectivity::TwoConnected => "two_connected",
        })
    }
}

impl FromStr for Connectivity {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().replace('-', "_").as_str() {
            "any" => Ok(Connectivity::Any),
            "connected" => Ok(Connectivity::Connected),
            "two_connected" | "2connected" | "2_connected" | "biconnected" => {
                Ok(Connectivity::TwoConnected)
            }
            _ => Err(OracleError::Connectivity(s.to_string())),
        }
    }
}

/// Parameters of an enumeration. `family: None` enumerates all graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationTask {
    pub n: usize,
    pub family: Option<ForbiddenFamily>,
    pub connectivity: Connectivity,
    /// Subset-table entries the generator may examine; `None` falls back to
    /// `CIRCUM_TURAN_BUDGET`, then to unlimited.
    pub budget: Option<u64>,
    /// Largest `n` accepted.
    pub cap: usize,
    pub witness_cap: usize,
    /// Worker threads; `None` uses the default pool, `Some(1)` runs inline.
    pub workers: Option<usize>,
}

impl EnumerationTask {
    pub fn new(n: usize, family: Option<ForbiddenFamily>) -> Self {
        EnumerationTask {
            n,
            family,
            connectivity: Connectivity::Any,
            budget: None,
            cap: DEFAULT_CAP,
            witness_cap: DEFAULT_WITNESS_CAP,
            workers: None,
        }
    }

    pub fn free_of(n: usize, family: ForbiddenFamily) -> Self {
        Self::new(n, Some(family))
    }

    pub fn connectivity(mut self, c: Connectivity) -> Self {
        self.connectivity = c;
        self
    }

    pub fn budget(mut self, nodes: u64) -> Self {
        self.budget = Some(nodes);
        self
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn witness_cap(mut self, cap: usize) -> Self {
        self.witness_cap = cap;
        self
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = Some(workers);
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleResult {
    /// `None` when no graph satisfies the constraints.
    pub max_edges: Option<u64>,
    #[serde(serialize_with = "as_graph6")]
    pub witnesses: Vec<Graph>,
    /// Optimal isomorphism classes found, beyond the witness cap.
    pub optimal_classes: u64,
    pub explored: u64,
    pub complete: bool,
}

fn as_graph6<S: Serializer>(graphs: &[Graph], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(graphs.iter().map(crate::graph6::encode))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("n must be at least 1")]
    NoVertices,
    #[error("n = {n} exceeds the enumeration cap of {cap}")]
    OverCap { n: usize, cap: usize },
    #[error("budget must be positive")]
    ZeroBudget,
    #[error("worker count must be positive")]
    ZeroWorkers,
    #[error("unknown connectivity `{0}` (expected any, connected or two_connected)")]
    Connectivity(String),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
}
