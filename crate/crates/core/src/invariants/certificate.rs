use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CertificateKind {
    Clique,
    Cycle,
    Path,
}

impl fmt::Display for CertificateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CertificateKind::Clique => "clique",
            CertificateKind::Cycle => "cycle",
            CertificateKind::Path => "path",
        })
    }
}

/// A concrete subgraph witness: a clique, a cycle (in traversal order) or a
/// path (in traversal order).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    pub vertices: Vec<usize>,
}

impl Certificate {
    pub fn clique(vertices: Vec<usize>) -> Self {
        Certificate {
            kind: CertificateKind::Clique,
            vertices,
        }
    }

    pub fn cycle(vertices: Vec<usize>) -> Self {
        Certificate {
            kind: CertificateKind::Cycle,
            vertices,
        }
    }

    pub fn path(vertices: Vec<usize>) -> Self {
        Certificate {
            kind: CertificateKind::Path,
            vertices,
        }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Checks the witness against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        if vs.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() {
            return false;
        }
        let consecutive = || vs.windows(2).all(|w| g.has_edge(w[0], w[1]));
        match self.kind {
            CertificateKind::Clique => vs
                .iter()
                .enumerate()
                .all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v))),
            CertificateKind::Cycle => {
                vs.len() >= 3 && consecutive() && g.has_edge(vs[0], vs[vs.len() - 1])
            }
            CertificateKind::Path => !vs.is_empty() && consecutive(),
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind)?;
        for v in &self.vertices {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    /// All cycles of length at least `k`.
    CyclesAtLeast,
    /// The path on `k` vertices.
    Path,
}

/// `{K_r, C>=k}` or `{K_r, P_k}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ForbiddenFamily {
    pub r: usize,
    pub k: usize,
    pub kind: FamilyKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("clique order must be at least 2, got {0}")]
    CliqueOrder(usize),
    #[error("length threshold must be at least 3, got {0}")]
    Threshold(usize),
    #[error("cannot parse family {0:?}; expected K<r>,C>=<k> or K<r>,P<k>")]
    Syntax(String),
}

impl ForbiddenFamily {
    pub fn new(r: usize, k: usize, kind: FamilyKind) -> Result<Self, FamilyError> {
        if r < 2 {
            return Err(FamilyError::CliqueOrder(r));
        }
        if k < 3 {
            return Err(FamilyError::Threshold(k));
        }
        Ok(ForbiddenFamily { r, k, kind })
    }

    pub fn cycles(r: usize, k: usize) -> Result<Self, FamilyError> {
        Self::new(r, k, FamilyKind::CyclesAtLeast)
    }

    pub fn paths(r: usize, k: usize) -> Result<Self, FamilyError> {
        Self::new(r, k, FamilyKind::Path)
    }
}

impl fmt::Display for ForbiddenFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FamilyKind::CyclesAtLeast => write!(f, "K{},C>={}", self.r, self.k),
            FamilyKind::Path => write!(f, "K{},P{}", self.r, self.k),
        }
    }
}

impl FromStr for ForbiddenFamily {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let syntax = || FamilyError::Syntax(s.to_string());
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (clique, rest) = compact.split_once(',').ok_or_else(syntax)?;
        let r = clique
            .strip_prefix(['K', 'k'])
            .and_then(|d| d.parse().ok())
            .ok_or_else(syntax)?;
        let upper = rest.to_ascii_uppercase();
        if let Some(d) = upper.strip_prefix("C>=") {
            Self::cycles(r, d.parse().map_err(|_| syntax())?)
        } else if let Some(d) = upper.strip_prefix('P') {
            Self::paths(r, d.parse().map_err(|_| syntax())?)
        } else {
            Err(syntax())
        }
    }
}
