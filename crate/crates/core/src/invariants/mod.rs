//! Exact graph invariants: clique number, circumference, longest paths,
//! blocks, cores, saturation, family freeness and structural checks.
//!
//! The exponential searches run on bitmasks of at most
//! [`MAX_SEARCH_VERTICES`] vertices per block or component, after open-twin
//! thinning; larger instances fail with [`InvariantError::TooLarge`]. All of
//! them honor a node [`Budget`], which defaults to `CIRCUM_TURAN_BUDGET`.

mod certificate;
mod clique;
mod connectivity;
mod cycles;
mod search;
mod structure;

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub use certificate::{Certificate, CertificateKind, FamilyError, FamilyKind, ForbiddenFamily};
pub use clique::{clique_number, clique_number_with, find_clique};
pub use connectivity::{
    biconnected_components, block_decomposition, cut_vertices, is_two_connected, BlockDecomposition,
};
pub use cycles::{
    circumference, circumference_with, find_cycle_at_least, find_path_at_least, longest_path_order,
    longest_path_order_with,
};
pub use search::{Budget, MAX_SEARCH_VERTICES};
pub use structure::{
    bondy_terms, check_bondy, check_dirac, check_kopylov, check_saturated_lemma, core,
    core_vertices, cycle_partition, is_kr_saturated, kopylov_bound, BondyTerms, CyclePartition,
    SaturatedLemmaOutcome,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InvariantError {
    #[error("search budget of {limit} nodes exhausted")]
    BudgetExceeded { limit: u64 },
    #[error(
        "search instance has {n} vertices after reduction; the limit is {MAX_SEARCH_VERTICES}"
    )]
    TooLarge { n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("graph is a forest")]
    Forest,
    #[error("certificate does not verify against the graph")]
    InvalidCertificate,
    #[error("vertex set is not contained in the graph")]
    VertexSetOutOfRange,
    #[error("{0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", content = "certificate", rename_all = "lowercase")]
pub enum Freeness {
    Free,
    Violation(Certificate),
}

impl Freeness {
    pub fn is_free(&self) -> bool {
        matches!(self, Freeness::Free)
    }
}

/// Whether `g` contains no member of `fam`; otherwise a witness: a `K_r`
/// (checked first), a cycle of length at least `k`, or a path on at least `k`
/// vertices.
pub fn is_free(g: &Graph, fam: &ForbiddenFamily) -> Result<Freeness, InvariantError> {
    is_free_with(g, fam, Budget::from_env())
}

pub fn is_free_with(
    g: &Graph,
    fam: &ForbiddenFamily,
    budget: Budget,
) -> Result<Freeness, InvariantError> {
    if let Some(c) = find_clique(g, fam.r, budget)? {
        return Ok(Freeness::Violation(c));
    }
    let long = match fam.kind {
        FamilyKind::CyclesAtLeast => find_cycle_at_least(g, fam.k, budget)?,
        FamilyKind::Path => find_path_at_least(g, fam.k, budget)?,
    };
    Ok(long.map_or(Freeness::Free, Freeness::Violation))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, empty_graph, join};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    #[test]
    fn freeness_examples() {
        let k23 = join(&empty_graph(2), &empty_graph(3));
        assert!(is_free(&k23, &ForbiddenFamily::cycles(3, 5).unwrap())
            .unwrap()
            .is_free());
        assert_eq!(
            is_free(&complete_graph(4), &ForbiddenFamily::cycles(4, 9).unwrap()).unwrap(),
            Freeness::Violation(Certificate::clique(vec![0, 1, 2, 3]))
        );
        match is_free(&cycle_graph(7), &ForbiddenFamily::cycles(3, 7).unwrap()).unwrap() {
            Freeness::Violation(c) => {
                assert_eq!(c.kind, CertificateKind::Cycle);
                assert_eq!(c.len(), 7);
            }
            Freeness::Free => panic!("C_7 contains a 7-cycle"),
        }
    }

    proptest! {
        #[test]
        fn freeness_agrees_with_invariants(g in arb_graph(9), r in 2usize..6, k in 3usize..9) {
            prop_assume!(g.n() > 0);
            let (omega, _) = clique_number(&g).unwrap();
            let (c, _) = circumference(&g).unwrap();
            let (l, _) = longest_path_order(&g).unwrap();
            for (fam, long_ok) in [
                (ForbiddenFamily::cycles(r, k).unwrap(), c < k),
                (ForbiddenFamily::paths(r, k).unwrap(), l < k),
            ] {
                let verdict = is_free(&g, &fam).unwrap();
                prop_assert_eq!(verdict.is_free(), omega < r && long_ok);
                if let Freeness::Violation(cert) = verdict {
                    prop_assert!(cert.verify(&g));
                }
            }
        }
    }
}
