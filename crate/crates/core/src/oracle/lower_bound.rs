//! Randomized edge-addition saturation for lower bounds on larger `n`.
//!
//! Adding edges never removes a forbidden subgraph, so an edge rejected once
//! stays rejected: a single pass over the nonedges in random order yields a
//! saturated graph. Rounds use fresh orders from a seeded generator and
//! alternate between restarting and perturbing the best graph found.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Connectivity, OracleError, OracleResult, SmallGraph, DEFAULT_WITNESS_CAP};
use crate::graph::{empty_graph, Graph};
use crate::invariants::{is_free_with, Budget, ForbiddenFamily};

/// Nonedges of `g` whose addition keeps it free of `fam`.
pub fn addable_edges(g: &Graph, fam: &ForbiddenFamily) -> Result<Vec<(usize, usize)>, OracleError> {
    let budget = Budget::from_env();
    let mut out = Vec::new();
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) {
                let h = g.with_edge(u, v).expect("vertices in range");
                if is_free_with(&h, fam, budget)?.is_free() {
                    out.push((u, v));
                }
            }
        }
    }
    Ok(out)
}

/// Removes one to three random edges; returns them so they are retried last.
fn perturb(g: &Graph, rng: &mut ChaCha8Rng) -> (Graph, Vec<(usize, usize)>) {
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.shuffle(rng);
    let drop = rng.random_range(1..=3).min(edges.len());
    let dropped = edges.split_off(edges.len() - drop);
    (Graph::from_edges(g.n(), &edges).expect("subgraph"), dropped)
}

/// Adds every edge that keeps `g` free, trying nonedges in random order and
/// `last` at the end. Stops early when `trials` runs out.
fn saturate(
    mut g: Graph,
    last: &[(usize, usize)],
    fam: &ForbiddenFamily,
    check: Budget,
    rng: &mut ChaCha8Rng,
    trials: &mut u64,
    explored: &mut u64,
) -> Result<Graph, OracleError> {
    let n = g.n();
    let mut order: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v) && !last.contains(&(u, v)))
        .collect();
    order.shuffle(rng);
    order.extend_from_slice(last);
    for (u, v) in order {
        if *trials == 0 {
            break;
        }
        *trials -= 1;
        *explored += 1;
        let h = g.with_edge(u, v).expect("vertices in range");
        if is_free_with(&h, fam, check)?.is_free() {
            g = h;
        }
    }
    Ok(g)
}

/// Saturation search from the empty graph on `n` vertices.
pub fn lower_bound_search(
    n: usize,
    fam: &ForbiddenFamily,
    connectivity: Connectivity,
    budget: Option<u64>,
    seed: u64,
) -> Result<OracleResult, OracleError> {
    lower_bound_search_from(&empty_graph(n), fam, connectivity, budget, seed)
}

/// Saturation search from `start`. Rounds alternate between saturating
/// `start` and saturating the best graph so far after deleting a few edges.
/// `budget` bounds the number of edge trials over all rounds; the default
/// allows 16 full passes. Saturated graphs failing `connectivity` are not
/// reported. The result is a lower bound and never marked complete; a
/// `start` that is not free yields no value.
pub fn lower_bound_search_from(
    start: &Graph,
    fam: &ForbiddenFamily,
    connectivity: Connectivity,
    budget: Option<u64>,
    seed: u64,
) -> Result<OracleResult, OracleError> {
    let n = start.n();
    if n == 0 {
        return Err(OracleError::NoVertices);
    }
    if budget == Some(0) {
        return Err(OracleError::ZeroBudget);
    }
    let check = Budget::from_env();
    if !is_free_with(start, fam, check)?.is_free() {
        return Ok(OracleResult {
            max_edges: None,
            witnesses: Vec::new(),
            optimal_classes: 0,
            explored: 0,
            complete: false,
        });
    }
    let pass = (n * (n - 1) / 2 - start.edge_count()).max(1) as u64;
    let mut trials = budget.unwrap_or(16 * pass);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<usize> = None;
    let mut witnesses: Vec<Graph> = Vec::new();
    let mut seen_codes = Vec::new();
    let mut explored = 0u64;
    let mut incumbent: Option<Graph> = None;
    let mut round = 0u64;
    while trials > 0 {
        // Alternate fresh restarts with perturbations of the incumbent.
        let (g, dropped) = match &incumbent {
            Some(inc) if round % 2 == 1 => perturb(inc, &mut rng),
            _ => (start.clone(), Vec::new()),
        };
        round += 1;
        let g = saturate(
            g,
            &dropped,
            fam,
            check,
            &mut rng,
            &mut trials,
            &mut explored,
        )?;
        let e = g.edge_count();
        if incumbent.as_ref().is_none_or(|inc| e >= inc.edge_count()) {
            incumbent = Some(g.clone());
        }
        if !connectivity.holds(&g) || best.is_some_and(|b| e < b) {
            continue;
        }
        if best.is_none_or(|b| e > b) {
            best = Some(e);
            witnesses.clear();
            seen_codes.clear();
        }
        // Distinct up to isomorphism when small enough to canonize.
        let fresh = match SmallGraph::from_graph(&g).map(|s| s.canonical_code()) {
            Some(code) if seen_codes.contains(&code) => false,
            Some(code) => {
                seen_codes.push(code);
                true
            }
            None => !witnesses.contains(&g),
        };
        if fresh && witnesses.len() < DEFAULT_WITNESS_CAP {
            witnesses.push(g);
        }
    }
    let optimal_classes = if seen_codes.is_empty() {
        witnesses.len()
    } else {
        seen_codes.len()
    } as u64;
    Ok(OracleResult {
        max_edges: best.map(|e| e as u64),
        witnesses,
        optimal_classes,
        explored,
        complete: false,
    })
}
