//! Cores, saturation and the classical structural bounds on long cycles.

use serde::Serialize;

use super::clique::find_clique;
use super::connectivity::is_two_connected;
use super::cycles::circumference;
use super::search::Budget;
use super::{Certificate, CertificateKind, InvariantError};
use crate::graph::{Graph, VertexSet};

/// Vertices of the `d`-core (largest induced subgraph with minimum degree at
/// least `d`), sorted.
pub fn core_vertices(g: &Graph, d: usize) -> Vec<usize> {
    let n = g.n();
    let mut degree: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut queue: Vec<usize> = (0..n).filter(|&v| degree[v] < d).collect();
    for &v in &queue {
        removed[v] = true;
    }
    while let Some(v) = queue.pop() {
        for w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
                if degree[w] < d {
                    removed[w] = true;
                    queue.push(w);
                }
            }
        }
    }
    (0..n).filter(|&v| !removed[v]).collect()
}

/// The `d`-core as a graph, relabeled to `0..` in increasing original order.
pub fn core(g: &Graph, d: usize) -> Graph {
    g.induced_subgraph(&core_vertices(g, d))
}

/// `K_r`-free, and every nonedge has `r - 2` pairwise adjacent common
/// neighbors (so adding it creates a `K_r`).
pub fn is_kr_saturated(g: &Graph, r: usize) -> Result<bool, InvariantError> {
    if r < 2 {
        return Err(InvariantError::InvalidParameter(format!(
            "r must be at least 2, got {r}"
        )));
    }
    let budget = Budget::from_env();
    if find_clique(g, r, budget)?.is_some() {
        return Ok(false);
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let common: Vec<usize> = g
                .neighbor_set(u)
                .intersection(g.neighbor_set(v))
                .copied()
                .collect();
            if common.len() < r - 2 {
                return Ok(false);
            }
            if find_clique(&g.induced_subgraph(&common), r - 2, budget)?.is_none() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Edges of `g` split by a longest cycle `C`: `e_on_cycle` counts edges with
/// both ends on `C` (chords included), `e_off` counts `e(G-C) + e(G-C, C)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CyclePartition {
    pub cycle: Certificate,
    pub c: usize,
    pub e_on_cycle: usize,
    pub e_off: usize,
}

pub fn cycle_partition(g: &Graph) -> Result<CyclePartition, InvariantError> {
    let (c, cycle) = circumference(g)?;
    let cycle = cycle.ok_or(InvariantError::Forest)?;
    let on: VertexSet = cycle.vertices.iter().copied().collect();
    let e_on_cycle = g
        .edges()
        .filter(|&(u, v)| on.contains(u) && on.contains(v))
        .count();
    Ok(CyclePartition {
        e_off: g.edge_count() - e_on_cycle,
        cycle,
        c,
        e_on_cycle,
    })
}

/// `c(G) >= min(2 delta, n)` for a 2-connected graph.
pub fn check_dirac(g: &Graph) -> Result<bool, InvariantError> {
    if !is_two_connected(g) {
        return Err(InvariantError::NotTwoConnected);
    }
    let (c, _) = circumference(g)?;
    Ok(c >= (2 * g.min_degree()).min(g.n()))
}

/// For a path `P` with `m` edges and ends `x`, `y` in a 2-connected graph,
/// `c(G) >= min(m + 1, d_P(x) + d_P(y))` where `d_P` counts neighbors on `P`.
pub fn check_kopylov(g: &Graph, path: &Certificate) -> Result<bool, InvariantError> {
    if path.kind != CertificateKind::Path || !path.verify(g) {
        return Err(InvariantError::InvalidCertificate);
    }
    if !is_two_connected(g) {
        return Err(InvariantError::NotTwoConnected);
    }
    Ok(circumference(g)?.0 >= kopylov_bound(g, path))
}

pub fn kopylov_bound(g: &Graph, path: &Certificate) -> usize {
    let on: VertexSet = path.vertices.iter().copied().collect();
    let d_p = |v: usize| g.neighbors(v).filter(|&w| on.contains(w)).count();
    let x = path.vertices[0];
    let y = path.vertices[path.len() - 1];
    path.len().min(d_p(x) + d_p(y))
}

/// Both sides of `e(G-C) + e(G-C, C) <= floor(c/2) (n - c)` for a longest
/// cycle `C`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BondyTerms {
    pub partition: CyclePartition,
    pub bound: usize,
}

impl BondyTerms {
    pub fn holds(&self) -> bool {
        self.partition.e_off <= self.bound
    }
}

pub fn bondy_terms(g: &Graph) -> Result<BondyTerms, InvariantError> {
    let partition = cycle_partition(g)?;
    let bound = partition.c / 2 * (g.n() - partition.c);
    Ok(BondyTerms { partition, bound })
}

/// Evaluates the inequality for any graph with a cycle. It is guaranteed
/// only for 2-connected graphs: the bowtie (two triangles sharing a vertex)
/// has `e_off = 3` against a bound of `2`.
pub fn check_bondy(g: &Graph) -> Result<bool, InvariantError> {
    Ok(bondy_terms(g)?.holds())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SaturatedLemmaOutcome {
    NotApplicable,
    Holds,
    Fails,
}

/// The saturation transfer: if `H = G[h]` is `K_r`-saturated with
/// `delta(H) >= t + 1`, `k >= 5`, `r >= t + 2` (where `t = floor((k-1)/2)`)
/// and filling in `H` creates a cycle of length at least `k`, then `G`
/// already has one.
pub fn check_saturated_lemma(
    g: &Graph,
    h: &VertexSet,
    r: usize,
    k: usize,
) -> Result<SaturatedLemmaOutcome, InvariantError> {
    if !h.within(g) {
        return Err(InvariantError::VertexSetOutOfRange);
    }
    let t = k.saturating_sub(1) / 2;
    let members = h.to_vec();
    let sub = g.induced_subgraph(&members);
    let applicable = k >= 5
        && r >= t + 2
        && !members.is_empty()
        && sub.min_degree() > t
        && is_kr_saturated(&sub, r)?;
    if !applicable {
        return Ok(SaturatedLemmaOutcome::NotApplicable);
    }
    let mut completed = g.clone();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            if !completed.has_edge(u, v) {
                completed.insert_edge(u, v);
            }
        }
    }
    if circumference(&completed)?.0 < k {
        return Ok(SaturatedLemmaOutcome::NotApplicable);
    }
    Ok(if circumference(g)?.0 >= k {
        SaturatedLemmaOutcome::Holds
    } else {
        SaturatedLemmaOutcome::Fails
    })
}
