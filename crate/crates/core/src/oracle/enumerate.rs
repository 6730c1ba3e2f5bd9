//! Level-by-level generation of family-free graphs up to isomorphism.
//!
//! Every family is closed under taking subgraphs, so each free graph on
//! `m + 1` vertices arises from a free graph on `m` vertices by adding a
//! vertex. For each parent we tabulate, over all neighborhoods `S` of the new
//! vertex, whether the child contains a forbidden subgraph through the new
//! vertex; only the free children survive. Children are reduced to canonical
//! codes and deduplicated between levels.

use rayon::prelude::*;

use super::canon::{Code, SmallGraph};
use super::{Connectivity, EnumerationTask, OracleError, OracleResult};
use crate::graph::Graph;
use crate::invariants::{Budget, FamilyKind, ForbiddenFamily};

/// Parents per work unit.
const CHUNK: usize = 512;

/// The free graphs on `task.n` vertices, one per isomorphism class, in
/// increasing order of canonical code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    pub graphs: Vec<Graph>,
    pub explored: u64,
    pub complete: bool,
}

/// Subset table `forbidden[S]`: whether joining a new vertex to `S` creates
/// a member of `fam` through it.
pub(crate) fn forbidden_table(p: &SmallGraph, fam: &ForbiddenFamily) -> Vec<bool> {
    let m = p.n();
    let size = 1usize << m;
    let mut t = vec![false; size];
    mark_cliques(p, 0, p.all(), fam.r - 1, &mut t);
    if m + 1 >= fam.k {
        let dp = hamiltonian_paths(p);
        match fam.kind {
            FamilyKind::CyclesAtLeast => mark_long_arcs(p, &dp, fam.k - 1, &mut t),
            FamilyKind::Path => mark_long_arms(p, &dp, fam.k - 1, &mut t),
        }
    }
    for i in 0..m {
        let b = 1usize << i;
        for s in 0..size {
            if s & b != 0 && t[s ^ b] {
                t[s] = true;
            }
        }
    }
    t
}

fn mark_cliques(p: &SmallGraph, cur: u16, cand: u16, need: usize, t: &mut [bool]) {
    if need == 0 {
        t[cur as usize] = true;
        return;
    }
    let mut rest = cand;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        mark_cliques(p, cur | 1 << v, rest & p.row(v), need - 1, t);
    }
}

/// `dp[mask * m + end]`: start vertices of Hamiltonian paths of `mask`
/// ending at `end`.
fn hamiltonian_paths(p: &SmallGraph) -> Vec<u16> {
    let m = p.n();
    let mut dp = vec![0u16; (1 << m) * m];
    for v in 0..m {
        dp[(1 << v) * m + v] = 1 << v;
    }
    for mask in 1usize..1 << m {
        for end in 0..m {
            let starts = dp[mask * m + end];
            if starts == 0 {
                continue;
            }
            let mut next = p.row(end) & !(mask as u16);
            while next != 0 {
                let w = next.trailing_zeros() as usize;
                next &= next - 1;
                dp[(mask | 1 << w) * m + w] |= starts;
            }
        }
    }
    dp
}

/// Pairs `{x, y}` joined by a path on at least `len` vertices: the new
/// vertex adjacent to both closes a cycle of length at least `len + 1`.
fn mark_long_arcs(p: &SmallGraph, dp: &[u16], len: usize, t: &mut [bool]) {
    let m = p.n();
    for mask in 1usize..1 << m {
        if (mask.count_ones() as usize) < len {
            continue;
        }
        for end in 0..m {
            let mut starts = dp[mask * m + end] & !(1 << end);
            while starts != 0 {
                let s = starts.trailing_zeros() as usize;
                starts &= starts - 1;
                t[1 << s | 1 << end] = true;
            }
        }
    }
}

/// Singletons starting a path on at least `len` vertices, and pairs starting
/// two disjoint paths on at least `len` vertices in total.
fn mark_long_arms(p: &SmallGraph, dp: &[u16], len: usize, t: &mut [bool]) {
    let m = p.n();
    let full = (1usize << m) - 1;
    let reach: Vec<u16> = (0..1usize << m)
        .map(|mask| {
            (0..m)
                .filter(|&e| dp[mask * m + e] != 0)
                .fold(0, |acc, e| acc | 1 << e)
        })
        .collect();
    let mut long_arm = 0u16;
    for (mask, &ends) in reach.iter().enumerate() {
        if mask.count_ones() as usize >= len {
            long_arm |= ends;
        }
    }
    for x in 0..m {
        if long_arm >> x & 1 == 1 {
            t[1 << x] = true;
        }
    }
    for a in 1..=full {
        let ea = reach[a] & !long_arm;
        let na = a.count_ones() as usize;
        if ea == 0 || na >= len {
            continue;
        }
        let rest = full & !a;
        let mut b = rest;
        while b != 0 {
            if na + b.count_ones() as usize >= len {
                let eb = reach[b] & !long_arm;
                let mut xs = ea;
                while xs != 0 && eb != 0 {
                    let x = xs.trailing_zeros() as usize;
                    xs &= xs - 1;
                    let mut ys = eb;
                    while ys != 0 {
                        let y = ys.trailing_zeros() as usize;
                        ys &= ys - 1;
                        t[1 << x | 1 << y] = true;
                    }
                }
            }
            b = (b - 1) & rest;
        }
    }
}

fn allowed_children(p: &SmallGraph, fam: Option<&ForbiddenFamily>) -> Vec<u16> {
    let size = 1usize << p.n();
    match fam {
        None => (0..size as u32).map(|s| s as u16).collect(),
        Some(fam) => {
            let t = forbidden_table(p, fam);
            (0..size).filter(|&s| !t[s]).map(|s| s as u16).collect()
        }
    }
}

fn meets(g: &SmallGraph, c: Connectivity) -> bool {
    match c {
        Connectivity::Any => true,
        Connectivity::Connected => g.is_connected(),
        Connectivity::TwoConnected => g.is_two_connected(),
    }
}

fn merge_sorted(a: Vec<Code>, b: Vec<Code>) -> Vec<Code> {
    if a.is_empty() {
        return b;
    }
    if b.is_empty() {
        return a;
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let next = if a[i] <= b[j] {
            i += 1;
            a[i - 1]
        } else {
            j += 1;
            b[j - 1]
        };
        if out.last() != Some(&next) {
            out.push(next);
        }
    }
    for &c in a[i..].iter().chain(&b[j..]) {
        if out.last() != Some(&c) {
            out.push(c);
        }
    }
    out
}

/// Runs `f` on the configured worker pool.
fn in_pool<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> T {
    match workers {
        None => f(),
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w)
            .build()
            .expect("thread pool")
            .install(f),
    }
}

struct Level {
    parents: Vec<SmallGraph>,
    explored: u64,
    complete: bool,
}

/// The free graphs on `n - 1` vertices, one per class. Each parent on `m`
/// vertices costs `2^m` budget units (its subset table); parents beyond the
/// budget are dropped and the run is marked incomplete.
fn grow_to_parents(task: &EnumerationTask) -> Level {
    let limit = effective_budget(task);
    let fam = task.family.as_ref();
    let mut used = 0u64;
    let mut explored = 0u64;
    let mut complete = true;
    let mut parents = vec![SmallGraph::empty(1)];
    for m in 1..task.n - 1 {
        truncate(&mut parents, m, limit, &mut used, &mut complete);
        let sequential = task.workers == Some(1);
        let work = |chunk: &[SmallGraph]| -> (Vec<Code>, u64) {
            let mut codes = Vec::new();
            for p in chunk {
                for s in allowed_children(p, fam) {
                    codes.push(p.with_vertex(s).canonical_code());
                }
            }
            let generated = codes.len() as u64;
            codes.sort_unstable();
            codes.dedup();
            (codes, generated)
        };
        let (codes, generated) = if sequential {
            parents
                .chunks(CHUNK)
                .map(work)
                .fold((Vec::new(), 0), |(a, x), (b, y)| {
                    (merge_sorted(a, b), x + y)
                })
        } else {
            in_pool(task.workers, || {
                parents.par_chunks(CHUNK).map(work).reduce(
                    || (Vec::new(), 0),
                    |(a, x), (b, y)| (merge_sorted(a, b), x + y),
                )
            })
        };
        explored += generated;
        parents = codes
            .into_iter()
            .map(|c| SmallGraph::from_code(m + 1, c))
            .collect();
    }
    let m = task.n - 1;
    if m >= 1 {
        truncate(&mut parents, m, limit, &mut used, &mut complete);
    }
    Level {
        parents,
        explored,
        complete,
    }
}

fn effective_budget(task: &EnumerationTask) -> Option<u64> {
    task.budget.or(Budget::from_env().nodes)
}

/// Keeps as many parents on `m` vertices as the remaining budget pays for.
fn truncate(
    parents: &mut Vec<SmallGraph>,
    m: usize,
    limit: Option<u64>,
    used: &mut u64,
    complete: &mut bool,
) {
    let cost = 1u64 << m;
    if let Some(limit) = limit {
        let affordable = (limit.saturating_sub(*used) / cost) as usize;
        if affordable < parents.len() {
            parents.truncate(affordable);
            *complete = false;
        }
    }
    *used += cost * parents.len() as u64;
}

pub(crate) fn check_task(task: &EnumerationTask) -> Result<(), OracleError> {
    if task.n == 0 {
        return Err(OracleError::NoVertices);
    }
    if task.n > task.cap {
        return Err(OracleError::OverCap {
            n: task.n,
            cap: task.cap,
        });
    }
    if task.n > super::canon::MAX_ORDER {
        return Err(OracleError::OverCap {
            n: task.n,
            cap: super::canon::MAX_ORDER,
        });
    }
    if effective_budget(task) == Some(0) {
        return Err(OracleError::ZeroBudget);
    }
    if task.workers == Some(0) {
        return Err(OracleError::ZeroWorkers);
    }
    Ok(())
}

/// One representative per isomorphism class of free graphs on `task.n`
/// vertices meeting the connectivity constraint.
pub fn enumerate_free_graphs(task: &EnumerationTask) -> Result<Enumeration, OracleError> {
    check_task(task)?;
    let n = task.n;
    if n == 1 {
        let g = SmallGraph::empty(1);
        let graphs = if meets(&g, task.connectivity) {
            vec![g.to_graph()]
        } else {
            Vec::new()
        };
        return Ok(Enumeration {
            graphs,
            explored: 1,
            complete: true,
        });
    }
    let Level {
        parents,
        mut explored,
        complete,
    } = grow_to_parents(task);
    let fam = task.family.as_ref();
    let work = |chunk: &[SmallGraph]| -> (Vec<Code>, u64) {
        let mut codes = Vec::new();
        let mut generated = 0;
        for p in chunk {
            for s in allowed_children(p, fam) {
                generated += 1;
                let child = p.with_vertex(s);
                if meets(&child, task.connectivity) {
                    codes.push(child.canonical_code());
                }
            }
        }
        codes.sort_unstable();
        codes.dedup();
        (codes, generated)
    };
    let (codes, generated) = if task.workers == Some(1) {
        parents
            .chunks(CHUNK)
            .map(work)
            .fold((Vec::new(), 0), |(a, x), (b, y)| {
                (merge_sorted(a, b), x + y)
            })
    } else {
        in_pool(task.workers, || {
            parents.par_chunks(CHUNK).map(work).reduce(
                || (Vec::new(), 0),
                |(a, x), (b, y)| (merge_sorted(a, b), x + y),
            )
        })
    };
    explored += generated;
    let graphs = codes
        .into_iter()
        .map(|c| SmallGraph::from_code(n, c).to_graph())
        .collect();
    Ok(Enumeration {
        graphs,
        explored,
        complete,
    })
}

/// Best edge count in a chunk and the canonical codes attaining it.
#[derive(Default)]
struct Best {
    edges: Option<usize>,
    codes: Vec<Code>,
    explored: u64,
}

impl Best {
    fn merge(mut self, other: Best) -> Best {
        self.explored += other.explored;
        match self.edges.cmp(&other.edges) {
            std::cmp::Ordering::Less => Best {
                edges: other.edges,
                codes: other.codes,
                explored: self.explored,
            },
            std::cmp::Ordering::Greater => self,
            std::cmp::Ordering::Equal => {
                self.codes = merge_sorted(self.codes, other.codes);
                self
            }
        }
    }
}

/// The largest edge count over the free graphs on `task.n` vertices meeting
/// the connectivity constraint, with the optimal classes (witnesses capped).
pub fn brute_force_ex(task: &EnumerationTask) -> Result<OracleResult, OracleError> {
    check_task(task)?;
    let n = task.n;
    let finish = |best: Best, complete: bool| {
        let optimal_classes = best.codes.len() as u64;
        let witnesses = best
            .codes
            .iter()
            .take(task.witness_cap)
            .map(|&c| SmallGraph::from_code(n, c).to_graph())
            .collect();
        OracleResult {
            max_edges: best.edges.map(|e| e as u64),
            witnesses,
            optimal_classes,
            explored: best.explored,
            complete,
        }
    };
    if n == 1 {
        let g = SmallGraph::empty(1);
        let best = if meets(&g, task.connectivity) {
            Best {
                edges: Some(0),
                codes: vec![0],
                explored: 1,
            }
        } else {
            Best {
                explored: 1,
                ..Best::default()
            }
        };
        return Ok(finish(best, true));
    }
    let Level {
        parents,
        explored,
        complete,
    } = grow_to_parents(task);
    let fam = task.family.as_ref();
    let work = |chunk: &[SmallGraph]| -> Best {
        let mut best = Best::default();
        for p in chunk {
            let base = p.edge_count();
            for s in allowed_children(p, fam) {
                best.explored += 1;
                let e = base + s.count_ones() as usize;
                if best.edges.is_some_and(|b| e < b) {
                    continue;
                }
                let child = p.with_vertex(s);
                if !meets(&child, task.connectivity) {
                    continue;
                }
                if best.edges.is_none_or(|b| e > b) {
                    best.edges = Some(e);
                    best.codes.clear();
                }
                best.codes.push(child.canonical_code());
            }
        }
        best.codes.sort_unstable();
        best.codes.dedup();
        best
    };
    let mut best = if task.workers == Some(1) {
        parents
            .chunks(CHUNK)
            .map(work)
            .fold(Best::default(), Best::merge)
    } else {
        in_pool(task.workers, || {
            parents
                .par_chunks(CHUNK)
                .map(work)
                .reduce(Best::default, Best::merge)
        })
    };
    best.explored += explored;
    Ok(finish(best, complete))
}
