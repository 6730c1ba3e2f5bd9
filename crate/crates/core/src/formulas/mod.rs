//! Closed-form edge counts and the extremal-number dispatchers.
//!
//! Edge counts are `u64`. Throughout, `t = floor((k-1)/2)`.

mod audit;

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

use crate::constructions::{turan_part_sizes, ConstructionId};

pub use audit::{audit_lemmas, critical_case_report, AuditGrid, Lemma, LemmaAuditReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("requires {requirement} (got {got})")]
pub struct ParamError {
    pub requirement: &'static str,
    pub got: String,
}

pub(crate) fn require(
    ok: bool,
    requirement: &'static str,
    got: impl FnOnce() -> String,
) -> Result<(), ParamError> {
    if ok {
        Ok(())
    } else {
        Err(ParamError {
            requirement,
            got: got(),
        })
    }
}

/// `floor((k-1)/2)`.
pub fn half(k: usize) -> usize {
    k.saturating_sub(1) / 2
}

pub fn binom2(n: usize) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) / 2
}

/// Edge count of `T(n, p)`.
pub fn t_edges(n: usize, p: usize) -> Result<u64, ParamError> {
    require(p >= 1, "p >= 1", || format!("p={p}"))?;
    Ok(binom2(n) - turan_part_sizes(n, p).into_iter().map(binom2).sum::<u64>())
}

/// `ex(n, K_r) = t(n, r-1)`.
pub fn ex_clique(n: usize, r: usize) -> Result<u64, ParamError> {
    require(r >= 2, "r >= 2", || format!("r={r}"))?;
    t_edges(n, r - 1)
}

fn ex(n: usize, r: usize) -> u64 {
    ex_clique(n, r).expect("r >= 2 checked by caller")
}

/// Quotient and remainder of a division-with-offset decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisionDecomp {
    pub p: usize,
    pub q: usize,
}

/// `n - 1 = p(k-2) + q` with `0 <= q <= k-3`.
pub fn decomp_cycle(n: usize, k: usize) -> Result<DivisionDecomp, ParamError> {
    require(n >= 1 && k >= 3, "n >= 1 and k >= 3", || {
        format!("n={n}, k={k}")
    })?;
    Ok(DivisionDecomp {
        p: (n - 1) / (k - 2),
        q: (n - 1) % (k - 2),
    })
}

/// `n = p(k-1) + q` with `0 <= q <= k-2`.
pub fn decomp_path(n: usize, k: usize) -> Result<DivisionDecomp, ParamError> {
    require(k >= 2, "k >= 2", || format!("k={k}"))?;
    Ok(DivisionDecomp {
        p: n / (k - 1),
        q: n % (k - 1),
    })
}

/// `f(n,k,r) = p ex(k-1, K_r) + ex(q+1, K_r)`. Defined for every `n >= 1`
/// (with `p = 0` below `k`), which the subadditivity audit relies on.
pub fn f_value(n: usize, k: usize, r: usize) -> Result<u64, ParamError> {
    let d = decomp_cycle(n, k)?;
    require(3 <= r && r < k, "3 <= r < k", || format!("k={k}, r={r}"))?;
    Ok(d.p as u64 * ex(k - 1, r) + ex(d.q + 1, r))
}

fn check_a(n: usize, a: usize, k: usize) -> Result<(), ParamError> {
    require(
        2 <= a && a <= half(k) && n >= k,
        "2 <= a <= floor((k-1)/2) and n >= k",
        || format!("n={n}, a={a}, k={k}"),
    )
}

/// `g_r(n,a,k) = (n-k+a) a + ex(k-a, K_r)`.
pub fn g_value(n: usize, a: usize, k: usize, r: usize) -> Result<u64, ParamError> {
    check_a(n, a, k)?;
    require(r >= 3, "r >= 3", || format!("r={r}"))?;
    Ok(g_raw(n, a, k, r))
}

/// The `g_r` expression without range checks (needs `a <= k` and `k <= n + a`).
pub(crate) fn g_raw(n: usize, a: usize, k: usize, r: usize) -> u64 {
    ((n + a - k) * a) as u64 + ex(k - a, r)
}

/// `h(n,a,k) = C(k-a, 2) + a (n-k+a)`.
pub fn h_value(n: usize, a: usize, k: usize) -> Result<u64, ParamError> {
    check_a(n, a, k)?;
    Ok(binom2(k - a) + (a * (n + a - k)) as u64)
}

pub fn e_g1(n: usize, k: usize) -> Result<u64, ParamError> {
    require(n >= k && k >= 5, "n >= k >= 5", || format!("n={n}, k={k}"))?;
    let t = half(k);
    Ok(binom2(t) + (t * (n - t)) as u64)
}

/// `g'_r(n,s,k) = (n-s) s + ex(s, K_{r-1})`.
pub fn g_prime(n: usize, s: usize, r: usize) -> Result<u64, ParamError> {
    require(s <= n && r >= 3, "s <= n and r >= 3", || {
        format!("n={n}, s={s}, r={r}")
    })?;
    Ok(((n - s) * s) as u64 + ex(s, r - 1))
}

/// Edge count of `G_2`, which is `g'_r(n, t, k)`.
pub fn e_g2(n: usize, k: usize, r: usize) -> Result<u64, ParamError> {
    let t = half(k);
    require(
        n >= k && k >= 5 && 3 <= r && r <= t + 1,
        "n >= k >= 5 and 3 <= r <= floor((k-1)/2) + 1",
        || format!("n={n}, k={k}, r={r}"),
    )?;
    g_prime(n, t, r)
}

/// `p ex(k-1, K_r) + ex(q, K_r)` with `n = p(k-1) + q`.
pub fn e_g3(n: usize, k: usize, r: usize) -> Result<u64, ParamError> {
    require(
        k / 2 < r && r < k && k <= n,
        "floor(k/2) + 1 <= r < k <= n",
        || format!("n={n}, k={k}, r={r}"),
    )?;
    let d = decomp_path(n, k)?;
    Ok(d.p as u64 * ex(k - 1, r) + ex(d.q, r))
}

pub fn e_g4(n: usize, k: usize) -> Result<u64, ParamError> {
    require(n >= k && k >= 4, "n >= k >= 4", || format!("n={n}, k={k}"))?;
    let s = k / 2 - 1;
    Ok(binom2(s) + (s * (n - s)) as u64)
}

/// `ex(s, K_{r-1}) + s (n - s)` with `s = floor(k/2) - 1`.
pub fn e_katona_xiao(n: usize, k: usize, r: usize) -> Result<u64, ParamError> {
    require(
        3 <= r && r <= k / 2 && k <= n,
        "3 <= r <= floor(k/2) and k <= n",
        || format!("n={n}, k={k}, r={r}"),
    )?;
    let s = k / 2 - 1;
    Ok(ex(s, r - 1) + (s * (n - s)) as u64)
}

/// Upper bound `(k-1)(n-1)/2` on graphs without cycles of length `>= k`.
pub fn eg_cycle_bound(n: usize, k: usize) -> Result<Ratio<u64>, ParamError> {
    require(k >= 3, "k >= 3", || format!("k={k}"))?;
    Ok(Ratio::new(((k - 1) * n.saturating_sub(1)) as u64, 2))
}

/// Upper bound `(k-2)n/2` on graphs without a path on `k` vertices.
pub fn eg_path_bound(n: usize, k: usize) -> Result<Ratio<u64>, ParamError> {
    require(k >= 2, "k >= 2", || format!("k={k}"))?;
    Ok(Ratio::new(((k - 2) * n) as u64, 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Status {
    /// Holds for every admissible `n`.
    Exact,
    /// From a theorem with an `n` threshold, and the threshold is met.
    ExactByTheorem,
    /// Below the threshold: the value is attained but not proved optimal.
    LowerBoundOnly,
    /// Valid only for sufficiently large `n`, with no explicit threshold.
    AsymptoticOnly,
}

impl Status {
    pub fn is_exact(self) -> bool {
        matches!(self, Status::Exact | Status::ExactByTheorem)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Problem {
    Cycles,
    #[serde(rename = "cycles2conn")]
    Cycles2Conn,
    Paths,
}

impl fmt::Display for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Problem::Cycles => "cycles",
            Problem::Cycles2Conn => "cycles2conn",
            Problem::Paths => "paths",
        })
    }
}

impl std::str::FromStr for Problem {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cycles" => Ok(Problem::Cycles),
            "cycles2conn" => Ok(Problem::Cycles2Conn),
            "paths" => Ok(Problem::Paths),
            other => Err(format!(
                "unknown problem {other:?}; expected cycles, cycles2conn or paths"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtremalResult {
    pub problem: Problem,
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub value: u64,
    pub status: Status,
    /// Every listed construction has exactly `value` edges.
    pub achievers: Vec<ConstructionId>,
}

/// Keeps the candidates attaining the maximum value, in the given order.
fn best_of(candidates: Vec<(u64, ConstructionId)>) -> (u64, Vec<ConstructionId>) {
    let value = candidates
        .iter()
        .map(|c| c.0)
        .max()
        .expect("at least one candidate");
    let mut achievers: Vec<ConstructionId> = candidates
        .into_iter()
        .filter(|c| c.0 == value)
        .map(|c| c.1)
        .collect();
    achievers.dedup();
    (value, achievers)
}

fn check_main(n: usize, k: usize, r: usize) -> Result<(), ParamError> {
    require(3 <= r && r < k && k <= n, "3 <= r < k <= n", || {
        format!("n={n}, k={k}, r={r}")
    })
}

/// `ex(n, {K_r, C>=k})`.
pub fn turan_number_cycles(n: usize, k: usize, r: usize) -> Result<ExtremalResult, ParamError> {
    check_main(n, k, r)?;
    let t = half(k);
    let result = |value, status, achievers| ExtremalResult {
        problem: Problem::Cycles,
        n,
        k,
        r,
        value,
        status,
        achievers,
    };
    if (k, r) == (4, 3) {
        // Triangle-free with no cycle of length >= 4: a forest.
        return Ok(result(
            n as u64 - 1,
            Status::Exact,
            vec![ConstructionId::Tree { n }],
        ));
    }
    if r >= t + 2 {
        let mut cands = vec![(f_value(n, k, r)?, ConstructionId::F { n, k, r })];
        if k % 2 == 1 {
            cands.push((e_g1(n, k)?, ConstructionId::G1 { n, k }));
        }
        let (value, achievers) = best_of(cands);
        return Ok(result(value, Status::Exact, achievers));
    }
    // Threshold n >= k^3 / 4.
    let status = if 4 * n >= k * k * k {
        Status::ExactByTheorem
    } else {
        Status::LowerBoundOnly
    };
    Ok(result(
        e_g2(n, k, r)?,
        status,
        vec![ConstructionId::G2 { n, k, r }],
    ))
}

/// `ex(n, {K_r, C>=k})` over 2-connected graphs.
pub fn turan_number_cycles_2conn(
    n: usize,
    k: usize,
    r: usize,
) -> Result<ExtremalResult, ParamError> {
    require(
        n >= k && k >= 5 && 3 <= r && r < k,
        "n >= k >= 5 and 3 <= r < k",
        || format!("n={n}, k={k}, r={r}"),
    )?;
    let t = half(k);
    let result = |value, status, achievers| ExtremalResult {
        problem: Problem::Cycles2Conn,
        n,
        k,
        r,
        value,
        status,
        achievers,
    };
    if r >= t + 2 {
        let (value, achievers) = best_of(vec![
            (
                g_value(n, 2, k, r)?,
                ConstructionId::GrNak { n, a: 2, k, r },
            ),
            (
                g_value(n, t, k, r)?,
                ConstructionId::GrNak { n, a: t, k, r },
            ),
        ]);
        return Ok(result(value, Status::Exact, achievers));
    }
    // Threshold n >= k^2 / 2.
    let status = if 2 * n >= k * k {
        Status::ExactByTheorem
    } else {
        Status::LowerBoundOnly
    };
    Ok(result(
        e_g2(n, k, r)?,
        status,
        vec![ConstructionId::G2 { n, k, r }],
    ))
}

/// `ex(n, {K_r, P_k})`.
///
/// Also accepts `r = 2` (edgeless graphs, value 0), the degenerate end of
/// the exact range `r > floor(k/2)` when `k = 3`.
pub fn turan_number_paths(n: usize, k: usize, r: usize) -> Result<ExtremalResult, ParamError> {
    require(2 <= r && r < k && k <= n, "2 <= r < k <= n", || {
        format!("n={n}, k={k}, r={r}")
    })?;
    let result = |value, status, achievers| ExtremalResult {
        problem: Problem::Paths,
        n,
        k,
        r,
        value,
        status,
        achievers,
    };
    if r > k / 2 {
        let mut cands = vec![(e_g3(n, k, r)?, ConstructionId::G3 { n, k, r })];
        if k.is_multiple_of(2) {
            cands.push((e_g4(n, k)?, ConstructionId::G4 { n, k }));
        }
        let (value, achievers) = best_of(cands);
        return Ok(result(value, Status::Exact, achievers));
    }
    Ok(result(
        e_katona_xiao(n, k, r)?,
        Status::AsymptoticOnly,
        vec![ConstructionId::KatonaXiao { n, k, r }],
    ))
}

pub fn turan_number(
    problem: Problem,
    n: usize,
    k: usize,
    r: usize,
) -> Result<ExtremalResult, ParamError> {
    match problem {
        Problem::Cycles => turan_number_cycles(n, k, r),
        Problem::Cycles2Conn => turan_number_cycles_2conn(n, k, r),
        Problem::Paths => turan_number_paths(n, k, r),
    }
}
