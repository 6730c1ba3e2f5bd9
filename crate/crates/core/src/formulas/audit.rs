//! Exhaustive arithmetic checks of the inequalities behind the main
//! theorems, over finite parameter grids, in exact rational arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Ratio;
use serde::Serialize;

use super::{binom2, half};

type Q = Ratio<i64>;

/// Failures kept per report; the count in `failed` is always complete.
const FAILURE_CAP: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Lemma {
    /// `g_r(n,a,k)` has increasing first differences in `a`.
    GConvexity,
    /// `f(n1) + f(n2) <= f(n1 + n2 - 1)`.
    FSubadditivity,
    /// `g_r(n,2,k) > g_r(n,t,k)` forces `n <= 5k/4 - 1`.
    GTwoWinsOnlySmall,
    /// `g_r(n,2,k) <= f(n,k,r)` when `n <= 5k/4 - 1`.
    GTwoBelowF,
    /// `g_r(n,(k-2)/2,k) <= f(n,k,r)` for even `k`.
    GHalfBelowF,
    /// `ex(n,K_r) = C(n,2) - (n-r+1)` for `r-1 <= n <= k-1`.
    TuranNearComplete,
    /// `ex(n,K_r) <= (t - 1/k)(n-1)` for `n < k`.
    CliqueSlope,
    /// `ex(k-1,K_r) + (t-1/2)(n-k+1) <= (t-1/k)(n-1)`.
    BlockPlusSlope,
    /// Growing the dense part from `k-2` to `k-1` vertices gains edges.
    DenseStep,
    /// `max(g_r(n,2,k), g_r(n,k/2-1,k)) = f(n,k,r)` at `r = k/2+1` for the
    /// two remainders just below `k/2`.
    CriticalCase,
}

impl Lemma {
    /// The nine grid lemmas, in audit order.
    pub const ALL: [Lemma; 9] = [
        Lemma::GConvexity,
        Lemma::FSubadditivity,
        Lemma::GTwoWinsOnlySmall,
        Lemma::GTwoBelowF,
        Lemma::GHalfBelowF,
        Lemma::TuranNearComplete,
        Lemma::CliqueSlope,
        Lemma::BlockPlusSlope,
        Lemma::DenseStep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Lemma::GConvexity => "g-convexity",
            Lemma::FSubadditivity => "f-subadditivity",
            Lemma::GTwoWinsOnlySmall => "g2-wins-only-small",
            Lemma::GTwoBelowF => "g2-below-f",
            Lemma::GHalfBelowF => "g-half-below-f",
            Lemma::TuranNearComplete => "turan-near-complete",
            Lemma::CliqueSlope => "clique-slope",
            Lemma::BlockPlusSlope => "block-plus-slope",
            Lemma::DenseStep => "dense-step",
            Lemma::CriticalCase => "critical-case",
        }
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `k` ranges over `k_min..=k_max` (each lemma further restricts it) and `n`
/// up to `n_max`; `r` and `a` range over everything admissible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditGrid {
    pub k_min: usize,
    pub k_max: usize,
    pub n_max: usize,
}

impl Default for AuditGrid {
    fn default() -> Self {
        AuditGrid {
            k_min: 3,
            k_max: 30,
            n_max: 200,
        }
    }
}

impl fmt::Display for AuditGrid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={}..{}, n<={}", self.k_min, self.k_max, self.n_max)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LemmaAuditReport {
    pub lemma: Lemma,
    pub grid: String,
    pub checked: u64,
    pub failed: u64,
    /// Parameter tuples of the first failures.
    pub failures: Vec<BTreeMap<&'static str, usize>>,
}

impl LemmaAuditReport {
    fn new(lemma: Lemma, grid: String) -> Self {
        LemmaAuditReport {
            lemma,
            grid,
            checked: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failed == 0
    }

    fn check(&mut self, ok: bool, params: &[(&'static str, usize)]) {
        self.checked += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < FAILURE_CAP {
                self.failures.push(params.iter().copied().collect());
            }
        }
    }
}

/// `ex(n, K_r)` for `n <= size`, `2 <= r <= size + 1`, precomputed.
struct ExTable {
    rows: Vec<Vec<i64>>,
}

impl ExTable {
    fn new(size: usize) -> Self {
        let rows = (0..=size)
            .map(|n| {
                (0..=size + 1)
                    .map(|r| {
                        if r < 2 {
                            0
                        } else {
                            super::t_edges(n, r - 1).unwrap() as i64
                        }
                    })
                    .collect()
            })
            .collect();
        ExTable { rows }
    }

    fn ex(&self, n: usize, r: usize) -> i64 {
        self.rows[n][r]
    }

    fn f(&self, n: usize, k: usize, r: usize) -> i64 {
        let (p, q) = ((n - 1) / (k - 2), (n - 1) % (k - 2));
        p as i64 * self.ex(k - 1, r) + self.ex(q + 1, r)
    }

    fn g(&self, n: usize, a: usize, k: usize, r: usize) -> i64 {
        ((n + a - k) * a) as i64 + self.ex(k - a, r)
    }
}

fn q(n: usize) -> Q {
    Q::from_integer(n as i64)
}

fn ks(grid: &AuditGrid, min: usize) -> std::ops::RangeInclusive<usize> {
    grid.k_min.max(min)..=grid.k_max
}

pub fn audit_lemmas(grid: &AuditGrid) -> Vec<LemmaAuditReport> {
    Lemma::ALL.iter().map(|&l| audit_lemma(l, grid)).collect()
}

pub fn audit_lemma(lemma: Lemma, grid: &AuditGrid) -> LemmaAuditReport {
    let table = ExTable::new(grid.k_max.max(3));
    let mut rep = LemmaAuditReport::new(lemma, grid.to_string());
    let n_max = grid.n_max;
    match lemma {
        Lemma::GConvexity => {
            for k in ks(grid, 5) {
                let t = half(k);
                for n in k..=n_max {
                    for r in 3..k {
                        for a in 2..t {
                            let m = |a| table.g(n, a + 1, k, r) - table.g(n, a, k, r);
                            rep.check(m(a + 1) > m(a), &[("n", n), ("k", k), ("r", r), ("a", a)]);
                        }
                    }
                }
            }
        }
        Lemma::FSubadditivity => {
            for k in ks(grid, 4) {
                for r in (half(k) + 2).max(3)..k {
                    for n in 3..=n_max {
                        let whole = table.f(n, k, r);
                        // n1 <= n2 by symmetry.
                        for n1 in 2..=n.div_ceil(2) {
                            let n2 = n + 1 - n1;
                            let ok = table.f(n1, k, r) + table.f(n2, k, r) <= whole;
                            rep.check(ok, &[("n1", n1), ("n2", n2), ("k", k), ("r", r)]);
                        }
                    }
                }
            }
        }
        Lemma::GTwoWinsOnlySmall => {
            for k in ks(grid, 7) {
                let t = half(k);
                for r in t + 2..k {
                    for n in k..=n_max {
                        let premise = table.g(n, 2, k, r) > table.g(n, t, k, r);
                        rep.check(
                            !premise || 4 * n + 4 <= 5 * k,
                            &[("n", n), ("k", k), ("r", r)],
                        );
                    }
                }
            }
        }
        Lemma::GTwoBelowF => {
            for k in ks(grid, 6) {
                for r in half(k) + 2..k {
                    for n in (k..=n_max).take_while(|&n| 4 * n + 4 <= 5 * k) {
                        let ok = table.g(n, 2, k, r) <= table.f(n, k, r);
                        rep.check(ok, &[("n", n), ("k", k), ("r", r)]);
                    }
                }
            }
        }
        Lemma::GHalfBelowF => {
            for k in ks(grid, 6).filter(|k| k % 2 == 0) {
                for r in k / 2 + 1..k {
                    for n in k..=n_max {
                        let ok = table.g(n, (k - 2) / 2, k, r) <= table.f(n, k, r);
                        rep.check(ok, &[("n", n), ("k", k), ("r", r)]);
                    }
                }
            }
        }
        Lemma::TuranNearComplete => {
            for k in ks(grid, 4) {
                for r in (half(k) + 2).max(3)..k {
                    for n in r - 1..=(k - 1).min(n_max) {
                        let closed = binom2(n) as i64 - (n as i64 - r as i64 + 1);
                        rep.check(table.ex(n, r) == closed, &[("n", n), ("k", k), ("r", r)]);
                    }
                }
            }
        }
        Lemma::CliqueSlope => {
            for k in ks(grid, 5) {
                let t = half(k);
                let slope = q(t) - Q::new(1, k as i64);
                for r in 3..=t + 1 {
                    for n in 2..k.min(n_max + 1) {
                        let ok = q(table.ex(n, r) as usize) <= slope * q(n - 1);
                        rep.check(ok, &[("n", n), ("k", k), ("r", r)]);
                    }
                }
            }
        }
        Lemma::BlockPlusSlope => {
            for k in ks(grid, 5) {
                let t = half(k);
                let low = q(t) - Q::new(1, 2);
                let high = q(t) - Q::new(1, k as i64);
                for r in 3..=t + 1 {
                    for n in k..=n_max {
                        let lhs = q(table.ex(k - 1, r) as usize) + low * q(n - k + 1);
                        rep.check(lhs <= high * q(n - 1), &[("n", n), ("k", k), ("r", r)]);
                    }
                }
            }
        }
        Lemma::DenseStep => {
            for k in ks(grid, 4) {
                let slope = q(half(k)) - Q::new(1, 2);
                for r in 3..k {
                    for n in k..=n_max {
                        let lhs = q(table.ex(k - 2, r) as usize) + slope * q(n - k + 2);
                        let rhs = q(table.ex(k - 1, r) as usize) + slope * q(n - k + 1);
                        rep.check(lhs < rhs, &[("n", n), ("k", k), ("r", r)]);
                    }
                }
            }
        }
        Lemma::CriticalCase => return critical_case_report(&[6, 8, 10, 12], 5),
    }
    rep
}

/// For each even `k` given, `r = k/2 + 1`, `p in 1..=p_max` and
/// `q in {k/2 - 1, k/2 - 2}` with `n = p(k-2) + q + 1`.
pub fn critical_case_report(k_values: &[usize], p_max: usize) -> LemmaAuditReport {
    let k_top = k_values.iter().copied().max().unwrap_or(6);
    let table = ExTable::new(k_top);
    let grid = format!("k in {k_values:?}, p=1..{p_max}");
    let mut rep = LemmaAuditReport::new(Lemma::CriticalCase, grid);
    for &k in k_values.iter().filter(|&&k| k >= 6 && k % 2 == 0) {
        let r = k / 2 + 1;
        for p in 1..=p_max {
            for rem in [k / 2 - 1, k / 2 - 2] {
                let n = p * (k - 2) + rem + 1;
                let g = table.g(n, 2, k, r).max(table.g(n, k / 2 - 1, k, r));
                rep.check(
                    g == table.f(n, k, r),
                    &[("n", n), ("k", k), ("r", r), ("p", p), ("q", rem)],
                );
            }
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{f_value, g_value};

    #[test]
    fn table_agrees_with_formulas() {
        let table = ExTable::new(12);
        for k in 5..=12 {
            for r in 3..k {
                for n in k..40 {
                    assert_eq!(table.f(n, k, r) as u64, f_value(n, k, r).unwrap());
                    for a in 2..=half(k) {
                        assert_eq!(table.g(n, a, k, r) as u64, g_value(n, a, k, r).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn spot_values() {
        // Convexity at (n,k,r) = (20,9,6).
        let table = ExTable::new(9);
        let d1 = table.g(20, 3, 9, 6) - table.g(20, 2, 9, 6);
        let d2 = table.g(20, 4, 9, 6) - table.g(20, 3, 9, 6);
        assert!(d1 < d2);
        assert_eq!(f_value(7, 7, 5).unwrap() * 2, 28);
        assert!(28 <= f_value(13, 7, 5).unwrap());
        assert_eq!(table.ex(7, 5), 18);
    }

    #[test]
    fn small_grid_passes_and_detects_planted_failure() {
        let grid = AuditGrid {
            k_min: 3,
            k_max: 12,
            n_max: 60,
        };
        for rep in audit_lemmas(&grid) {
            assert!(rep.passed(), "{} failed: {:?}", rep.lemma, rep.failures);
            assert!(rep.checked > 0, "{} checked nothing", rep.lemma);
        }
        let mut rep = LemmaAuditReport::new(Lemma::DenseStep, String::new());
        rep.check(false, &[("n", 1)]);
        assert!(!rep.passed());
        assert_eq!(rep.failures[0]["n"], 1);
    }

    #[test]
    fn critical_case_holds() {
        let rep = critical_case_report(&[6, 8, 10, 12], 5);
        assert_eq!(rep.checked, 40);
        assert!(rep.passed());
    }
}
