//! Deterministic generators for the extremal and lower-bound graphs.
//!
//! Labelings are fixed so that output is reproducible: Turán parts are laid
//! out consecutively with the larger parts first, shared or attaching
//! vertices come first, and blocks follow in construction order.

use std::fmt;

use serde::Serialize;

use crate::formulas::{self, decomp_cycle, decomp_path, ParamError};
use crate::graph::{complete_graph, disjoint_union, empty_graph, join, star_graph, Graph};
use crate::invariants::{
    find_clique, find_cycle_at_least, is_free_with, Budget, ForbiddenFamily, InvariantError,
};

/// Part sizes of `T(n, p)`: the first `n mod p` parts get `ceil(n/p)`.
pub fn turan_part_sizes(n: usize, p: usize) -> Vec<usize> {
    (0..p).map(|i| n / p + usize::from(i < n % p)).collect()
}

fn multipartite(sizes: &[usize]) -> Graph {
    let part_of: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect();
    from_parts(&part_of)
}

/// Complete multipartite graph where vertex `v` lies in part `part_of[v]`.
fn from_parts(part_of: &[usize]) -> Graph {
    let n = part_of.len();
    let mut g = empty_graph(n);
    for u in 0..n {
        for v in u + 1..n {
            if part_of[u] != part_of[v] {
                g.insert_edge(u, v);
            }
        }
    }
    g
}

/// The balanced complete `p`-partite graph `T(n, p)`.
pub fn turan_graph(n: usize, p: usize) -> Result<Graph, ParamError> {
    formulas::require(p >= 1, "p >= 1", || format!("p={p}"))?;
    Ok(multipartite(&turan_part_sizes(n, p)))
}

/// `p` copies of `T(k-1, r-1)` and one `T(q+1, r-1)` sharing vertex 0, where
/// `n - 1 = p(k-2) + q`. The shared vertex lies in a largest part of each
/// block; blocks follow consecutively.
pub fn construct_f(n: usize, k: usize, r: usize) -> Result<Graph, ParamError> {
    let d = decomp_cycle(n, k)?;
    formulas::require(3 <= r && r < k, "3 <= r < k", || format!("k={k}, r={r}"))?;
    let big = turan_graph(k - 1, r - 1)?;
    let last = turan_graph(d.q + 1, r - 1)?;
    let mut g = empty_graph(1);
    for block in std::iter::repeat_n(&big, d.p).chain(std::iter::once(&last)) {
        g = crate::graph::amalgam(&g, 0, block, 0).expect("vertex 0 exists in both");
    }
    Ok(g)
}

fn check_a(n: usize, a: usize, k: usize) -> Result<(), ParamError> {
    let t = formulas::half(k);
    formulas::require(
        2 <= a && a <= t && n >= k,
        "2 <= a <= floor((k-1)/2) and n >= k",
        || format!("n={n}, a={a}, k={k}"),
    )
}

/// `H(n, a, k)`: `B = 0..a`, `A = a..k-a`, `C = k-a..n`; `A ∪ B` is a clique
/// and `B` is joined to `C`.
pub fn construct_h(n: usize, a: usize, k: usize) -> Result<Graph, ParamError> {
    check_a(n, a, k)?;
    let mut g = disjoint_union(&complete_graph(k - a), &empty_graph(n - k + a));
    for b in 0..a {
        for c in k - a..n {
            g.insert_edge(b, c);
        }
    }
    Ok(g)
}

/// `G_r(n, a, k)`: `H(n, a, k)` with the clique on `A ∪ B` replaced by
/// `T(k-a, r-1)`. `B = 0..a` is dealt round-robin over the parts, so it meets
/// `min(a, r-1)` parts; it spans at most `r-2` parts (keeping the graph
/// `K_r`-free) whenever `a <= r-2`.
pub fn construct_gr(n: usize, a: usize, k: usize, r: usize) -> Result<Graph, ParamError> {
    check_a(n, a, k)?;
    formulas::require(r >= 3, "r >= 3", || format!("r={r}"))?;
    let sizes = turan_part_sizes(k - a, r - 1);
    let mut pools: Vec<usize> = sizes.clone();
    let mut part_of = Vec::with_capacity(n);
    // B: one vertex per part in turn, skipping exhausted parts.
    let mut part = 0;
    while part_of.len() < a {
        if pools[part] > 0 {
            pools[part] -= 1;
            part_of.push(part);
        }
        part = (part + 1) % sizes.len();
    }
    for (i, &left) in pools.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, left));
    }
    let mut g = disjoint_union(&from_parts(&part_of), &empty_graph(n - k + a));
    for b in 0..a {
        for c in k - a..n {
            g.insert_edge(b, c);
        }
    }
    Ok(g)
}

/// `G_1 = K_t ∨ I_{n-t}` with `t = floor((k-1)/2)`.
pub fn construct_g1(n: usize, k: usize) -> Result<Graph, ParamError> {
    formulas::require(n >= k && k >= 5, "n >= k >= 5", || format!("n={n}, k={k}"))?;
    let t = formulas::half(k);
    Ok(join(&complete_graph(t), &empty_graph(n - t)))
}

/// `G_2 = T(t, r-2) ∨ I_{n-t}` with `t = floor((k-1)/2)`.
pub fn construct_g2(n: usize, k: usize, r: usize) -> Result<Graph, ParamError> {
    let t = formulas::half(k);
    formulas::require(
        n >= k && k >= 5 && 3 <= r && r <= t + 1,
        "n >= k >= 5 and 3 <= r <= floor((k-1)/2) + 1",
        || format!("n={n}, k={k}, r={r}"),
    )?;
    Ok(join(&turan_graph(t, r - 2)?, &empty_graph(n - t)))
}

/// `p` disjoint copies of `T(k-1, r-1)` and one `T(q, r-1)`, `n = p(k-1) + q`.
pub fn construct_g3(n: usize, k: usize, r: usize) -> Result<Graph, ParamError> {
    formulas::require(
        k / 2 < r && r < k && k <= n,
        "floor(k/2) + 1 <= r < k <= n",
        || format!("n={n}, k={k}, r={r}"),
    )?;
    let d = decomp_path(n, k)?;
    let big = turan_graph(k - 1, r - 1)?;
    let mut g = empty_graph(0);
    for _ in 0..d.p {
        g = disjoint_union(&g, &big);
    }
    Ok(disjoint_union(&g, &turan_graph(d.q, r - 1)?))
}

/// `G_4 = K_{s} ∨ I_{n-s}` with `s = floor(k/2) - 1`.
pub fn construct_g4(n: usize, k: usize) -> Result<Graph, ParamError> {
    formulas::require(n >= k && k >= 4, "n >= k >= 4", || format!("n={n}, k={k}"))?;
    let s = k / 2 - 1;
    Ok(join(&complete_graph(s), &empty_graph(n - s)))
}

/// `T(s, r-2) ∨ I_{n-s}` with `s = floor(k/2) - 1`: the large-`n` extremal
/// graph for `{K_r, P_k}` when `r <= floor(k/2)`.
pub fn construct_katona_xiao(n: usize, k: usize, r: usize) -> Result<Graph, ParamError> {
    formulas::require(
        3 <= r && r <= k / 2 && k <= n,
        "3 <= r <= floor(k/2) and k <= n",
        || format!("n={n}, k={k}, r={r}"),
    )?;
    let s = k / 2 - 1;
    Ok(join(&turan_graph(s, r - 2)?, &empty_graph(n - s)))
}

/// The star `K_{1,n-1}`, a tree on `n >= 1` vertices.
pub fn construct_tree(n: usize) -> Result<Graph, ParamError> {
    formulas::require(n >= 1, "n >= 1", || format!("n={n}"))?;
    Ok(star_graph(n))
}

/// A named construction with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "tag")]
pub enum ConstructionId {
    Turan {
        n: usize,
        p: usize,
    },
    F {
        n: usize,
        k: usize,
        r: usize,
    },
    H {
        n: usize,
        a: usize,
        k: usize,
    },
    GrNak {
        n: usize,
        a: usize,
        k: usize,
        r: usize,
    },
    G1 {
        n: usize,
        k: usize,
    },
    G2 {
        n: usize,
        k: usize,
        r: usize,
    },
    G3 {
        n: usize,
        k: usize,
        r: usize,
    },
    G4 {
        n: usize,
        k: usize,
    },
    KatonaXiao {
        n: usize,
        k: usize,
        r: usize,
    },
    Tree {
        n: usize,
    },
}

impl ConstructionId {
    pub fn build(&self) -> Result<Graph, ParamError> {
        match *self {
            ConstructionId::Turan { n, p } => turan_graph(n, p),
            ConstructionId::F { n, k, r } => construct_f(n, k, r),
            ConstructionId::H { n, a, k } => construct_h(n, a, k),
            ConstructionId::GrNak { n, a, k, r } => construct_gr(n, a, k, r),
            ConstructionId::G1 { n, k } => construct_g1(n, k),
            ConstructionId::G2 { n, k, r } => construct_g2(n, k, r),
            ConstructionId::G3 { n, k, r } => construct_g3(n, k, r),
            ConstructionId::G4 { n, k } => construct_g4(n, k),
            ConstructionId::KatonaXiao { n, k, r } => construct_katona_xiao(n, k, r),
            ConstructionId::Tree { n } => construct_tree(n),
        }
    }

    /// Closed-form edge count.
    pub fn edge_count(&self) -> Result<u64, ParamError> {
        use formulas as f;
        match *self {
            ConstructionId::Turan { n, p } => f::t_edges(n, p),
            ConstructionId::F { n, k, r } => f::f_value(n, k, r),
            ConstructionId::H { n, a, k } => f::h_value(n, a, k),
            ConstructionId::GrNak { n, a, k, r } => f::g_value(n, a, k, r),
            ConstructionId::G1 { n, k } => f::e_g1(n, k),
            ConstructionId::G2 { n, k, r } => f::e_g2(n, k, r),
            ConstructionId::G3 { n, k, r } => f::e_g3(n, k, r),
            ConstructionId::G4 { n, k } => f::e_g4(n, k),
            ConstructionId::KatonaXiao { n, k, r } => f::e_katona_xiao(n, k, r),
            ConstructionId::Tree { n } => {
                f::require(n >= 1, "n >= 1", || format!("n={n}"))?;
                Ok(n as u64 - 1)
            }
        }
    }

    /// The family the construction is claimed to avoid, where one is implied
    /// by its parameters. `Turan` and `H` have none (`H` contains large
    /// cliques and is only claimed to avoid long cycles).
    pub fn claimed_family(&self) -> Option<ForbiddenFamily> {
        let fam = match *self {
            ConstructionId::Turan { .. } | ConstructionId::H { .. } => return None,
            ConstructionId::F { k, r, .. }
            | ConstructionId::GrNak { k, r, .. }
            | ConstructionId::G2 { k, r, .. } => ForbiddenFamily::cycles(r, k),
            ConstructionId::G1 { k, .. } => ForbiddenFamily::cycles(formulas::half(k) + 2, k),
            ConstructionId::G3 { k, r, .. } | ConstructionId::KatonaXiao { k, r, .. } => {
                ForbiddenFamily::paths(r, k)
            }
            ConstructionId::G4 { k, .. } => ForbiddenFamily::paths(k / 2 + 1, k),
            ConstructionId::Tree { .. } => ForbiddenFamily::cycles(3, 3),
        };
        fam.ok()
    }

    /// Whether `g` has the closed-form edge count and avoids what the
    /// construction is claimed to avoid: its family, `K_{p+1}` for `T(n, p)`,
    /// and cycles of length at least `k` for `H`.
    pub fn verify(&self, g: &Graph) -> Result<bool, InvariantError> {
        let count_ok = self.edge_count().is_ok_and(|e| e == g.edge_count() as u64);
        if !count_ok {
            return Ok(false);
        }
        let budget = Budget::from_env();
        match (*self, self.claimed_family()) {
            (_, Some(fam)) => Ok(is_free_with(g, &fam, budget)?.is_free()),
            (ConstructionId::Turan { p, .. }, None) => Ok(find_clique(g, p + 1, budget)?.is_none()),
            (ConstructionId::H { k, .. }, None) => Ok(find_cycle_at_least(g, k, budget)?.is_none()),
            _ => Ok(true),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            ConstructionId::Turan { .. } => "Turan",
            ConstructionId::F { .. } => "F",
            ConstructionId::H { .. } => "H",
            ConstructionId::GrNak { .. } => "Gr",
            ConstructionId::G1 { .. } => "G1",
            ConstructionId::G2 { .. } => "G2",
            ConstructionId::G3 { .. } => "G3",
            ConstructionId::G4 { .. } => "G4",
            ConstructionId::KatonaXiao { .. } => "KatonaXiao",
            ConstructionId::Tree { .. } => "Tree",
        }
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.name();
        match *self {
            ConstructionId::Turan { n, p } => write!(f, "T({n},{p})"),
            ConstructionId::F { n, k, r } => write!(f, "{name}({n},{k},{r})"),
            ConstructionId::H { n, a, k } => write!(f, "{name}({n},{a},{k})"),
            ConstructionId::GrNak { n, a, k, r } => write!(f, "G_{r}({n},{a},{k})"),
            ConstructionId::G1 { n, k } | ConstructionId::G4 { n, k } => {
                write!(f, "{name}({n},{k})")
            }
            ConstructionId::G2 { n, k, r }
            | ConstructionId::G3 { n, k, r }
            | ConstructionId::KatonaXiao { n, k, r } => write!(f, "{name}({n},{k},{r})"),
            ConstructionId::Tree { n } => write!(f, "{name}({n})"),
        }
    }
}
