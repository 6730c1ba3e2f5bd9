//! Shared machinery for the exhaustive searches: a dense bitmask view of a
//! (reduced) graph, the node-budget meter, and open-twin reduction.

use std::collections::{BTreeSet, HashMap};

use super::InvariantError;
use crate::graph::Graph;

pub(crate) type Mask = u128;

/// Largest vertex count a single search instance accepts.
pub const MAX_SEARCH_VERTICES: usize = 128;

/// Node limit for the exponential searches. `None` means unlimited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Budget {
    pub nodes: Option<u64>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { nodes: None };

    pub fn nodes(limit: u64) -> Self {
        Budget { nodes: Some(limit) }
    }

    /// `CIRCUM_TURAN_BUDGET` if set and numeric, otherwise unlimited.
    pub fn from_env() -> Self {
        std::env::var("CIRCUM_TURAN_BUDGET")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map_or(Budget::UNLIMITED, Budget::nodes)
    }
}

pub(crate) struct Meter {
    used: u64,
    limit: Option<u64>,
}

impl Meter {
    pub(crate) fn new(budget: Budget) -> Self {
        Meter {
            used: 0,
            limit: budget.nodes,
        }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<(), InvariantError> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(InvariantError::BudgetExceeded { limit }),
            _ => Ok(()),
        }
    }
}

#[inline]
pub(crate) fn bit(v: usize) -> Mask {
    1u128 << v
}

pub(crate) fn bits(mut m: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            v
        })
    })
}

/// Induced subgraph on `vertices` as adjacency bitmasks; local vertex `i` is
/// `vertices[i]`.
pub(crate) struct Dense {
    pub adj: Vec<Mask>,
    pub labels: Vec<usize>,
}

impl Dense {
    pub(crate) fn new(g: &Graph, vertices: &[usize]) -> Result<Self, InvariantError> {
        if vertices.len() > MAX_SEARCH_VERTICES {
            return Err(InvariantError::TooLarge { n: vertices.len() });
        }
        let mut pos = HashMap::with_capacity(vertices.len());
        for (i, &v) in vertices.iter().enumerate() {
            pos.insert(v, i);
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                g.neighbors(v)
                    .filter_map(|w| pos.get(&w))
                    .fold(0, |m, &i| m | bit(i))
            })
            .collect();
        Ok(Dense {
            adj,
            labels: vertices.to_vec(),
        })
    }

    pub(crate) fn len(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn all(&self) -> Mask {
        if self.len() == 128 {
            Mask::MAX
        } else {
            bit(self.len()) - 1
        }
    }

    /// Vertices of `within` reachable from `from` (inclusive) using only
    /// vertices of `within`.
    pub(crate) fn reach(&self, from: Mask, within: Mask) -> Mask {
        let mut seen = from & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    pub(crate) fn to_labels(&self, local: &[usize]) -> Vec<usize> {
        local.iter().map(|&i| self.labels[i]).collect()
    }
}

/// Vertices kept after thinning every class of open twins (vertices with
/// identical neighborhoods, hence pairwise nonadjacent) to `keep(d)` members,
/// where `d` is the size of the shared neighborhood. Returns sorted labels.
///
/// A cycle visits at most `d` vertices of such a class and a path at most
/// `d + 1`, and the members are interchangeable, so thinning to those counts
/// preserves circumference and longest path; one member suffices for cliques.
pub(crate) fn thin_open_twins(g: &Graph, keep: impl Fn(usize) -> usize) -> Vec<usize> {
    let mut classes: HashMap<&BTreeSet<usize>, Vec<usize>> = HashMap::new();
    for v in 0..g.n() {
        classes.entry(g.neighbor_set(v)).or_default().push(v);
    }
    let mut kept: Vec<usize> = classes
        .into_iter()
        .flat_map(|(nbrs, members)| {
            let k = keep(nbrs.len()).min(members.len());
            members.into_iter().take(k)
        })
        .collect();
    kept.sort_unstable();
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{empty_graph, join};

    #[test]
    fn twin_thinning_on_complete_bipartite() {
        let g = join(&empty_graph(2), &empty_graph(7));
        assert_eq!(thin_open_twins(&g, |d| d), vec![0, 1, 2, 3]);
        assert_eq!(thin_open_twins(&g, |d| d + 1), vec![0, 1, 2, 3, 4]);
        assert_eq!(thin_open_twins(&g, |_| 1), vec![0, 2]);
    }

    #[test]
    fn meter_stops_at_limit() {
        let mut m = Meter::new(Budget::nodes(2));
        assert!(m.tick().is_ok());
        assert!(m.tick().is_ok());
        assert_eq!(m.tick(), Err(InvariantError::BudgetExceeded { limit: 2 }));
    }

    #[test]
    fn reach_respects_window() {
        let g = crate::graph::path_graph(5);
        let d = Dense::new(&g, &[0, 1, 2, 3, 4]).unwrap();
        assert_eq!(d.reach(bit(0), d.all() & !bit(2)), 0b11);
    }
}
