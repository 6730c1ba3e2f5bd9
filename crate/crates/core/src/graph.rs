//! Labeled simple undirected graphs and the construction primitives used by
//! every extremal construction in the crate.
//!
//! Vertices are the contiguous labels `0..n`. A [`Graph`] is immutable once
//! built; the combinators ([`join`], [`disjoint_union`], [`amalgam`], ...)
//! always produce a fresh value with a documented labeling so that outputs are
//! reproducible byte for byte.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
}

/// A simple undirected graph on the vertex labels `0..n`.
///
/// Each vertex stores its neighbor set. Symmetry and loop-freeness are
/// maintained by every constructor and re-asserted in debug builds.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Graph from an edge list. Loops, duplicates and out-of-range labels are
    /// rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = empty_graph(n);
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.insert_edge(u, v);
        }
        g.debug_check();
        Ok(g)
    }

    /// Graph from per-vertex neighbor lists; the lists must already be
    /// symmetric.
    pub(crate) fn from_adjacency(adj: Vec<BTreeSet<usize>>) -> Self {
        let g = Graph { adj };
        g.debug_check();
        g
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Copy of this graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph, GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.insert_edge(u, v);
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn neighbor_set(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.range(u + 1..).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Subgraph induced by `vertices`; vertex `i` of the result is
    /// `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let adj = vertices
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (pos[w] != usize::MAX).then_some(pos[w]))
                    .collect()
            })
            .collect();
        Graph::from_adjacency(adj)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph on zero vertices is not connected.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.components().len() == 1
    }

    fn debug_check(&self) {
        if cfg!(debug_assertions) {
            for (u, s) in self.adj.iter().enumerate() {
                assert!(!s.contains(&u), "loop at {u}");
                for &v in s {
                    assert!(v < self.n(), "label {v} out of range");
                    assert!(self.adj[v].contains(&u), "asymmetric edge {u}-{v}");
                }
            }
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// A set of vertex labels of some host graph.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VertexSet(BTreeSet<usize>);

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: usize) -> bool {
        self.0.insert(v)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Whether every member is a vertex of `g`.
    pub fn within(&self, g: &Graph) -> bool {
        self.0.last().is_none_or(|&v| v < g.n())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet(iter.into_iter().collect())
    }
}

pub fn empty_graph(n: usize) -> Graph {
    Graph::from_adjacency(vec![BTreeSet::new(); n])
}

pub fn complete_graph(n: usize) -> Graph {
    let adj = (0..n)
        .map(|u| (0..n).filter(|&v| v != u).collect())
        .collect();
    Graph::from_adjacency(adj)
}

/// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = path_graph(n);
    g.insert_edge(n - 1, 0);
    g
}

/// The path `0-1-...-(n-1)` on `n` vertices.
pub fn path_graph(n: usize) -> Graph {
    let mut g = empty_graph(n);
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    g
}

/// The star `K_{1,n-1}` with center 0.
pub fn star_graph(n: usize) -> Graph {
    let mut g = empty_graph(n);
    for v in 1..n {
        g.insert_edge(0, v);
    }
    g
}

/// Disjoint union plus every edge between the two sides. Labels of `g1`
/// come first, followed by those of `g2` shifted by `g1.n()`.
pub fn join(g1: &Graph, g2: &Graph) -> Graph {
    let mut g = disjoint_union(g1, g2);
    let n1 = g1.n();
    for u in 0..n1 {
        for v in n1..g.n() {
            g.insert_edge(u, v);
        }
    }
    g
}

/// Labels of `g1` first, then those of `g2` shifted by `g1.n()`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let n1 = g1.n();
    let mut adj = g1.adj.clone();
    adj.extend(
        g2.adj
            .iter()
            .map(|s| s.iter().map(|&v| v + n1).collect::<BTreeSet<_>>()),
    );
    Graph::from_adjacency(adj)
}

/// One-point union: `g1` and `g2` with `v1` and `v2` identified.
///
/// `g1` keeps its labels; the vertices of `g2` other than `v2` follow in
/// their original order, and `v2` becomes `v1`.
pub fn amalgam(g1: &Graph, v1: usize, g2: &Graph, v2: usize) -> Result<Graph, GraphError> {
    if v1 >= g1.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v1,
            n: g1.n(),
        });
    }
    if v2 >= g2.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v2,
            n: g2.n(),
        });
    }
    let n1 = g1.n();
    let relabel = |w: usize| match w.cmp(&v2) {
        std::cmp::Ordering::Less => n1 + w,
        std::cmp::Ordering::Equal => v1,
        std::cmp::Ordering::Greater => n1 + w - 1,
    };
    let mut g = g1.clone();
    g.adj.resize(n1 + g2.n() - 1, BTreeSet::new());
    for (u, w) in g2.edges() {
        g.insert_edge(relabel(u), relabel(w));
    }
    g.debug_check();
    Ok(g)
}
