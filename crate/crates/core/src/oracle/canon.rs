//! Compact graphs on at most 16 vertices and their canonical codes.
//!
//! The canonical labeling is the search-tree method: refine an ordered
//! partition to the coarsest equitable one, individualize each vertex of the
//! first smallest nonsingleton cell in turn, and keep the leaf whose
//! adjacency code is largest. Branches are pruned by orbits of automorphisms
//! found along the way (two leaves with the same code) and by twin
//! transpositions, both restricted to the pointwise stabilizer of the
//! current prefix.

use crate::graph::Graph;

pub const MAX_ORDER: usize = 16;

/// Upper-triangle adjacency bits; bit `j(j-1)/2 + i` holds pair `i < j`.
pub type Code = u128;

#[inline]
fn pair_bit(i: usize, j: usize) -> Code {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    1u128 << (j * (j - 1) / 2 + i)
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SmallGraph {
    n: usize,
    adj: [u16; MAX_ORDER],
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "at most {MAX_ORDER} vertices");
        SmallGraph {
            n,
            adj: [0; MAX_ORDER],
        }
    }

    pub fn from_graph(g: &Graph) -> Option<Self> {
        if g.n() > MAX_ORDER {
            return None;
        }
        let mut s = SmallGraph::empty(g.n());
        for (u, v) in g.edges() {
            s.add_edge(u, v);
        }
        Some(s)
    }

    pub fn to_graph(&self) -> Graph {
        let edges: Vec<(usize, usize)> = (0..self.n)
            .flat_map(|u| {
                (u + 1..self.n)
                    .filter(move |&v| self.adj[u] >> v & 1 == 1)
                    .map(move |v| (u, v))
            })
            .collect();
        Graph::from_edges(self.n, &edges).expect("valid small graph")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> u16 {
        self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.n]
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    /// The graph with one more vertex, adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: u16) -> Self {
        let mut g = *self;
        let v = self.n;
        g.n += 1;
        g.adj[v] = nbrs;
        let mut rest = nbrs;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.adj[u] |= 1 << v;
        }
        g
    }

    pub fn all(&self) -> u16 {
        ((1u32 << self.n) - 1) as u16
    }

    /// Vertices reachable from `from` inside `within`.
    pub fn reach(&self, from: u16, within: u16) -> u16 {
        let mut seen = from & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n > 0 && self.reach(1, self.all()) == self.all()
    }

    pub fn is_two_connected(&self) -> bool {
        if self.n < 3 || !self.is_connected() {
            return false;
        }
        (0..self.n).all(|v| {
            let rest = self.all() & !(1 << v);
            self.reach(rest & rest.wrapping_neg(), rest) == rest
        })
    }

    /// Adjacency code under the labeling `lab` (vertex -> position).
    fn code_under(&self, lab: &[u8; MAX_ORDER]) -> Code {
        let mut code = 0;
        for u in 0..self.n {
            let mut higher = self.adj[u] & !((2u32 << u) - 1) as u16;
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                higher &= higher - 1;
                code |= pair_bit(lab[u] as usize, lab[v] as usize);
            }
        }
        code
    }

    /// Code of the graph as labeled.
    pub fn code(&self) -> Code {
        let mut lab = [0u8; MAX_ORDER];
        for (v, l) in lab.iter_mut().enumerate() {
            *l = v as u8;
        }
        self.code_under(&lab)
    }

    pub fn from_code(n: usize, code: Code) -> Self {
        let mut g = SmallGraph::empty(n);
        for j in 1..n {
            for i in 0..j {
                if code & pair_bit(i, j) != 0 {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Canonical code: equal for two graphs iff they are isomorphic.
    pub fn canonical_code(&self) -> Code {
        self.canonical_form().0
    }

    /// Canonical code and a labeling (vertex -> position) realizing it.
    pub fn canonical_form(&self) -> (Code, [u8; MAX_ORDER]) {
        if self.n <= 1 {
            return (0, std::array::from_fn(|i| i as u8));
        }
        let mut search = Search {
            g: self,
            best: None,
            first: None,
            autos: Vec::new(),
        };
        let mut cells = Cells::new();
        cells.push(self.all());
        let mut prefix = Vec::with_capacity(self.n);
        search.node(cells, &mut prefix);
        let (code, lab, _) = search.best.expect("at least one leaf");
        (code, lab)
    }

    pub fn canonical(&self) -> Self {
        SmallGraph::from_code(self.n, self.canonical_code())
    }
}

/// Ordered partition of the vertex set into cells (bitmasks).
#[derive(Clone, Copy)]
struct Cells {
    cells: [u16; MAX_ORDER],
    len: usize,
}

impl Cells {
    fn new() -> Self {
        Cells {
            cells: [0; MAX_ORDER],
            len: 0,
        }
    }

    fn push(&mut self, c: u16) {
        self.cells[self.len] = c;
        self.len += 1;
    }

    fn as_slice(&self) -> &[u16] {
        &self.cells[..self.len]
    }
}

type Perm = [u8; MAX_ORDER];

struct Search<'a> {
    g: &'a SmallGraph,
    /// Code, vertex -> position and position -> vertex of a leaf.
    best: Option<(Code, Perm, Perm)>,
    first: Option<(Code, Perm, Perm)>,
    /// Automorphisms found so far, as vertex maps.
    autos: Vec<Perm>,
}

impl Search<'_> {
    /// Coarsest equitable refinement: split every cell by the number of
    /// neighbors in each splitter cell (ascending), until stable.
    fn refine(&self, mut p: Cells) -> Cells {
        let mut s = 0;
        while s < p.len && p.len < self.g.n {
            let splitter = p.cells[s];
            let mut out = Cells::new();
            let mut split = false;
            for &cell in p.as_slice() {
                if cell.count_ones() == 1 {
                    out.push(cell);
                    continue;
                }
                let mut counts: [(u32, u16); MAX_ORDER] = [(0, 0); MAX_ORDER];
                let mut groups = 0;
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let c = (self.g.adj[v] & splitter).count_ones();
                    match counts[..groups].iter_mut().find(|e| e.0 == c) {
                        Some(e) => e.1 |= 1 << v,
                        None => {
                            counts[groups] = (c, 1 << v);
                            groups += 1;
                        }
                    }
                }
                if groups > 1 {
                    split = true;
                    counts[..groups].sort_unstable_by_key(|e| e.0);
                }
                for e in &counts[..groups] {
                    out.push(e.1);
                }
            }
            p = out;
            s = if split { 0 } else { s + 1 };
        }
        p
    }

    fn node(&mut self, cells: Cells, prefix: &mut Vec<usize>) {
        let p = self.refine(cells);
        if p.len == self.g.n {
            self.leaf(&p);
            return;
        }
        let (target, &cell) = p
            .as_slice()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.count_ones() > 1)
            .min_by_key(|(i, c)| (c.count_ones(), *i))
            .expect("nondiscrete partition has a nonsingleton cell");
        let mut done: u16 = 0;
        let mut rest = cell;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if done != 0 && self.equivalent_to_done(v, cell, done, prefix) {
                continue;
            }
            let mut child = Cells::new();
            for (i, &c) in p.as_slice().iter().enumerate() {
                if i == target {
                    child.push(1 << v);
                    child.push(c & !(1 << v));
                } else {
                    child.push(c);
                }
            }
            prefix.push(v);
            self.node(child, prefix);
            prefix.pop();
            done |= 1 << v;
        }
    }

    /// Whether `v` shares an orbit with an explored vertex under the group
    /// generated by known automorphisms fixing `prefix` and twin swaps.
    fn equivalent_to_done(&self, v: usize, cell: u16, done: u16, prefix: &[usize]) -> bool {
        let mut parent: [u8; MAX_ORDER] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; MAX_ORDER], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let union = |parent: &mut [u8; MAX_ORDER], a: usize, b: usize| {
            let (ra, rb) = (find(parent, a), find(parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb) as u8;
            }
        };
        let adj = &self.g.adj;
        let mut us = cell;
        while us != 0 {
            let u = us.trailing_zeros() as usize;
            us &= us - 1;
            let mut ws = us;
            while ws != 0 {
                let w = ws.trailing_zeros() as usize;
                ws &= ws - 1;
                let pair = (1u16 << u) | (1u16 << w);
                if (adj[u] ^ adj[w]) & !pair == 0 {
                    union(&mut parent, u, w);
                }
            }
        }
        for gamma in &self.autos {
            if prefix.iter().all(|&x| gamma[x] as usize == x) {
                let mut us = cell;
                while us != 0 {
                    let u = us.trailing_zeros() as usize;
                    us &= us - 1;
                    union(&mut parent, u, gamma[u] as usize);
                }
            }
        }
        let root = find(&mut parent, v);
        let mut ds = done;
        while ds != 0 {
            let d = ds.trailing_zeros() as usize;
            ds &= ds - 1;
            if find(&mut parent, d) == root {
                return true;
            }
        }
        false
    }

    fn leaf(&mut self, p: &Cells) {
        // position -> vertex, and vertex -> position
        let mut order: Perm = [0; MAX_ORDER];
        let mut lab: Perm = [0; MAX_ORDER];
        for (pos, &c) in p.as_slice().iter().enumerate() {
            let v = c.trailing_zeros() as usize;
            order[pos] = v as u8;
            lab[v] = pos as u8;
        }
        let code = self.g.code_under(&lab);
        for known in [self.first, self.best].into_iter().flatten() {
            if known.0 == code {
                // Vertex at position i here maps to the vertex at position i there.
                let mut gamma: Perm = std::array::from_fn(|i| i as u8);
                for v in 0..self.g.n {
                    gamma[v] = known.2[lab[v] as usize];
                }
                self.autos.push(gamma);
                break;
            }
        }
        if self.first.is_none() {
            self.first = Some((code, lab, order));
        }
        if self.best.is_none_or(|b| code > b.0) {
            self.best = Some((code, lab, order));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, empty_graph, path_graph};
    use crate::testutil::{arb_graph, petersen};
    use proptest::prelude::*;

    fn relabel(g: &SmallGraph, perm: &[usize]) -> SmallGraph {
        let mut h = SmallGraph::empty(g.n());
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                if g.row(u) >> v & 1 == 1 {
                    h.add_edge(perm[u], perm[v]);
                }
            }
        }
        h
    }

    #[test]
    fn code_round_trip() {
        let g = SmallGraph::from_graph(&petersen()).unwrap();
        assert_eq!(SmallGraph::from_code(10, g.code()), g);
        assert_eq!(g.to_graph(), petersen());
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn symmetric_graphs_canonize() {
        for g in [
            empty_graph(12),
            complete_graph(12),
            cycle_graph(12),
            petersen(),
            path_graph(9),
        ] {
            let s = SmallGraph::from_graph(&g).unwrap();
            let c = s.canonical();
            assert_eq!(c.edge_count(), g.edge_count());
            let rev: Vec<usize> = (0..g.n()).rev().collect();
            assert_eq!(relabel(&s, &rev).canonical_code(), c.code());
        }
    }

    #[test]
    fn connectivity_helpers() {
        let c5 = SmallGraph::from_graph(&cycle_graph(5)).unwrap();
        assert!(c5.is_two_connected());
        let p4 = SmallGraph::from_graph(&path_graph(4)).unwrap();
        assert!(p4.is_connected() && !p4.is_two_connected());
        assert!(!SmallGraph::from_graph(&empty_graph(2))
            .unwrap()
            .is_connected());
    }

    proptest! {
        #[test]
        fn canonical_code_is_invariant(g in arb_graph(11), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            use rand::SeedableRng;
            let s = SmallGraph::from_graph(&g).unwrap();
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
            let h = relabel(&s, &perm);
            prop_assert_eq!(s.canonical_code(), h.canonical_code());
            let (code, lab) = s.canonical_form();
            let mut labv = [0u8; MAX_ORDER];
            labv[..g.n()].copy_from_slice(&lab[..g.n()]);
            prop_assert_eq!(s.code_under(&labv), code);
        }

        #[test]
        fn different_degree_sequences_get_different_codes(a in arb_graph(8), b in arb_graph(8)) {
            let degs = |g: &Graph| {
                let mut d: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
                d.sort_unstable();
                d
            };
            if a.n() == b.n() && degs(&a) != degs(&b) {
                let (sa, sb) = (SmallGraph::from_graph(&a).unwrap(), SmallGraph::from_graph(&b).unwrap());
                prop_assert_ne!(sa.canonical_code(), sb.canonical_code());
            }
        }
    }
}
