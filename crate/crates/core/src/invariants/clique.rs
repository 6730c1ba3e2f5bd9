//! Maximum clique by branch and bound with a greedy-coloring bound.

use super::connectivity::biconnected_components;
use super::search::{bit, bits, thin_open_twins, Budget, Dense, Mask, Meter};
use super::{Certificate, InvariantError};
use crate::graph::Graph;

pub fn clique_number(g: &Graph) -> Result<(usize, Certificate), InvariantError> {
    clique_number_with(g, Budget::from_env())
}

pub fn clique_number_with(
    g: &Graph,
    budget: Budget,
) -> Result<(usize, Certificate), InvariantError> {
    let best = search(g, None, budget)?;
    Ok((best.len(), Certificate::clique(best)))
}

/// A clique on exactly `size` vertices, if one exists.
pub fn find_clique(
    g: &Graph,
    size: usize,
    budget: Budget,
) -> Result<Option<Certificate>, InvariantError> {
    if size == 0 {
        return Ok(Some(Certificate::clique(Vec::new())));
    }
    let mut found = search(g, Some(size), budget)?;
    if found.len() < size {
        return Ok(None);
    }
    found.truncate(size);
    Ok(Some(Certificate::clique(found)))
}

/// Largest clique, or the first one reaching `target`. Labels are sorted.
fn search(g: &Graph, target: Option<usize>, budget: Budget) -> Result<Vec<usize>, InvariantError> {
    if g.n() == 0 {
        return Ok(Vec::new());
    }
    // Open twins are nonadjacent, so a clique meets each class at most once;
    // every clique with an edge lies inside one block.
    let kept = thin_open_twins(g, |_| 1);
    let h = g.induced_subgraph(&kept);
    let mut blocks = biconnected_components(&h);
    blocks.sort_by_key(|b| std::cmp::Reverse(b.len()));
    let mut meter = Meter::new(budget);
    let mut best: Vec<usize> = vec![0];
    let goal = target.unwrap_or(usize::MAX);
    for block in blocks {
        if block.len() <= best.len() || best.len() >= goal {
            break;
        }
        let d = Dense::new(&h, &block)?;
        let mut state = Bnb {
            d: &d,
            best: Vec::new(),
            floor: best.len(),
            goal,
            meter: &mut meter,
        };
        state.expand(&mut Vec::new(), d.all())?;
        if state.best.len() > best.len() {
            best = d.to_labels(&state.best);
        }
    }
    let mut labels: Vec<usize> = best.into_iter().map(|v| kept[v]).collect();
    labels.sort_unstable();
    Ok(labels)
}

struct Bnb<'a> {
    d: &'a Dense,
    best: Vec<usize>,
    /// Size to beat (best found in earlier blocks).
    floor: usize,
    goal: usize,
    meter: &'a mut Meter,
}

impl Bnb<'_> {
    fn record(&self) -> usize {
        self.best.len().max(self.floor)
    }

    fn expand(&mut self, current: &mut Vec<usize>, mut cand: Mask) -> Result<(), InvariantError> {
        self.meter.tick()?;
        let order = color_order(self.d, cand);
        for &(v, color) in order.iter().rev() {
            if current.len() + color <= self.record() || self.record() >= self.goal {
                return Ok(());
            }
            current.push(v);
            let next = cand & self.d.adj[v];
            if next == 0 {
                if current.len() > self.record() {
                    self.best = current.clone();
                }
            } else {
                self.expand(current, next)?;
            }
            current.pop();
            cand &= !bit(v);
        }
        Ok(())
    }
}

/// Greedy sequential coloring of `cand`; returns (vertex, color) with colors
/// nondecreasing, so the color of each entry bounds the clique among it and
/// its predecessors.
fn color_order(d: &Dense, cand: Mask) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.count_ones() as usize);
    let mut uncolored = cand;
    let mut color = 0;
    while uncolored != 0 {
        color += 1;
        let mut avail = uncolored;
        while avail != 0 {
            let v = avail.trailing_zeros() as usize;
            avail &= !bit(v) & !d.adj[v];
            uncolored &= !bit(v);
            out.push((v, color));
        }
    }
    debug_assert!(bits(cand).all(|v| out.iter().any(|&(w, _)| w == v)));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, empty_graph, join};
    use crate::testutil::{arb_graph, petersen};
    use proptest::prelude::*;

    fn turan_7_3() -> Graph {
        join(&join(&empty_graph(3), &empty_graph(2)), &empty_graph(2))
    }

    #[test]
    fn known_values() {
        assert_eq!(clique_number(&complete_graph(5)).unwrap().0, 5);
        assert_eq!(clique_number(&turan_7_3()).unwrap().0, 3);
        assert_eq!(clique_number(&petersen()).unwrap().0, 2);
        assert_eq!(clique_number(&empty_graph(4)).unwrap().0, 1);
        assert_eq!(clique_number(&Graph::default()).unwrap().0, 0);
        let big = join(&complete_graph(3), &empty_graph(300));
        let (w, cert) = clique_number(&big).unwrap();
        assert_eq!(w, 4);
        assert!(cert.verify(&big));
    }

    #[test]
    fn find_clique_sizes() {
        let g = turan_7_3();
        assert_eq!(
            find_clique(&g, 3, Budget::UNLIMITED)
                .unwrap()
                .unwrap()
                .len(),
            3
        );
        assert!(find_clique(&g, 4, Budget::UNLIMITED).unwrap().is_none());
        assert!(find_clique(&g, 0, Budget::UNLIMITED)
            .unwrap()
            .unwrap()
            .is_empty());
    }

    fn naive_clique_number(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|&s| {
                (0..n).all(|u| {
                    s >> u & 1 == 0 || (u + 1..n).all(|v| s >> v & 1 == 0 || g.has_edge(u, v))
                })
            })
            .map(|s| s.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    proptest! {
        #[test]
        fn matches_subset_enumeration(g in arb_graph(10)) {
            let (w, cert) = clique_number(&g).unwrap();
            prop_assert_eq!(w, naive_clique_number(&g));
            prop_assert!(cert.verify(&g));
            prop_assert_eq!(cert.len(), w);
        }
    }
}
