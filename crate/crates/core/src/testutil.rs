use proptest::prelude::*;
use rand::Rng;

use crate::graph::{empty_graph, Graph};

pub(crate) fn graph_from_bits(n: usize, bits: impl IntoIterator<Item = bool>) -> Graph {
    let mut g = empty_graph(n);
    let mut it = bits.into_iter();
    for j in 1..n {
        for i in 0..j {
            if it.next().unwrap_or(false) {
                g.insert_edge(i, j);
            }
        }
    }
    g
}

pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs)
            .prop_map(move |bits| graph_from_bits(n, bits))
    })
}

pub(crate) fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let pairs = n * n.saturating_sub(1) / 2;
    graph_from_bits(n, (0..pairs).map(|_| rng.random_bool(p)))
}

pub(crate) fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, &edges).unwrap()
}
