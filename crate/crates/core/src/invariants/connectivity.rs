use serde::Serialize;

use super::InvariantError;
use crate::graph::Graph;

/// Blocks (maximal 2-connected subgraphs, bridges, isolated vertices) and
/// cut vertices of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Sorted vertex lists, in the order Tarjan's algorithm closes them.
    pub blocks: Vec<Vec<usize>>,
    pub cut_vertices: Vec<usize>,
}

struct Tarjan {
    blocks: Vec<Vec<usize>>,
    is_cut: Vec<bool>,
}

fn tarjan(g: &Graph) -> Tarjan {
    const UNSEEN: usize = usize::MAX;
    let n = g.n();
    let nbrs: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut blocks = Vec::new();
    let mut time = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        if nbrs[root].is_empty() {
            blocks.push(vec![root]);
            continue;
        }
        let mut root_children = 0;
        // (vertex, parent, next neighbor index)
        let mut frames = vec![(root, UNSEEN, 0usize)];
        while let Some(frame) = frames.last_mut() {
            let (v, parent) = (frame.0, frame.1);
            if frame.2 < nbrs[v].len() {
                let w = nbrs[v][frame.2];
                frame.2 += 1;
                if disc[w] == UNSEEN {
                    edges.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edges.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            frames.pop();
            let Some(&(u, _, _)) = frames.last() else {
                break;
            };
            low[u] = low[u].min(low[v]);
            if low[v] >= disc[u] {
                if u == root {
                    root_children += 1;
                } else {
                    is_cut[u] = true;
                }
                let mut block = Vec::new();
                while let Some((a, b)) = edges.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (u, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    Tarjan { blocks, is_cut }
}

/// Blocks of an arbitrary graph; every vertex lies in at least one block and
/// every edge in exactly one.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<usize>> {
    tarjan(g).blocks
}

pub fn cut_vertices(g: &Graph) -> Vec<usize> {
    let is_cut = tarjan(g).is_cut;
    (0..g.n()).filter(|&v| is_cut[v]).collect()
}

pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition, InvariantError> {
    if g.n() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(InvariantError::Disconnected);
    }
    let Tarjan { blocks, is_cut } = tarjan(g);
    let cut_vertices = (0..g.n()).filter(|&v| is_cut[v]).collect();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
    })
}

/// At least three vertices, connected, no cut vertex.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && !tarjan(g).is_cut.contains(&true)
}
