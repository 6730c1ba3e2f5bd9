//! Longest cycles and paths by exhaustive depth-first search.
//!
//! Both searches first thin open-twin classes (which cannot change either
//! optimum), then work per biconnected block (cycles) or per component
//! (paths) on bitmask adjacency. A branch is cut when the vertices still
//! reachable from the current end cannot beat the best length so far.

use super::connectivity::biconnected_components;
use super::search::{bit, bits, thin_open_twins, Budget, Dense, Mask, Meter};
use super::{Certificate, InvariantError};
use crate::graph::Graph;

/// Length of a longest cycle with a witness; `(0, None)` for forests.
pub fn circumference(g: &Graph) -> Result<(usize, Option<Certificate>), InvariantError> {
    circumference_with(g, Budget::from_env())
}

pub fn circumference_with(
    g: &Graph,
    budget: Budget,
) -> Result<(usize, Option<Certificate>), InvariantError> {
    let found = cycle_search(g, None, budget)?;
    Ok((
        found.as_ref().map_or(0, Vec::len),
        found.map(Certificate::cycle),
    ))
}

/// A cycle of length at least `min_len`, if any.
pub fn find_cycle_at_least(
    g: &Graph,
    min_len: usize,
    budget: Budget,
) -> Result<Option<Certificate>, InvariantError> {
    let found = cycle_search(g, Some(min_len.max(3)), budget)?;
    Ok(found.filter(|c| c.len() >= min_len).map(Certificate::cycle))
}

/// Number of vertices of a longest path, with a witness.
pub fn longest_path_order(g: &Graph) -> Result<(usize, Certificate), InvariantError> {
    longest_path_order_with(g, Budget::from_env())
}

pub fn longest_path_order_with(
    g: &Graph,
    budget: Budget,
) -> Result<(usize, Certificate), InvariantError> {
    if g.n() == 0 {
        return Err(InvariantError::EmptyGraph);
    }
    let path = path_search(g, None, budget)?;
    Ok((path.len(), Certificate::path(path)))
}

/// A path on at least `min_order` vertices, if any.
pub fn find_path_at_least(
    g: &Graph,
    min_order: usize,
    budget: Budget,
) -> Result<Option<Certificate>, InvariantError> {
    if g.n() == 0 {
        return Ok(None);
    }
    let path = path_search(g, Some(min_order.max(1)), budget)?;
    Ok((path.len() >= min_order).then(|| Certificate::path(path)))
}

fn cycle_search(
    g: &Graph,
    target: Option<usize>,
    budget: Budget,
) -> Result<Option<Vec<usize>>, InvariantError> {
    // A cycle uses at most d members of a twin class with d common neighbors.
    let kept = thin_open_twins(g, |d| d);
    let h = g.induced_subgraph(&kept);
    let mut blocks: Vec<Vec<usize>> = biconnected_components(&h)
        .into_iter()
        .filter(|b| b.len() >= 3)
        .collect();
    blocks.sort_by_key(|b| std::cmp::Reverse(b.len()));
    let mut meter = Meter::new(budget);
    // Cycles strictly longer than `floor` are of interest.
    let mut floor = target.map_or(2, |t| t - 1);
    let mut best: Option<Vec<usize>> = None;
    for block in blocks {
        if block.len() <= floor {
            break;
        }
        let d = Dense::new(&h, &block)?;
        let mut dfs = CycleDfs {
            d: &d,
            meter: &mut meter,
            floor,
            stop_at: target.unwrap_or(block.len()),
            best: None,
            root: 0,
        };
        dfs.run()?;
        if let Some(cycle) = dfs.best {
            floor = cycle.len();
            best = Some(d.to_labels(&cycle).into_iter().map(|v| kept[v]).collect());
            if target.is_some() {
                break;
            }
        }
    }
    Ok(best)
}

struct CycleDfs<'a> {
    d: &'a Dense,
    meter: &'a mut Meter,
    floor: usize,
    stop_at: usize,
    best: Option<Vec<usize>>,
    root: usize,
}

impl CycleDfs<'_> {
    fn done(&self) -> bool {
        self.best.as_ref().is_some_and(|c| c.len() >= self.stop_at)
    }

    fn run(&mut self) -> Result<(), InvariantError> {
        let m = self.d.len();
        // Each cycle is found from its smallest vertex.
        for root in 0..m {
            if m - root <= self.floor || self.done() {
                break;
            }
            self.root = root;
            let allowed = self.d.all() & !(bit(root + 1) - 1);
            let mut path = vec![root];
            self.extend(&mut path, bit(root), allowed)?;
        }
        Ok(())
    }

    fn extend(
        &mut self,
        path: &mut Vec<usize>,
        visited: Mask,
        allowed: Mask,
    ) -> Result<(), InvariantError> {
        self.meter.tick()?;
        let end = *path.last().expect("nonempty path");
        let avail = allowed & !visited;
        for w in bits(self.d.adj[end] & avail) {
            path.push(w);
            let seen = visited | bit(w);
            // Close the cycle; the second-vertex test skips the mirror image.
            if path.len() > self.floor
                && path.len() >= 3
                && self.d.adj[w] & bit(self.root) != 0
                && w > path[1]
            {
                self.floor = path.len();
                self.best = Some(path.clone());
                if self.done() {
                    return Ok(());
                }
            }
            let rest = allowed & !seen;
            let reach = self.d.reach(self.d.adj[w] & rest, rest);
            let closable = bits(reach).any(|x| self.d.adj[x] & bit(self.root) != 0);
            if closable && path.len() + reach.count_ones() as usize > self.floor {
                self.extend(path, seen, allowed)?;
                if self.done() {
                    return Ok(());
                }
            }
            path.pop();
        }
        Ok(())
    }
}

fn path_search(
    g: &Graph,
    target: Option<usize>,
    budget: Budget,
) -> Result<Vec<usize>, InvariantError> {
    // A path uses at most d + 1 members of a twin class.
    let kept = thin_open_twins(g, |d| d + 1);
    let h = g.induced_subgraph(&kept);
    let mut comps = h.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut meter = Meter::new(budget);
    let mut best: Vec<usize> = vec![kept[0]];
    let goal = target.unwrap_or(usize::MAX);
    for comp in comps {
        if comp.len() <= best.len() || best.len() >= goal {
            break;
        }
        let d = Dense::new(&h, &comp)?;
        let mut dfs = PathDfs {
            d: &d,
            meter: &mut meter,
            floor: best.len(),
            stop_at: goal.min(comp.len()),
            best: None,
        };
        dfs.run()?;
        if let Some(path) = dfs.best {
            best = d.to_labels(&path).into_iter().map(|v| kept[v]).collect();
        }
    }
    Ok(best)
}

struct PathDfs<'a> {
    d: &'a Dense,
    meter: &'a mut Meter,
    floor: usize,
    stop_at: usize,
    best: Option<Vec<usize>>,
}

impl PathDfs<'_> {
    fn done(&self) -> bool {
        self.floor >= self.stop_at
    }

    fn run(&mut self) -> Result<(), InvariantError> {
        for start in 0..self.d.len() {
            if self.done() {
                break;
            }
            self.extend(&mut vec![start], bit(start))?;
        }
        Ok(())
    }

    fn extend(&mut self, path: &mut Vec<usize>, visited: Mask) -> Result<(), InvariantError> {
        self.meter.tick()?;
        if path.len() > self.floor {
            self.floor = path.len();
            self.best = Some(path.clone());
            if self.done() {
                return Ok(());
            }
        }
        let end = *path.last().expect("nonempty path");
        let rest = self.d.all() & !visited;
        let reach = self.d.reach(self.d.adj[end] & rest, rest);
        if path.len() + reach.count_ones() as usize <= self.floor {
            return Ok(());
        }
        for w in bits(self.d.adj[end] & rest) {
            path.push(w);
            self.extend(path, visited | bit(w))?;
            path.pop();
            if self.done() {
                return Ok(());
            }
        }
        Ok(())
    }
}
