//! Isomorph-free generation of small graphs by edge augmentation.
//!
//! Level `e` holds one canonical key per isomorphism class with `e` edges
//! that passes the filter. Level `e+1` is obtained by adding every missing
//! edge to every class of level `e` and deduplicating canonical keys. Each
//! class with `e+1` edges arises this way from any of its edge-deleted
//! subgraphs, so the result is complete whenever the filter is closed under
//! deleting edges (fan-freeness, degree and matching caps all are).

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_key, graph_from_key, CANONICAL_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order accepted by [`enumerate_graphs`].
pub const ENUMERATION_CAP: usize = 9;

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub n: usize,
    /// `levels[e]`: sorted canonical keys of the kept classes with `e` edges.
    pub levels: Vec<Vec<u64>>,
    /// Kept classes to which no edge can be added without leaving the filter,
    /// sorted.
    pub maximal: Vec<u64>,
}

impl Enumeration {
    pub fn count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    /// Largest edge count present.
    pub fn max_edges(&self) -> usize {
        self.levels.iter().rposition(|l| !l.is_empty()).unwrap_or(0)
    }

    pub fn graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.levels.iter().flatten().map(|&k| graph_from_key(self.n, k))
    }

    pub fn maximal_graphs(&self) -> impl Iterator<Item = Graph> + '_ {
        self.maximal.iter().map(|&k| graph_from_key(self.n, k))
    }
}

/// All isomorphism classes on `n` vertices, one canonical key each.
pub fn enumerate_all(n: usize) -> Result<Enumeration> {
    enumerate_graphs(n, &|_| true)
}

/// Isomorphism classes on `n` vertices passing `keep`, which must be closed
/// under edge deletion and accept the empty graph.
pub fn enumerate_graphs(n: usize, keep: &(dyn Fn(&Graph) -> bool + Sync)) -> Result<Enumeration> {
    if n > ENUMERATION_CAP || n > CANONICAL_CAP {
        return Err(Error::capability(format!(
            "exhaustive enumeration supports n <= {ENUMERATION_CAP}, got {n}"
        )));
    }
    let empty = Graph::empty_unchecked(n);
    if !keep(&empty) {
        return Ok(Enumeration { n, levels: Vec::new(), maximal: Vec::new() });
    }
    let mut levels = vec![vec![canonical_key(&empty)?]];
    let mut maximal = Vec::new();
    loop {
        let current = levels.last().expect("non-empty");
        let expanded: Vec<(u64, Vec<u64>)> = current
            .par_iter()
            .map(|&key| {
                let g = graph_from_key(n, key);
                let mut children = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        if g.has_edge(u, v) {
                            continue;
                        }
                        let mut h = g.clone();
                        h.insert_edge(u, v);
                        if keep(&h) {
                            children.push(canonical_key(&h).expect("order within cap"));
                        }
                    }
                }
                (key, children)
            })
            .collect();
        let mut next = HashSet::new();
        for (key, children) in expanded {
            if children.is_empty() {
                maximal.push(key);
            }
            next.extend(children);
        }
        if next.is_empty() {
            break;
        }
        let mut next: Vec<u64> = next.into_iter().collect();
        next.sort_unstable();
        levels.push(next);
    }
    maximal.sort_unstable();
    Ok(Enumeration { n, levels, maximal })
}
