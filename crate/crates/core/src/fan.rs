//! Detection of the k-fan `F_k` (k triangles sharing exactly one vertex).
//!
//! A vertex `v` is the centre of an `F_k` exactly when `G[N(v)]` has a
//! matching of size `k`: each matched pair closes a triangle through `v`
//! and disjointness of the pairs makes the triangles meet only in `v`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::has_matching_of_size;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FanWitness {
    pub center: usize,
    pub pairs: Vec<(usize, usize)>,
}

/// Centres in descending degree order, ties by ascending index.
fn center_order(g: &Graph, k: usize) -> Vec<usize> {
    let mut order: Vec<(usize, usize)> = (0..g.n())
        .map(|v| (g.degree_unchecked(v), v))
        .filter(|&(d, _)| d >= 2 * k)
        .collect();
    order.sort_unstable_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
    order.into_iter().map(|(_, v)| v).collect()
}

fn fan_at(g: &Graph, v: usize, k: usize) -> Option<FanWitness> {
    let nbrs: Vec<usize> = g.neighbors(v).collect();
    let local = g.induced_subgraph(&g.neighborhood(v).ok()?);
    let (found, m) = has_matching_of_size(&local, k);
    if !found {
        return None;
    }
    let pairs = m?.edges.into_iter().map(|(a, b)| (nbrs[a], nbrs[b])).collect();
    Some(FanWitness { center: v, pairs })
}

/// Whether `g` contains `F_k`, with a witness when it does.
pub fn contains_fan(g: &Graph, k: usize) -> Result<(bool, Option<FanWitness>)> {
    if k == 0 {
        return Err(Error::input("fan parameter k must be at least 1"));
    }
    for v in center_order(g, k) {
        if let Some(w) = fan_at(g, v, k) {
            return Ok((true, Some(w)));
        }
    }
    Ok((false, None))
}

pub fn is_fan_free(g: &Graph, k: usize) -> Result<bool> {
    Ok(!contains_fan(g, k)?.0)
}

/// Parallel scan over centres. The boolean always matches [`contains_fan`];
/// the witness may come from a different centre.
pub fn contains_fan_par(g: &Graph, k: usize) -> Result<(bool, Option<FanWitness>)> {
    if k == 0 {
        return Err(Error::input("fan parameter k must be at least 1"));
    }
    let w = center_order(g, k).into_par_iter().find_map_any(|v| fan_at(g, v, k));
    Ok((w.is_some(), w))
}

/// Whether some centre in `centers` carries an `F_k`. Used for incremental
/// re-checks after an edge insertion.
pub(crate) fn fan_at_any(g: &Graph, centers: impl IntoIterator<Item = usize>, k: usize) -> bool {
    centers
        .into_iter()
        .any(|v| g.degree_unchecked(v) >= 2 * k && fan_at(g, v, k).is_some())
}

/// Largest order accepted by [`contains_fan_naive`].
pub const NAIVE_VERTEX_CAP: usize = 12;
/// Largest `k` accepted by [`contains_fan_naive`].
pub const NAIVE_K_CAP: usize = 3;

/// Exhaustive search over centres and sets of `k` pairwise vertex-disjoint
/// triangles through the centre. Independent of the matching route.
pub fn contains_fan_naive(g: &Graph, k: usize) -> Result<bool> {
    if k == 0 {
        return Err(Error::input("fan parameter k must be at least 1"));
    }
    if g.n() > NAIVE_VERTEX_CAP || k > NAIVE_K_CAP {
        return Err(Error::capability(format!(
            "naive fan search supports n <= {NAIVE_VERTEX_CAP}, k <= {NAIVE_K_CAP}"
        )));
    }
    let n = g.n();
    for c in 0..n {
        let mut tris = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if a != c && b != c && g.has_edge(c, a) && g.has_edge(c, b) && g.has_edge(a, b) {
                    tris.push((a, b));
                }
            }
        }
        if pick_disjoint(&tris, 0, 0u64, k) {
            return Ok(true);
        }
    }
    Ok(false)
}

fn pick_disjoint(tris: &[(usize, usize)], from: usize, used: u64, need: usize) -> bool {
    if need == 0 {
        return true;
    }
    (from..tris.len()).any(|i| {
        let (a, b) = tris[i];
        used >> a & 1 == 0
            && used >> b & 1 == 0
            && pick_disjoint(tris, i + 1, used | 1 << a | 1 << b, need - 1)
    })
}

/// Checks that `w` is a genuine `F_k` in `g`: `k` pairs, `2k+1` distinct
/// vertices, and every pair forms a triangle with the centre.
pub fn verify_witness(g: &Graph, k: usize, w: &FanWitness) -> bool {
    if w.pairs.len() != k || w.center >= g.n() {
        return false;
    }
    let mut seen = vec![w.center];
    for &(a, b) in &w.pairs {
        seen.push(a);
        seen.push(b);
    }
    let len = seen.len();
    seen.sort_unstable();
    seen.dedup();
    if seen.len() != len {
        return false;
    }
    w.pairs
        .iter()
        .all(|&(a, b)| g.has_edge(a, b) && g.has_edge(w.center, a) && g.has_edge(w.center, b))
}
