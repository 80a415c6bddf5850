//! Maximum cut: exact by Gray-code enumeration for small orders, local
//! search with single-vertex moves otherwise.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// Largest order solved exactly by [`max_cut`].
pub const EXACT_CUT_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cut {
    pub s: VertexSet,
    pub t: VertexSet,
    pub size: usize,
    /// True when the cut is certified maximum.
    pub exact: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CutMode {
    /// Exact up to [`EXACT_CUT_CAP`] vertices, heuristic beyond.
    Auto,
    Exact,
    Heuristic,
}

pub fn max_cut(g: &Graph) -> Cut {
    max_cut_with(g, CutMode::Auto)
}

/// `CutMode::Exact` above [`EXACT_CUT_CAP`] falls back to the heuristic and
/// reports `exact = false`.
pub fn max_cut_with(g: &Graph, mode: CutMode) -> Cut {
    let exact = match mode {
        CutMode::Auto | CutMode::Exact => g.n() <= EXACT_CUT_CAP,
        CutMode::Heuristic => false,
    };
    let side = if exact { exact_sides(g) } else { heuristic_sides(g) };
    build(g, &side, exact)
}

fn build(g: &Graph, side: &[bool], exact: bool) -> Cut {
    let n = g.n();
    let s = VertexSet::from_vertices(n, (0..n).filter(|&v| !side[v]));
    let t = VertexSet::from_vertices(n, (0..n).filter(|&v| side[v]));
    let size = g.edges_between(&s, &t);
    Cut { s, t, size, exact }
}

/// Vertex 0 stays in `S`; the others run through all `2^(n-1)` subsets in
/// Gray-code order, updating the cut size by the flipped vertex's degrees.
fn exact_sides(g: &Graph) -> Vec<bool> {
    let n = g.n();
    if n <= 1 {
        return vec![false; n];
    }
    let rows: Vec<u32> = (0..n).map(|v| g.row(v)[0] as u32).collect();
    let mut mask = 0u32; // bit set = vertex in T
    let mut size: i64 = 0;
    let mut best = (0i64, 0u32);
    for i in 1u64..(1 << (n - 1)) {
        let v = i.trailing_zeros() as usize + 1;
        let r = rows[v];
        let in_t = mask >> v & 1 == 1;
        let (same, other) = if in_t {
            ((r & mask).count_ones(), (r & !mask).count_ones())
        } else {
            ((r & !mask).count_ones(), (r & mask).count_ones())
        };
        size += same as i64 - other as i64;
        mask ^= 1 << v;
        if size > best.0 {
            best = (size, mask);
        }
    }
    (0..n).map(|v| best.1 >> v & 1 == 1).collect()
}

/// Best of two starts (BFS parity from a maximum-degree vertex, greedy
/// placement), each improved until no single vertex move increases the cut.
fn heuristic_sides(g: &Graph) -> Vec<bool> {
    let a = improve(g, bfs_parity(g));
    let b = improve(g, greedy(g));
    if cut_size(g, &b) > cut_size(g, &a) {
        b
    } else {
        a
    }
}

fn cut_size(g: &Graph, side: &[bool]) -> usize {
    g.edges().filter(|&(u, v)| side[u] != side[v]).count()
}

fn bfs_parity(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut side = vec![false; n];
    let mut seen = vec![false; n];
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree_unchecked(v)), v));
    let mut queue = VecDeque::new();
    for root in order {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            for w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    side[w] = !side[u];
                    queue.push_back(w);
                }
            }
        }
    }
    side
}

fn greedy(g: &Graph) -> Vec<bool> {
    let n = g.n();
    let mut side = vec![false; n];
    let mut placed = vec![false; n];
    for v in 0..n {
        let (mut in_s, mut in_t) = (0, 0);
        for w in g.neighbors(v) {
            if placed[w] {
                if side[w] {
                    in_t += 1;
                } else {
                    in_s += 1;
                }
            }
        }
        side[v] = in_s > in_t;
        placed[v] = true;
    }
    side
}

fn improve(g: &Graph, mut side: Vec<bool>) -> Vec<bool> {
    loop {
        let mut moved = false;
        for v in 0..g.n() {
            let same = g.neighbors(v).filter(|&w| side[w] == side[v]).count();
            let deg = g.degree_unchecked(v);
            if 2 * same > deg {
                side[v] = !side[v];
                moved = true;
            }
        }
        if !moved {
            return side;
        }
    }
}

/// No single vertex has more neighbours on its own side than across.
pub fn is_locally_optimal(g: &Graph, cut: &Cut) -> bool {
    (0..g.n()).all(|v| {
        let (own, other) = if cut.s.contains(v) { (&cut.s, &cut.t) } else { (&cut.t, &cut.s) };
        g.degree_into_unchecked(v, other) >= g.degree_into_unchecked(v, own)
    })
}
