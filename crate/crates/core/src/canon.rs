//! Canonical labelling for small graphs.
//!
//! The canonical form is the lexicographically least graph6 bit string over
//! all vertex orders that respect an isomorphism-invariant ordered partition.
//! The partition starts from degrees and is refined to an equitable one; ties
//! are broken by individualising each vertex of the first non-singleton cell
//! in turn (twins are branched on once, since swapping them is an
//! automorphism that fixes the partition).

use crate::error::{Error, Result};
use crate::formats::graph6_encode;
use crate::graph::Graph;

/// Largest vertex count accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 10;

/// Canonical byte string (graph6 of the canonically relabelled graph).
/// Equal for two graphs exactly when they are isomorphic.
pub fn canonical_form(g: &Graph) -> Result<Vec<u8>> {
    Ok(graph6_encode(&canonical_graph(g)?).into_bytes())
}

/// Canonically relabelled copy of `g`.
pub fn canonical_graph(g: &Graph) -> Result<Graph> {
    let order = canonical_order(g)?;
    let mut perm = vec![0; g.n()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v] = pos;
    }
    g.permuted(&perm)
}

/// `order[i]` is the vertex placed at position `i` by the canonical labelling.
pub fn canonical_order(g: &Graph) -> Result<Vec<usize>> {
    check_cap(g)?;
    let rows = small_rows(g);
    Ok(search(&rows).1)
}

/// Canonical bit string packed into an integer (first bit most significant).
/// Used as the dedup key during enumeration.
pub fn canonical_key(g: &Graph) -> Result<u64> {
    check_cap(g)?;
    Ok(search(&small_rows(g)).0)
}

/// Graph on `n` vertices whose graph6 bit string is `key`.
pub fn graph_from_key(n: usize, key: u64) -> Graph {
    let nbits = n * n.saturating_sub(1) / 2;
    let mut g = Graph::empty_unchecked(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (nbits - 1 - k) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    g
}

fn check_cap(g: &Graph) -> Result<()> {
    if g.n() > CANONICAL_CAP {
        Err(Error::capability(format!(
            "canonical form supports at most {CANONICAL_CAP} vertices, got {}",
            g.n()
        )))
    } else {
        Ok(())
    }
}

fn small_rows(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.row(v).first().copied().unwrap_or(0)).collect()
}

fn key_of(rows: &[u64], order: &[usize]) -> u64 {
    let mut key = 0u64;
    for j in 1..order.len() {
        let rj = rows[order[j]];
        for &vi in &order[..j] {
            key = (key << 1) | (rj >> vi & 1);
        }
    }
    key
}

/// Splits cells by neighbour counts into each splitter until stable.
fn refine(rows: &[u64], cells: &mut Vec<u64>) {
    'restart: loop {
        for si in 0..cells.len() {
            let splitter = cells[si];
            let mut next = Vec::with_capacity(cells.len() + 4);
            let mut split = false;
            for &cell in cells.iter() {
                if cell.count_ones() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut buckets: Vec<(u32, u64)> = Vec::new();
                let mut rest = cell;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    let c = (rows[v] & splitter).count_ones();
                    match buckets.iter_mut().find(|b| b.0 == c) {
                        Some(b) => b.1 |= 1 << v,
                        None => buckets.push((c, 1 << v)),
                    }
                }
                if buckets.len() > 1 {
                    split = true;
                    buckets.sort_unstable_by_key(|b| b.0);
                }
                next.extend(buckets.iter().map(|b| b.1));
            }
            if split {
                *cells = next;
                continue 'restart;
            }
        }
        return;
    }
}

fn search(rows: &[u64]) -> (u64, Vec<usize>) {
    let n = rows.len();
    if n == 0 {
        return (0, Vec::new());
    }
    let all = if n == 64 { !0 } else { (1u64 << n) - 1 };
    let mut best: Option<(u64, Vec<usize>)> = None;
    descend(rows, vec![all], &mut best);
    best.expect("search visits at least one leaf")
}

fn descend(rows: &[u64], mut cells: Vec<u64>, best: &mut Option<(u64, Vec<usize>)>) {
    refine(rows, &mut cells);
    let Some(target) = cells.iter().position(|c| c.count_ones() > 1) else {
        let order: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let key = key_of(rows, &order);
        if best.as_ref().is_none_or(|b| key < b.0) {
            *best = Some((key, order));
        }
        return;
    };
    let cell = cells[target];
    let mut explored: Vec<usize> = Vec::new();
    let mut rest = cell;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let twin_seen = explored
            .iter()
            .any(|&u| rows[u] & !(1 << v) == rows[v] & !(1 << u));
        if twin_seen {
            continue;
        }
        explored.push(v);
        let mut child = Vec::with_capacity(cells.len() + 1);
        child.extend_from_slice(&cells[..target]);
        child.push(1 << v);
        child.push(cell & !(1 << v));
        child.extend_from_slice(&cells[target + 1..]);
        descend(rows, child, best);
    }
}
