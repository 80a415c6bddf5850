#![allow(dead_code)]

use fanfree_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connected graph: a random spanning tree plus G(n,p) edges.
pub fn connected_gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.random_range(0..v), v)).collect();
    edges.extend(gnp(n, p, seed).edges());
    Graph::from_edges(n, &edges).unwrap()
}

/// Matching number by dynamic programming over vertex subsets (n <= 16).
pub fn brute_matching_number(g: &Graph) -> usize {
    let n = g.n();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).fold(0u32, |m, u| m | 1 << u)).collect();
    let mut best = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut b = best[rest];
        let mut cand = adj[v] as usize & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            b = b.max(1 + best[rest & !(1 << u)]);
        }
        best[mask] = b;
    }
    best[(1 << n) - 1] as usize
}

pub fn adjacency(g: &Graph) -> nalgebra::DMatrix<f64> {
    let n = g.n();
    nalgebra::DMatrix::from_fn(n, n, |i, j| if g.has_edge(i, j) { 1.0 } else { 0.0 })
}

pub fn largest_eigenvalue(g: &Graph) -> f64 {
    adjacency(g).symmetric_eigen().eigenvalues.iter().copied().fold(f64::MIN, f64::max)
}
