//! Extremal graphs for the k-fan and the closed-form extremal functions.
//!
//! Vertex layout of every construction: the larger side `A = 0..⌈n/2⌉` of
//! the Turán graph `T_{n,2}` comes first, the smaller side `B` follows. The
//! embedded graph (two cliques for odd `k`, `H*` for even `k`) occupies the
//! lowest labels of `A`.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fan::contains_fan;
use crate::graph::{Graph, VertexSet, LARGE_VERTEX_CAP};
use crate::matching::matching_number;

/// Value of the Turán number formula together with whether `n` lies in the
/// range `n >= 50k²` where it is a theorem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExValue {
    pub value: u64,
    pub in_proven_range: bool,
}

/// `⌊n²/4⌋ + k² − k` for odd `k`, `⌊n²/4⌋ + k² − 3k/2` for even `k`.
pub fn ex_fan(n: u64, k: u64) -> Result<ExValue> {
    if k == 0 {
        return Err(Error::input("k must be at least 1"));
    }
    Ok(ExValue {
        value: n * n / 4 + f_special(k),
        in_proven_range: n >= 50 * k * k,
    })
}

/// `f(β,Δ) = Δβ + ⌊Δ/2⌋·⌊β/⌈Δ/2⌉⌋`: the most edges in a graph with matching
/// number at most `β` and maximum degree at most `Δ`.
pub fn f_chvatal_hanson(beta: u64, delta: u64) -> Result<u64> {
    if beta == 0 || delta == 0 {
        return Err(Error::input("beta and delta must both be positive"));
    }
    Ok(delta * beta + (delta / 2) * (beta / delta.div_ceil(2)))
}

/// Closed form of `f(k−1, k−1)`: `k² − k` (k odd), `k² − 3k/2` (k even).
/// Gives 0 at `k = 1`, where the graph embedded in `T_{n,2}` is empty.
pub fn f_special(k: u64) -> u64 {
    if k % 2 == 1 {
        k * k - k
    } else {
        k * k - 3 * k / 2
    }
}

/// Which construction applies to a given `(n, k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtremalSpec {
    pub n: usize,
    pub k: usize,
}

impl ExtremalSpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::input("k must be at least 1"));
        }
        Ok(ExtremalSpec { n, k })
    }

    pub fn is_odd(&self) -> bool {
        self.k % 2 == 1
    }

    /// Smallest order for which the construction is defined: `4k−1` (odd k)
    /// or `4k−3` (even k).
    pub fn min_order(&self) -> usize {
        if self.is_odd() {
            4 * self.k - 1
        } else {
            4 * self.k - 3
        }
    }

    pub fn construction_valid(&self) -> bool {
        self.n >= self.min_order()
    }

    /// `n >= 50k²`, the range in which the edge bound is proved.
    pub fn in_proven_range(&self) -> bool {
        self.n >= 50 * self.k * self.k
    }

    /// `G¹_{n,k}` or `G²_{n,k}` according to the parity of `k`.
    pub fn build(&self) -> Result<Graph> {
        if self.is_odd() {
            extremal_g1(self.n, self.k)
        } else {
            extremal_g2(self.n, self.k)
        }
    }
}

/// `T_{n,2}`: sides `0..⌈n/2⌉` and `⌈n/2⌉..n`.
pub fn turan_bipartite(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::input("Turán graph needs n >= 1"));
    }
    if n > LARGE_VERTEX_CAP {
        return Err(Error::capability(format!("n = {n} exceeds {LARGE_VERTEX_CAP}")));
    }
    let a = n.div_ceil(2);
    let mut g = Graph::empty_unchecked(n);
    for u in 0..a {
        for v in a..n {
            g.insert_edge(u, v);
        }
    }
    Ok(g)
}

fn embed(host: &mut Graph, inner: &Graph) {
    for (u, v) in inner.edges() {
        host.insert_edge(u, v);
    }
}

/// `T_{n,2}` with two disjoint copies of `K_k` inside the larger side.
pub fn extremal_g1(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k % 2 == 0 {
        return Err(Error::input(format!("G1 needs odd k >= 1, got k = {k}")));
    }
    if n < 4 * k - 1 {
        return Err(Error::input(format!("G1 needs n >= 4k-1 = {}, got n = {n}", 4 * k - 1)));
    }
    let mut g = turan_bipartite(n)?;
    for base in [0, k] {
        for u in base..base + k {
            for v in u + 1..base + k {
                g.insert_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// `T_{n,2}` with `H*` (see [`h_star`]) inside the larger side.
pub fn extremal_g2(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || k % 2 == 1 {
        return Err(Error::input(format!("G2 needs even k >= 2, got k = {k}")));
    }
    if n < 4 * k - 3 {
        return Err(Error::input(format!("G2 needs n >= 4k-3 = {}, got n = {n}", 4 * k - 3)));
    }
    let mut g = turan_bipartite(n)?;
    embed(&mut g, &h_star(k)?);
    Ok(g)
}

/// The equitable partition of `G¹_{n,k}`: clique vertices, the rest of the
/// larger side, the smaller side. Empty classes are dropped.
pub fn g1_partition(n: usize, k: usize) -> Result<Vec<VertexSet>> {
    let spec = ExtremalSpec::new(n, k)?;
    if !spec.is_odd() || !spec.construction_valid() {
        return Err(Error::input(format!("no G1 construction for n = {n}, k = {k}")));
    }
    let a = n.div_ceil(2);
    let classes = [
        VertexSet::from_vertices(n, 0..2 * k),
        VertexSet::from_vertices(n, 2 * k..a),
        VertexSet::from_vertices(n, a..n),
    ];
    Ok(classes.into_iter().filter(|c| !c.is_empty()).collect())
}

/// Largest `k` for which `H*` is found by exhaustive lexicographic search.
pub const H_STAR_EXHAUSTIVE_MAX_K: usize = 4;

fn h_star_cache() -> &'static Mutex<HashMap<usize, Graph>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Graph>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The graph embedded by `G²_{n,k}`: `2k−1` vertices, `k² − 3k/2` edges,
/// maximum degree `k−1` and matching number at most `k−1`.
///
/// For `k <= 4` this is the lexicographically least edge list with those
/// parameters; beyond that a near-regular circulant is used. Either way the
/// result is certified before it is cached.
pub fn h_star(k: usize) -> Result<Graph> {
    if k < 2 || k % 2 == 1 {
        return Err(Error::input(format!("H* is defined for even k >= 2, got {k}")));
    }
    if let Some(g) = h_star_cache().lock().expect("cache lock").get(&k) {
        return Ok(g.clone());
    }
    let m = 2 * k - 1;
    let target = f_special(k as u64) as usize;
    let g = if k <= H_STAR_EXHAUSTIVE_MAX_K {
        lex_least_degree_bounded(m, k - 1, target)
            .ok_or_else(|| Error::Construction(format!("no H* found for k = {k}")))?
    } else {
        near_regular(m, k - 1)
    };
    if g.edge_count() != target || g.max_degree() > k - 1 || matching_number(&g) > k - 1 {
        return Err(Error::Construction(format!("H* for k = {k} failed certification")));
    }
    h_star_cache().lock().expect("cache lock").entry(k).or_insert_with(|| g.clone());
    Ok(g)
}

/// Lexicographically least sorted edge list on `m` vertices with exactly
/// `target` edges and maximum degree at most `cap`.
fn lex_least_degree_bounded(m: usize, cap: usize, target: usize) -> Option<Graph> {
    let candidates: Vec<(usize, usize)> =
        (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v))).collect();
    let mut deg = vec![0; m];
    let mut chosen = Vec::new();

    fn bound(candidates: &[(usize, usize)], from: usize, deg: &[usize], cap: usize) -> usize {
        let residual: usize = deg.iter().map(|&d| cap - d).sum();
        let open = candidates[from..]
            .iter()
            .filter(|&&(u, v)| deg[u] < cap && deg[v] < cap)
            .count();
        open.min(residual / 2)
    }

    fn go(
        candidates: &[(usize, usize)],
        i: usize,
        deg: &mut [usize],
        chosen: &mut Vec<(usize, usize)>,
        cap: usize,
        target: usize,
    ) -> bool {
        if chosen.len() == target {
            return true;
        }
        if i == candidates.len() || chosen.len() + bound(candidates, i, deg, cap) < target {
            return false;
        }
        let (u, v) = candidates[i];
        if deg[u] < cap && deg[v] < cap {
            deg[u] += 1;
            deg[v] += 1;
            chosen.push((u, v));
            if go(candidates, i + 1, deg, chosen, cap, target) {
                return true;
            }
            chosen.pop();
            deg[u] -= 1;
            deg[v] -= 1;
        }
        go(candidates, i + 1, deg, chosen, cap, target)
    }

    if go(&candidates, 0, &mut deg, &mut chosen, cap, target) {
        Graph::from_edges_with_cap(m, &chosen, LARGE_VERTEX_CAP).ok()
    } else {
        None
    }
}

/// Circulant graph on `m` vertices in which every vertex has degree `d`,
/// except one vertex of degree `d−1` when `m·d` is odd. Requires `d < m`.
pub fn near_regular(m: usize, d: usize) -> Graph {
    assert!(d < m.max(1), "degree {d} impossible on {m} vertices");
    let mut g = Graph::empty_unchecked(m);
    for jump in 1..=d / 2 {
        for i in 0..m {
            g.insert_edge(i, (i + jump) % m);
        }
    }
    if d % 2 == 1 {
        if m % 2 == 0 {
            for i in 0..m / 2 {
                g.insert_edge(i, i + m / 2);
            }
        } else {
            // alternate edges of the Hamiltonian cycle generated by jump (m-1)/2
            let s = (m - 1) / 2;
            for i in 0..s {
                g.insert_edge((2 * i * s) % m, ((2 * i + 1) * s) % m);
            }
        }
    }
    g
}

/// Largest `β·Δ` accepted by [`chvatal_hanson_extremal_graph`].
pub const CHVATAL_HANSON_BUDGET: u64 = 25;

/// A graph with `ν <= β`, `Δ <= δ` and exactly `f(β,δ)` edges, certified by
/// the matching module. Isolated vertices are dropped.
///
/// Two candidates are tried and the smaller kept: a near-regular graph on
/// `2β+1` vertices (matching number is then automatically at most `β`), and
/// the component form `q` near-regular blocks on `2⌈δ/2⌉+1` vertices plus
/// `β mod ⌈δ/2⌉` stars `K_{1,δ}`, where `q = ⌊β/⌈δ/2⌉⌋`.
pub fn chvatal_hanson_extremal_graph(beta: usize, delta: usize) -> Result<Graph> {
    let f = f_chvatal_hanson(beta as u64, delta as u64)? as usize;
    if (beta as u64) * (delta as u64) > CHVATAL_HANSON_BUDGET {
        return Err(Error::capability(format!(
            "beta*delta = {} exceeds the budget of {CHVATAL_HANSON_BUDGET}",
            beta * delta
        )));
    }
    let mut candidates = Vec::new();
    if delta <= 2 * beta {
        candidates.push(near_regular(2 * beta + 1, delta));
    }
    let s = delta.div_ceil(2);
    let mut blocks = Graph::empty_unchecked(0);
    for _ in 0..beta / s {
        blocks = crate::families::disjoint_union(&blocks, &near_regular(2 * s + 1, delta));
    }
    for _ in 0..beta % s {
        blocks = crate::families::disjoint_union(&blocks, &crate::families::star(delta));
    }
    candidates.push(blocks);

    let certified = candidates
        .into_iter()
        .map(|g| drop_isolated(&g))
        .filter(|g| g.edge_count() == f && g.max_degree() <= delta && matching_number(g) <= beta)
        .min_by_key(|g| g.n());
    certified.ok_or_else(|| {
        Error::Construction(format!("no certified extremal graph for beta = {beta}, delta = {delta}"))
    })
}

fn drop_isolated(g: &Graph) -> Graph {
    let keep = VertexSet::from_vertices(g.n(), (0..g.n()).filter(|&v| g.degree_unchecked(v) > 0));
    g.induced_subgraph(&keep)
}

/// Certifies that a construction is `F_k`-free, returning it unchanged.
pub fn certify_fan_free(g: Graph, k: usize) -> Result<Graph> {
    if contains_fan(&g, k)?.0 {
        Err(Error::Construction(format!("graph contains F_{k}")))
    } else {
        Ok(g)
    }
}
