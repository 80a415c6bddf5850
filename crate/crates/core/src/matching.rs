//! Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).
//!
//! Each free vertex is used once as the root of an alternating-tree search;
//! odd cycles met during the search are contracted by relabelling their
//! vertices onto the blossom base. A failed search from a root stays failed
//! after later augmentations, so a single pass over the roots suffices.
//! Vertices and neighbours are scanned in ascending order, so results are
//! reproducible.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchingResult {
    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub size: usize,
}

impl MatchingResult {
    /// Pairs are disjoint edges of `g` and `size` counts them.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let mut used = vec![false; g.n()];
        self.size == self.edges.len()
            && self.edges.iter().all(|&(u, v)| {
                g.has_edge(u, v) && !std::mem::replace(&mut used[u], true) && !std::mem::replace(&mut used[v], true)
            })
    }
}

pub fn maximum_matching(g: &Graph) -> MatchingResult {
    Blossom::new(g).run(NONE)
}

/// Whether `ν(g) >= k`, with a witness matching of exactly `k` edges.
/// Stops augmenting as soon as `k` edges are matched.
pub fn has_matching_of_size(g: &Graph, k: usize) -> (bool, Option<MatchingResult>) {
    if k == 0 {
        return (true, Some(MatchingResult { edges: Vec::new(), size: 0 }));
    }
    if 2 * k > g.n() {
        return (false, None);
    }
    let mut m = Blossom::new(g).run(k);
    if m.size >= k {
        m.edges.truncate(k);
        m.size = k;
        (true, Some(m))
    } else {
        (false, None)
    }
}

/// Matching number `ν(g)`.
pub fn matching_number(g: &Graph) -> usize {
    maximum_matching(g).size
}

/// `Δ(g)`; 0 for edgeless or empty graphs.
pub fn max_degree(g: &Graph) -> usize {
    g.max_degree()
}

struct Blossom<'a> {
    g: &'a Graph,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    marks: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a Graph) -> Self {
        let n = g.n();
        Blossom {
            g,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            marks: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn run(mut self, target: usize) -> MatchingResult {
        let n = self.g.n();
        let mut size = 0;
        // greedy start
        for u in 0..n {
            if size >= target {
                break;
            }
            if self.mate[u] == NONE {
                if let Some(v) = self.g.neighbors(u).find(|&v| self.mate[v] == NONE) {
                    self.mate[u] = v;
                    self.mate[v] = u;
                    size += 1;
                }
            }
        }
        for root in 0..n {
            if size >= target {
                break;
            }
            if self.mate[root] == NONE {
                if let Some(end) = self.find_path(root) {
                    self.augment(end);
                    size += 1;
                }
            }
        }
        let edges: Vec<(usize, usize)> = (0..n)
            .filter(|&u| self.mate[u] != NONE && u < self.mate[u])
            .map(|u| (u, self.mate[u]))
            .collect();
        MatchingResult { size: edges.len(), edges }
    }

    fn lca(&mut self, mut a: usize, mut b: usize) -> usize {
        self.marks.fill(false);
        loop {
            a = self.base[a];
            self.marks[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if self.marks[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.fill(false);
        self.parent.fill(NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let m = self.mate[to];
                    self.used[m] = true;
                    self.queue.push(m);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    /// Exhaustive maximum matching over edge subsets, for tiny graphs.
    fn brute_nu(g: &Graph) -> usize {
        fn go(edges: &[(usize, usize)], used: u64, i: usize) -> usize {
            if i == edges.len() {
                return 0;
            }
            let (u, v) = edges[i];
            let skip = go(edges, used, i + 1);
            if used >> u & 1 == 0 && used >> v & 1 == 0 {
                skip.max(1 + go(edges, used | 1 << u | 1 << v, i + 1))
            } else {
                skip
            }
        }
        let edges: Vec<_> = g.edges().collect();
        go(&edges, 0, 0)
    }

    #[test]
    fn examples() {
        assert_eq!(maximum_matching(&families::cycle(6)).size, 3);
        assert_eq!(maximum_matching(&families::complete(5)).size, 2);
        let p = families::petersen();
        assert_eq!(brute_nu(&p), 5);
        let m = maximum_matching(&p);
        assert_eq!(m.size, 5);
        assert!(m.is_valid_for(&p));
    }

    #[test]
    fn threshold_queries() {
        let k3 = families::complete(3);
        assert!(has_matching_of_size(&k3, 1).0);
        assert!(!has_matching_of_size(&k3, 2).0);
        let two_k3 = families::disjoint_union(&k3, &k3);
        assert_eq!(brute_nu(&two_k3), 2);
        assert!(!has_matching_of_size(&two_k3, 3).0);
        let (ok, w) = has_matching_of_size(&two_k3, 2);
        assert!(ok);
        let w = w.unwrap();
        assert_eq!(w.size, 2);
        assert!(w.is_valid_for(&two_k3));
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(max_degree(&families::star(7)), 7);
        assert_eq!(max_degree(&families::cycle(9)), 2);
        assert_eq!(max_degree(&Graph::empty(0).unwrap()), 0);
        assert_eq!(max_degree(&Graph::empty(5).unwrap()), 0);
    }

    #[test]
    fn blossom_needed() {
        // two triangles joined by a path: greedy alone misses the optimum
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5)],
        )
        .unwrap();
        assert_eq!(maximum_matching(&g).size, brute_nu(&g));
    }
}
