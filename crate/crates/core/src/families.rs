//! Standard named graphs used by tests, constructions and examples.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty_unchecked(n);
    for u in 0..n {
        for v in u + 1..n {
            g.insert_edge(u, v);
        }
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut g = Graph::empty_unchecked(n);
    for v in 0..n {
        g.insert_edge(v, (v + 1) % n);
    }
    g
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty_unchecked(n);
    for v in 1..n {
        g.insert_edge(v - 1, v);
    }
    g
}

/// `K_{1,leaves}` with the centre at vertex 0.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty_unchecked(leaves + 1);
    for v in 1..=leaves {
        g.insert_edge(0, v);
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty_unchecked(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.insert_edge(u, v);
        }
    }
    g
}

/// Hub 0 joined to a rim cycle on `1..=rim`.
pub fn wheel(rim: usize) -> Graph {
    let mut g = Graph::empty_unchecked(rim + 1);
    for i in 0..rim {
        g.insert_edge(0, i + 1);
        g.insert_edge(i + 1, (i + 1) % rim + 1);
    }
    g
}

/// The k-fan: `k` triangles sharing vertex 0; triangle `i` is `{0, 2i+1, 2i+2}`.
pub fn fan(k: usize) -> Graph {
    let mut g = Graph::empty_unchecked(2 * k + 1);
    for i in 0..k {
        let (a, b) = (2 * i + 1, 2 * i + 2);
        g.insert_edge(0, a);
        g.insert_edge(0, b);
        g.insert_edge(a, b);
    }
    g
}

pub fn petersen() -> Graph {
    let mut g = Graph::empty_unchecked(10);
    for i in 0..5 {
        g.insert_edge(i, (i + 1) % 5);
        g.insert_edge(i, i + 5);
        g.insert_edge(i + 5, (i + 2) % 5 + 5);
    }
    g
}

/// `g` on `0..g.n()` followed by `h` shifted up by `g.n()`.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let off = g.n();
    let mut out = Graph::empty_unchecked(off + h.n());
    for (u, v) in g.edges() {
        out.insert_edge(u, v);
    }
    for (u, v) in h.edges() {
        out.insert_edge(u + off, v + off);
    }
    out
}
