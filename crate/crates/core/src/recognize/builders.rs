//! Constructors for the named graphs. Orders above 64 panic, as in
//! [`Graph::new`].

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `K^k`.
pub fn build_complete(k: usize) -> Graph {
    Graph::new(k).complement()
}

/// `K^{a,b}` with parts `0..a` and `a..a+b`.
pub fn build_complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::new(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// The cycle with `k` edges (and `k` vertices).
pub fn build_cycle_edges(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(Error::BadParameter(format!("a cycle needs at least 3 edges, got {k}")));
    }
    let mut g = Graph::new(k);
    for i in 0..k {
        g.add_edge(i, (i + 1) % k);
    }
    Ok(g)
}

/// The path with `k` edges, on `k + 1` vertices. The 4-vertex path is
/// `build_path_edges(3)`.
pub fn build_path_edges(k: usize) -> Graph {
    let mut g = Graph::new(k + 1);
    for i in 0..k {
        g.add_edge(i, i + 1);
    }
    g
}

/// `I^k`, the edgeless graph.
pub fn build_independent(k: usize) -> Graph {
    Graph::new(k)
}

/// `c` vertex-disjoint copies of `g`.
pub fn build_disjoint_copies(c: usize, g: &Graph) -> Graph {
    (0..c).fold(Graph::new(0), |acc, _| acc.disjoint_union(g))
}

/// `K^{1,t}` with center 0.
pub fn build_star(t: usize) -> Graph {
    build_complete_bipartite(1, t)
}

/// `U2(l, t) = l K^2 ∪ K^{1,t}`, with `l, t ≥ 1`.
pub fn build_u2(l: usize, t: usize) -> Result<Graph> {
    if l == 0 || t == 0 {
        return Err(Error::BadParameter(format!("U2 needs l >= 1 and t >= 1, got l={l}, t={t}")));
    }
    Ok(build_disjoint_copies(l, &build_complete(2)).disjoint_union(&build_star(t)))
}

/// `U3(l)`: the 4-cycle 0-1-2-3 with `l` triangles sharing vertex 0.
pub fn build_u3(l: usize) -> Graph {
    let mut g = Graph::new(4 + 2 * l);
    for i in 0..4 {
        g.add_edge(i, (i + 1) % 4);
    }
    for i in 0..l {
        let (a, b) = (4 + 2 * i, 5 + 2 * i);
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    g
}

pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    g1.disjoint_union(g2)
}
