//! Simple undirected graphs on `0..n` with dense bitset adjacency.
//!
//! Vertices are plain indices because packing is defined on a shared,
//! labeled vertex set: two graphs of the same order live on the same `V`.

mod canon;
mod degree;
mod enumerate;
mod graph6;
mod moves;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use degree::{anchored_realize, havel_hakimi_realize, is_graphical, DegreeSequence};
pub use enumerate::{enumerate_graphs, enumerate_graphs_with_cap, DEFAULT_ORDER_CAP};
pub use graph6::{graph6_decode, graph6_encode};
pub use moves::{bad_pairs, edge_exchange, vertex_interchange, EdgeExchangeSpec};
pub(crate) use degree::erdos_gallai;
pub(crate) use moves::bad_pair_count;

use crate::error::{Error, Result};
use std::fmt;

/// Largest supported order; one `u64` row per vertex.
pub const MAX_ORDER: usize = 64;

/// Bitmask with the lowest `n` bits set.
#[inline]
pub(crate) fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the set bits of a mask, lowest first.
#[inline]
pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let b = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(b)
        }
    })
}

/// Simple undirected graph. Adjacency is symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// # Panics
    /// Panics if `n > MAX_ORDER`.
    pub fn new(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge { order: n, cap: MAX_ORDER });
        }
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange(u));
            }
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if u == v {
                return Err(Error::BadParameter(format!("self-loop at {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Adds `uv`. Loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u != v {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        }
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Neighbor set of `v` as a bitmask.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| bits(self.adj[u] & !low_bits(u + 1)).map(move |v| (u, v)))
    }

    pub fn vertex_mask(&self) -> u64 {
        low_bits(self.n)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Minimum degree among vertices of positive degree.
    pub fn delta_plus(&self) -> Result<usize> {
        (0..self.n)
            .map(|v| self.degree(v))
            .filter(|&d| d > 0)
            .min()
            .ok_or(Error::NoPositiveVertex)
    }

    /// Vertices of positive degree, ascending.
    pub fn positive_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.adj[v] != 0).collect()
    }

    /// Subgraph induced by the positive-degree vertices, relabeled in
    /// ascending order.
    pub fn positive_part(&self) -> Result<Graph> {
        let verts = self.positive_vertices();
        if verts.is_empty() {
            return Err(Error::NoPositiveVertex);
        }
        Ok(self.induced_subgraph(&verts))
    }

    /// Subgraph induced by `verts`; vertex `verts[i]` becomes `i`.
    pub fn induced_subgraph(&self, verts: &[usize]) -> Graph {
        let mut h = Graph::new(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    h.add_edge(i, j);
                }
            }
        }
        h
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_mask();
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Applies `perm`: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        let mut h = Graph::new(self.n);
        for (u, v) in self.edges() {
            h.add_edge(perm[u], perm[v]);
        }
        h
    }

    /// Connected components, each sorted ascending, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen >> s & 1 == 1 {
                continue;
            }
            let comp = self.component_mask(s);
            seen |= comp;
            comps.push(bits(comp).collect());
        }
        comps
    }

    /// Vertex set of the component containing `s`.
    pub fn component_mask(&self, s: usize) -> u64 {
        let mut comp = 1u64 << s;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().len()
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_mask(0) == self.vertex_mask()
    }

    /// A graph is a forest iff `|E| = n - ω`.
    pub fn is_forest(&self) -> bool {
        self.edge_count() + self.component_count() == self.n
    }

    pub fn is_regular(&self) -> bool {
        self.max_degree() == self.min_degree()
    }

    /// Order of a largest independent set.
    pub fn independence_number(&self) -> usize {
        self.max_independent_set().count_ones() as usize
    }

    /// A largest independent set, as a bitmask.
    pub fn max_independent_set(&self) -> u64 {
        let mut best = 0u64;
        mis_branch(&self.adj, self.vertex_mask(), 0, &mut best);
        best
    }

    /// Whether `mask` is an independent set.
    pub fn is_independent(&self, mask: u64) -> bool {
        bits(mask).all(|v| self.adj[v] & mask == 0)
    }

    /// Whether `mask` induces a clique.
    pub fn is_clique(&self, mask: u64) -> bool {
        bits(mask).all(|v| (self.adj[v] | 1 << v) & mask == mask)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n);
        }
        g
    }

    /// `self` padded with `k` isolated vertices.
    pub fn with_isolates(&self, k: usize) -> Graph {
        self.disjoint_union(&Graph::new(k))
    }

    /// Graph on `n` vertices whose vertex `map[i]` carries vertex `i` of
    /// `self`. Vertices not hit by `map` are isolated.
    pub fn lift(&self, n: usize, map: &[usize]) -> Graph {
        let mut g = Graph::new(n);
        for (u, v) in self.edges() {
            g.add_edge(map[u], map[v]);
        }
        g
    }

    /// Whether `self` and `other` are edge-disjoint.
    pub fn is_edge_disjoint(&self, other: &Graph) -> bool {
        self.n == other.n && (0..self.n).all(|v| self.adj[v] & other.adj[v] == 0)
    }

    /// Edge union of two graphs of the same order.
    pub fn union(&self, other: &Graph) -> Graph {
        debug_assert_eq!(self.n, other.n);
        Graph { n: self.n, adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a | b).collect() }
    }

    /// Edges of `self` not in `other`.
    pub fn difference(&self, other: &Graph) -> Graph {
        debug_assert_eq!(self.n, other.n);
        Graph { n: self.n, adj: self.adj.iter().zip(&other.adj).map(|(a, b)| a & !b).collect() }
    }
}

fn mis_branch(adj: &[u64], cand: u64, chosen: u64, best: &mut u64) {
    if cand == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    // Vertices with at most one candidate neighbor can always be taken.
    if let Some(v) = bits(cand).find(|&v| (adj[v] & cand).count_ones() <= 1) {
        mis_branch(adj, cand & !adj[v] & !(1 << v), chosen | 1 << v, best);
        return;
    }
    let v = bits(cand).max_by_key(|&v| (adj[v] & cand).count_ones()).unwrap();
    mis_branch(adj, cand & !adj[v] & !(1 << v), chosen | 1 << v, best);
    mis_branch(adj, cand & !(1 << v), chosen, best);
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&graph6_encode(self))
    }
}

/// Serialized as its graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&graph6_encode(self))
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        graph6_decode(&text).map_err(serde::de::Error::custom)
    }
}
