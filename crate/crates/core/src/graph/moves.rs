//! Realization-preserving moves: edge exchanges and vertex interchanges.

use super::Graph;
use crate::error::{Error, ExchangeDefect, Result};

/// Exchange of edges `vx`, `uy` for non-edges `vy`, `ux`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeExchangeSpec {
    pub x: usize,
    pub y: usize,
    pub u: usize,
    pub v: usize,
}

impl EdgeExchangeSpec {
    pub fn new(x: usize, y: usize, u: usize, v: usize) -> Self {
        EdgeExchangeSpec { x, y, u, v }
    }

    /// Checks the four incidence conditions against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let EdgeExchangeSpec { x, y, u, v } = *self;
        let n = g.order();
        if [x, y, u, v].iter().any(|&a| a >= n) {
            return Err(Error::InvalidExchange(ExchangeDefect::VertexOutOfRange));
        }
        let q = [x, y, u, v];
        if (0..4).any(|i| (i + 1..4).any(|j| q[i] == q[j])) {
            return Err(Error::InvalidExchange(ExchangeDefect::VerticesNotDistinct));
        }
        let defect = if !g.has_edge(v, x) {
            Some(ExchangeDefect::VxNotAnEdge)
        } else if !g.has_edge(u, y) {
            Some(ExchangeDefect::UyNotAnEdge)
        } else if g.has_edge(v, y) {
            Some(ExchangeDefect::VyAlreadyAnEdge)
        } else if g.has_edge(u, x) {
            Some(ExchangeDefect::UxAlreadyAnEdge)
        } else {
            None
        };
        defect.map_or(Ok(()), |d| Err(Error::InvalidExchange(d)))
    }
}

/// `E(g) - {vx, uy} + {vy, ux}`; every vertex keeps its degree.
pub fn edge_exchange(g: &Graph, spec: EdgeExchangeSpec) -> Result<Graph> {
    spec.validate(g)?;
    let EdgeExchangeSpec { x, y, u, v } = spec;
    let mut h = g.clone();
    h.remove_edge(v, x);
    h.remove_edge(u, y);
    h.add_edge(v, y);
    h.add_edge(u, x);
    Ok(h)
}

/// Swaps the roles of `u` and `v`: `N_H(u) = N_G(v)` and `N_H(v) = N_G(u)`,
/// with `u` and `v` exchanged inside the transplanted neighborhoods. This is
/// relabeling by the transposition `(u v)`, so an edge `uv` stays put and the
/// result is again simple.
pub fn vertex_interchange(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let n = g.order();
    if u >= n {
        return Err(Error::VertexOutOfRange(u));
    }
    if v >= n {
        return Err(Error::VertexOutOfRange(v));
    }
    if u == v {
        return Ok(g.clone());
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.swap(u, v);
    Ok(g.relabel(&perm))
}

/// Edges common to both graphs: the `(g1, g2)`-bad pairs.
pub fn bad_pairs(g1: &Graph, g2: &Graph) -> Result<Vec<(usize, usize)>> {
    if g1.order() != g2.order() {
        return Err(Error::SizeMismatch(g1.order(), g2.order()));
    }
    Ok(g1.edges().filter(|&(u, v)| g2.has_edge(u, v)).collect())
}

/// `b(g1, g2)` without allocating.
pub(crate) fn bad_pair_count(g1: &Graph, g2: &Graph) -> usize {
    (0..g1.order())
        .map(|v| (g1.neighbor_mask(v) & g2.neighbor_mask(v)).count_ones() as usize)
        .sum::<usize>()
        / 2
}
