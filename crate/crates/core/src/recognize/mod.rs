//! Recognizers for the special graph classes packing results refer to.

mod builders;
mod domination;
mod exceptions;
mod split;
mod unigraph;

pub use builders::*;
pub use domination::{has_dominating_clique, DominatingCliqueWitness};
pub use exceptions::{match_exceptions, ExceptionKind};
pub use split::{is_split, SplitWitness};
pub use unigraph::{is_unigraph, is_unigraph_with_cap, UNIGRAPH_ORDER_CAP};

use crate::graph::{bits, Graph};

/// Maximal cliques as bitmasks, by Bron–Kerbosch with pivoting.
pub(crate) fn maximal_cliques(g: &Graph) -> Vec<u64> {
    fn expand(g: &Graph, r: u64, mut p: u64, mut x: u64, out: &mut Vec<u64>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = bits(p | x).max_by_key(|&u| (g.neighbor_mask(u) & p).count_ones()).unwrap();
        for v in bits(p & !g.neighbor_mask(pivot)) {
            let nv = g.neighbor_mask(v);
            expand(g, r | 1 << v, p & nv, x & nv, out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    if g.order() == 0 {
        out.push(0);
    } else {
        expand(g, 0, g.vertex_mask(), 0, &mut out);
    }
    out
}

/// Some clique of `g` with exactly `k` vertices, if one exists.
pub(crate) fn find_clique(g: &Graph, k: usize) -> Option<u64> {
    maximal_cliques(g).into_iter().find(|c| c.count_ones() as usize >= k).map(|c| {
        bits(c).take(k).fold(0u64, |m, v| m | 1 << v)
    })
}
