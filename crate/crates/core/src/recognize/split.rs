//! Split graphs: a clique plus an independent set.

use super::maximal_cliques;
use crate::graph::{bits, Graph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitWitness {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl SplitWitness {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.clique.iter().fold(0u64, |m, &v| m | 1 << v);
        let i = self.independent.iter().fold(0u64, |m, &v| m | 1 << v);
        k & i == 0
            && (k | i) == g.vertex_mask()
            && self.clique.len() + self.independent.len() == g.order()
            && g.is_clique(k)
            && g.is_independent(i)
    }
}

/// A clique/independent partition of `g`, if `g` is split.
///
/// Some partition always uses a maximal clique, so trying each maximal
/// clique is exact. A clique vertex with no neighbor on the independent
/// side is moved across when that side is non-empty.
pub fn is_split(g: &Graph) -> Option<SplitWitness> {
    let all = g.vertex_mask();
    let mut cliques = maximal_cliques(g);
    cliques.sort_unstable_by(|a, b| b.count_ones().cmp(&a.count_ones()).then(a.cmp(b)));
    let clique = cliques.into_iter().find(|&k| g.is_independent(all & !k))?;
    let mut independent = all & !clique;
    let mut clique = clique;
    if independent != 0 {
        if let Some(v) = bits(clique).filter(|&v| g.neighbor_mask(v) & independent == 0).last() {
            clique &= !(1 << v);
            independent |= 1 << v;
        }
    }
    Some(SplitWitness { clique: bits(clique).collect(), independent: bits(independent).collect() })
}
