//! Dominating cliques.

use crate::graph::{bits, Graph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominatingCliqueWitness {
    pub clique: Vec<usize>,
}

impl DominatingCliqueWitness {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let k = self.clique.iter().fold(0u64, |m, &v| m | 1 << v);
        g.is_clique(k) && dominated(g, k) == g.vertex_mask()
    }
}

fn dominated(g: &Graph, set: u64) -> u64 {
    bits(set).fold(set, |m, v| m | g.neighbor_mask(v))
}

/// Smallest dominating clique, lexicographically first among equals.
pub fn has_dominating_clique(g: &Graph) -> Option<DominatingCliqueWitness> {
    let all = g.vertex_mask();
    // Cliques of the current size, each in increasing vertex order.
    let mut level: Vec<(u64, usize)> = vec![(0, 0)];
    loop {
        if let Some(&(k, _)) = level.iter().find(|(k, _)| dominated(g, *k) == all) {
            return Some(DominatingCliqueWitness { clique: bits(k).collect() });
        }
        let mut next = Vec::new();
        for &(k, from) in &level {
            let common = bits(k).fold(all, |m, v| m & g.neighbor_mask(v));
            for v in bits(common & !crate::graph::low_bits(from)) {
                next.push((k | 1 << v, v + 1));
            }
        }
        if next.is_empty() {
            return None;
        }
        level = next;
    }
}
