//! Splitting the first graph into a core and a forest part.
//!
//! Components are never cut: the forest part is a union of tree components
//! (isolated vertices included), the core is the rest.

use crate::error::Result;
use crate::graph::Graph;
use crate::recognize::{has_dominating_clique, is_unigraph};
use serde::{Deserialize, Serialize};

/// Vertex partition of `g1` into `core` and `forest`, each a union of
/// whole components, both sorted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub core: Vec<usize>,
    pub forest: Vec<usize>,
}

impl Decomposition {
    fn from_parts(core: &[&Vec<usize>], forest: &[&Vec<usize>]) -> Self {
        let flat = |parts: &[&Vec<usize>]| {
            let mut v: Vec<usize> = parts.iter().flat_map(|c| c.iter().copied()).collect();
            v.sort_unstable();
            v
        };
        Decomposition { core: flat(core), forest: flat(forest) }
    }

    pub fn core_graph(&self, g: &Graph) -> Graph {
        g.induced_subgraph(&self.core)
    }

    pub fn forest_graph(&self, g: &Graph) -> Graph {
        g.induced_subgraph(&self.forest)
    }

    /// Number of trees in the forest part.
    pub fn forest_components(&self, g: &Graph) -> usize {
        self.forest_graph(g).component_count()
    }

    pub fn forest_edges(&self, g: &Graph) -> usize {
        self.forest_graph(g).edge_count()
    }
}

/// `ω(F) ≥ Δ2+1` or `|E(F)| ≤ 2Δ2−1`.
pub fn forest_condition(components: usize, edges: usize, delta2: usize) -> bool {
    components > delta2 || edges < 2 * delta2
}

fn split_components(g: &Graph) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    g.components().into_iter().partition(|c| g.induced_subgraph(c).is_forest())
}

/// Every tree component goes to the forest part.
pub fn tree_split(g: &Graph) -> Decomposition {
    let (trees, others) = split_components(g);
    Decomposition::from_parts(&others.iter().collect::<Vec<_>>(), &trees.iter().collect::<Vec<_>>())
}

/// Components on at most two vertices form the forest part (a graph of
/// maximum degree at most one); everything else is the core.
pub fn matching_split(g: &Graph) -> Decomposition {
    let (small, large): (Vec<_>, Vec<_>) = g.components().into_iter().partition(|c| c.len() <= 2);
    Decomposition::from_parts(&large.iter().collect::<Vec<_>>(), &small.iter().collect::<Vec<_>>())
}

/// A core with a dominating clique plus a forest meeting
/// [`forest_condition`]. The core is connected or empty.
pub fn dominating_clique_decomposition(g: &Graph, delta2: usize) -> Option<Decomposition> {
    let (trees, others) = split_components(g);
    let candidates: Vec<Decomposition> = match others.len() {
        0 => std::iter::once(Decomposition::from_parts(&[], &trees.iter().collect::<Vec<_>>()))
            .chain((0..trees.len()).map(|i| {
                let rest: Vec<&Vec<usize>> = trees.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, t)| t).collect();
                Decomposition::from_parts(&[&trees[i]], &rest)
            }))
            .collect(),
        1 => vec![Decomposition::from_parts(&[&others[0]], &trees.iter().collect::<Vec<_>>())],
        _ => return None,
    };
    candidates.into_iter().find(|d| {
        has_dominating_clique(&d.core_graph(g)).is_some()
            && forest_condition(d.forest_components(g), d.forest_edges(g), delta2)
    })
}

/// A unigraph core plus a forest meeting [`forest_condition`]. Tree
/// components are moved into the core only when needed, fewest first.
pub fn unigraph_decomposition(g: &Graph, delta2: usize) -> Result<Option<Decomposition>> {
    let (trees, others) = split_components(g);
    let t = trees.len().min(16);
    let mut masks: Vec<u32> = (0..1u32 << t).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    for mask in masks {
        let mut core: Vec<&Vec<usize>> = others.iter().collect();
        let mut forest = Vec::new();
        for (i, tree) in trees.iter().enumerate() {
            if i < t && mask >> i & 1 == 1 {
                core.push(tree);
            } else {
                forest.push(tree);
            }
        }
        let d = Decomposition::from_parts(&core, &forest);
        if forest_condition(d.forest_components(g), d.forest_edges(g), delta2) && is_unigraph(&d.core_graph(g))? {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
