use super::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::{bits, Graph};
use crate::search::{find_embedding, EmbedOutcome, Meter};

/// Injective map carrying the edges of forest `f` onto edges of `g`;
/// `map[v]` is the image of `v`. When `δ(g) ≥ |E(f)|` and `g` has at least
/// as many vertices as `f`, such a map always exists.
pub fn forest_embed(f: &Graph, g: &Graph) -> Result<Vec<usize>> {
    forest_embed_with_budget(f, g, &SearchBudget::default())
}

pub fn forest_embed_with_budget(f: &Graph, g: &Graph, budget: &SearchBudget) -> Result<Vec<usize>> {
    if !f.is_forest() {
        return Err(Error::NotAForest);
    }
    if f.order() > g.order() {
        return Err(Error::NoEmbedding);
    }
    if let Some(map) = greedy(f, g) {
        return Ok(map);
    }
    let mut meter = Meter::new(budget);
    match find_embedding(f, g, &mut meter) {
        EmbedOutcome::Found(map) => Ok(map),
        EmbedOutcome::NotFound => Err(Error::NoEmbedding),
        EmbedOutcome::OutOfBudget => Err(Error::BudgetExhausted),
    }
}

/// Tree by tree, largest first: breadth-first from a root, each child on
/// an unused neighbor of its parent's image.
fn greedy(f: &Graph, g: &Graph) -> Option<Vec<usize>> {
    let mut trees = f.components();
    trees.sort_by_key(|t| std::cmp::Reverse(t.len()));
    let mut map = vec![usize::MAX; f.order()];
    let mut used = 0u64;
    for tree in trees {
        let root = tree[0];
        let image = bits(g.vertex_mask() & !used).max_by_key(|&h| (g.degree(h), std::cmp::Reverse(h)))?;
        map[root] = image;
        used |= 1 << image;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(p) = queue.pop_front() {
            for c in f.neighbors(p) {
                if map[c] != usize::MAX {
                    continue;
                }
                let free = g.neighbor_mask(map[p]) & !used;
                let image = bits(free).max_by_key(|&h| ((g.neighbor_mask(h) & !used).count_ones(), std::cmp::Reverse(h)))?;
                map[c] = image;
                used |= 1 << image;
                queue.push_back(c);
            }
        }
    }
    Some(map)
}
