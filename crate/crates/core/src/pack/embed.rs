use super::{same_order, Mode, PackingResult, SearchBudget, Stats, Status};
use crate::error::Result;
use crate::graph::Graph;
use crate::search::{find_embedding, EmbedOutcome, Meter};

/// Places a copy of `g1` inside the complement of `g2` by backtracking
/// subgraph search.
pub fn pack_embed(g1: &Graph, g2: &Graph, budget: &SearchBudget) -> Result<PackingResult> {
    same_order(g1, g2)?;
    let mut meter = Meter::new(budget);
    let host = g2.complement();
    let out = find_embedding(g1, &host, &mut meter);
    let stats = Stats::of(&meter);
    Ok(match out {
        EmbedOutcome::Found(map) => PackingResult::packed(Mode::Embed, g1.relabel(&map), stats),
        EmbedOutcome::NotFound => PackingResult::without_witness(Mode::Embed, Status::Unpackable, stats),
        EmbedOutcome::OutOfBudget => PackingResult::without_witness(Mode::Embed, Status::BudgetExhausted, stats),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognize::*;

    #[test]
    fn examples() {
        let b = SearchBudget::default();
        let r = pack_embed(&Graph::new(5), &build_complete(5), &b).unwrap();
        assert_eq!(r.status, Status::Packed);
        assert_eq!(r.witness.unwrap().edge_count(), 0);
        let three_k2 = build_disjoint_copies(3, &build_complete(2));
        let r = pack_embed(&three_k2, &build_complete_bipartite(3, 3), &b).unwrap();
        assert_eq!(r.status, Status::Unpackable);
        let c5 = build_cycle_edges(5).unwrap();
        assert!(pack_embed(&c5, &c5, &b).unwrap().is_packed());
        assert!(pack_embed(&c5, &Graph::new(4), &b).is_err());
    }

    #[test]
    fn tiny_budget_is_reported() {
        let b = SearchBudget::new(3, std::time::Duration::from_secs(5)).unwrap();
        let g = build_cycle_edges(8).unwrap();
        let r = pack_embed(&g, &g, &b).unwrap();
        assert_eq!(r.status, Status::BudgetExhausted);
        assert!(r.witness.is_none());
    }
}
