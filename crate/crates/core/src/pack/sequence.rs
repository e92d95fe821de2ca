use super::{same_order, Mode, PackingResult, SearchBudget, Stats, Status};
use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, Graph};
use crate::search::{search_realizations, Flow, Meter, Outcome, Symmetry, Targets};

/// Looks for a realization of `g1`'s degree sequence inside the complement
/// of `g2`.
pub fn pack_sequence(g1: &Graph, g2: &Graph, budget: &SearchBudget) -> Result<PackingResult> {
    same_order(g1, g2)?;
    pack_sequence_into(&DegreeSequence::of(g1), g2, budget)
}

/// Looks for a realization of `seq` edge-disjoint from `g2`. `seq` must
/// have one term per vertex of `g2`.
pub fn pack_sequence_into(seq: &DegreeSequence, g2: &Graph, budget: &SearchBudget) -> Result<PackingResult> {
    if seq.len() != g2.order() {
        return Err(Error::SizeMismatch(seq.len(), g2.order()));
    }
    let mut meter = Meter::new(budget);
    let host = g2.complement();
    let mut found = None;
    let out = if seq.is_graphical() {
        search_realizations(&host, Targets::Multiset(seq.terms().to_vec()), Symmetry::Existence, &mut meter, &mut |h| {
            found = Some(h.clone());
            Flow::Stop
        })
    } else {
        Outcome::Exhausted
    };
    let stats = Stats::of(&meter);
    Ok(match (out, found) {
        (_, Some(h)) => PackingResult::packed(Mode::Sequence, h, stats),
        (Outcome::OutOfBudget, None) => PackingResult::without_witness(Mode::Sequence, Status::BudgetExhausted, stats),
        _ => PackingResult::without_witness(Mode::Sequence, Status::Unpackable, stats),
    })
}
