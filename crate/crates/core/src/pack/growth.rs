use super::{pack_sequence, Mode, PackingResult, SearchBudget, Stats};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Packs a `k`-regular graph with `g2[x_set]` by stacking factors of
/// degree at most 3 (degree 1 only when `k = 1`), each found in the complement of everything placed so
/// far. If growth stalls, the exact sequence solver decides. The witness
/// lives on `V(g2)`.
pub fn pack_regular_by_factor_growth(g1_positive: &Graph, g2: &Graph, x_set: &[usize]) -> Result<PackingResult> {
    grow(g1_positive, g2, x_set, &SearchBudget::default()).map(|(r, _)| r)
}

/// Also reports whether factor growth alone produced the witness.
pub(crate) fn grow(g1_positive: &Graph, g2: &Graph, x_set: &[usize], budget: &SearchBudget) -> Result<(PackingResult, bool)> {
    if !g1_positive.is_regular() {
        return Err(Error::NotRegular);
    }
    if x_set.len() != g1_positive.order() {
        return Err(Error::SizeMismatch(g1_positive.order(), x_set.len()));
    }
    if let Some(&v) = x_set.iter().find(|&&v| v >= g2.order()) {
        return Err(Error::VertexOutOfRange(v));
    }
    let m = x_set.len();
    let k = if m == 0 { 0 } else { g1_positive.degree(0) };
    let local = g2.induced_subgraph(x_set);
    let mut placed = Graph::new(m);
    let mut r = 0;
    let mut stats = Stats::default();
    while r < k {
        // A lone 1-factor is the step most likely to be missing, so 4 is
        // split as 2 + 2 rather than 3 + 1.
        let step = if k - r == 4 { 2 } else { 3.min(k - r) };
        let host = local.union(&placed).complement();
        let started = std::time::Instant::now();
        match super::find_f_factor_with_budget(&host, &vec![step; m], budget) {
            Ok(factor) => {
                placed = placed.union(&factor);
                r += step;
            }
            Err(Error::Infeasible | Error::ParityViolation | Error::BudgetExhausted) => break,
            Err(e) => return Err(e),
        }
        stats.millis += started.elapsed().as_millis() as u64;
    }
    if r == k {
        return Ok((PackingResult::packed(Mode::Sequence, placed.lift(g2.order(), x_set), stats), true));
    }
    let exact = pack_sequence(g1_positive, &local, budget)?;
    let witness = exact.witness.map(|w| w.lift(g2.order(), x_set));
    Ok((PackingResult { status: exact.status, witness, mode: Mode::Sequence, stats: stats.add(exact.stats) }, false))
}
