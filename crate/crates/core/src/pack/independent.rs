use super::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::{edge_exchange, havel_hakimi_realize, DegreeSequence, EdgeExchangeSpec, Graph};
use crate::search::{search_realizations, Flow, Meter, Outcome, Symmetry, Targets};

/// A realization of `seq` with an independent set of size `k`.
///
/// Starts from Havel–Hakimi and merges cycle and complete components into
/// neighboring ones by single edge exchanges; if that does not reach `k`,
/// every realization is searched.
pub fn realization_with_independent_set(seq: &DegreeSequence, k: usize) -> Result<Graph> {
    let mut h = havel_hakimi_realize(seq)?;
    for _ in 0..seq.len() {
        if h.independence_number() >= k {
            return Ok(h);
        }
        match merge_once(&h) {
            Some(next) => h = next,
            None => break,
        }
    }
    let n = seq.len();
    let mut meter = Meter::new(&SearchBudget::default());
    let mut found = None;
    let out = search_realizations(
        &Graph::new(n).complement(),
        Targets::Multiset(seq.terms().to_vec()),
        Symmetry::Isomorphic,
        &mut meter,
        &mut |g| {
            if g.independence_number() >= k {
                found = Some(g.clone());
                Flow::Stop
            } else {
                Flow::Continue
            }
        },
    );
    match (found, out) {
        (Some(g), _) => Ok(g),
        (None, Outcome::OutOfBudget) => Err(Error::BudgetExhausted),
        (None, _) => Err(Error::NotAchievable),
    }
}

/// Joins a regular component that is a cycle or a clique to another
/// non-trivial component: exchange edges `vv'` and `ww'` for `vw` and `v'w'`.
fn merge_once(h: &Graph) -> Option<Graph> {
    let comps: Vec<Vec<usize>> = h.components().into_iter().filter(|c| c.len() > 1).collect();
    if comps.len() < 2 {
        return None;
    }
    let extremal = |c: &[usize]| {
        let sub = h.induced_subgraph(c);
        let d = sub.max_degree();
        c.len() >= 3 && sub.is_regular() && (d == 2 || d + 1 == c.len())
    };
    let ci = comps.iter().position(|c| extremal(c))?;
    let other = comps.iter().enumerate().find(|(j, _)| *j != ci).map(|(_, c)| c)?;
    let (v, v2) = h.edges().find(|&(a, _)| comps[ci].contains(&a))?;
    let (w, w2) = h.edges().find(|&(a, _)| other.contains(&a))?;
    // Edges v-v2 and w-w2 out; v-w and v2-w2 in.
    edge_exchange(h, EdgeExchangeSpec { v, x: v2, u: w2, y: w }).ok()
}
