use super::SearchBudget;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{search_realizations, Flow, Meter, Outcome, Symmetry, Targets};

/// Spanning subgraph of `g` in which vertex `v` has degree `f[v]`.
pub fn find_f_factor(g: &Graph, f: &[usize]) -> Result<Graph> {
    find_f_factor_with_budget(g, f, &SearchBudget::default())
}

pub fn find_f_factor_with_budget(g: &Graph, f: &[usize], budget: &SearchBudget) -> Result<Graph> {
    if f.len() != g.order() {
        return Err(Error::SizeMismatch(f.len(), g.order()));
    }
    if f.iter().sum::<usize>() % 2 == 1 {
        return Err(Error::ParityViolation);
    }
    if f.iter().enumerate().any(|(v, &d)| d > g.degree(v)) {
        return Err(Error::Infeasible);
    }
    let mut meter = Meter::new(budget);
    let mut found = None;
    let out = search_realizations(g, Targets::Fixed(f.to_vec()), Symmetry::Existence, &mut meter, &mut |h| {
        found = Some(h.clone());
        Flow::Stop
    });
    match (found, out) {
        (Some(h), _) => Ok(h),
        (None, Outcome::OutOfBudget) => Err(Error::BudgetExhausted),
        (None, _) => Err(Error::Infeasible),
    }
}
