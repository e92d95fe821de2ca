//! Hypothesis checkers. All arithmetic is exact on `i64`; rational
//! inequalities are cross-multiplied.

use super::decompose::{dominating_clique_decomposition, matching_split, tree_split, unigraph_decomposition};
use super::TheoremId;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pack::{find_f_factor, pack_component_wise, SearchBudget, Status};
use crate::recognize::is_split;
use crate::search::{search_realizations, Flow, Meter, Symmetry, Targets};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Relation {
    #[serde(rename = "<=")]
    Le,
    #[serde(rename = "<")]
    Lt,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = ">")]
    Gt,
    #[serde(rename = "==")]
    Eq,
}

impl Relation {
    fn eval(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Le => lhs <= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Gt => lhs > rhs,
            Relation::Eq => lhs == rhs,
        }
    }
}

/// One named condition, `lhs relation rhs`. Yes/no conditions are encoded
/// as `0|1 == 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Clause {
    pub name: String,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub holds: bool,
}

impl Clause {
    pub fn compare(name: &str, lhs: i64, relation: Relation, rhs: i64) -> Self {
        Clause { name: name.to_string(), lhs, relation, rhs, holds: relation.eval(lhs, rhs) }
    }

    pub fn flag(name: &str, value: bool) -> Self {
        Clause::compare(name, value as i64, Relation::Eq, 1)
    }
}

/// Parameters of the pair. `delta_plus` and `g_value` are absent when the
/// first graph has no edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Quantities {
    pub n: i64,
    pub delta1: i64,
    pub delta2: i64,
    pub min_degree1: i64,
    pub delta_plus: Option<i64>,
    pub g_value: Option<i64>,
    pub min_delta: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub theorem: TheoremId,
    pub clauses: Vec<Clause>,
    pub quantities: Quantities,
    pub satisfied: bool,
}

impl HypothesisReport {
    pub fn clause(&self, name: &str) -> Option<&Clause> {
        self.clauses.iter().find(|c| c.name == name)
    }
}

fn quantities(g1: &Graph, g2: &Graph) -> Result<Quantities> {
    if g1.order() != g2.order() {
        return Err(Error::SizeMismatch(g1.order(), g2.order()));
    }
    Ok(loose_quantities(g1, g2))
}

/// Like [`quantities`] but with `n = |V(g2)|` and no order check.
fn loose_quantities(g1: &Graph, g2: &Graph) -> Quantities {
    let (d1, d2) = (g1.max_degree() as i64, g2.max_degree() as i64);
    let delta_plus = g1.delta_plus().ok().map(|d| d as i64);
    Quantities {
        n: g2.order() as i64,
        delta1: d1,
        delta2: d2,
        min_degree1: g1.min_degree() as i64,
        delta_plus,
        g_value: delta_plus.map(|dp| g_value(d1, d2, dp)),
        min_delta: d1.min(d2),
    }
}

/// Slack term of the half-BEC bound: zero when the maximum degree equals
/// the minimum positive degree, `Δ2 − 1` otherwise.
pub fn g_value(delta1: i64, delta2: i64, delta_plus: i64) -> i64 {
    if delta1 == delta_plus {
        0
    } else {
        delta2 - 1
    }
}

fn product(q: &Quantities) -> i64 {
    (q.delta1 + 1) * (q.delta2 + 1)
}

fn report(theorem: TheoremId, clauses: Vec<Clause>, quantities: Quantities, satisfied: bool) -> HypothesisReport {
    HypothesisReport { theorem, clauses, quantities, satisfied }
}

/// `(Δ1+1)(Δ2+1) ≤ n+1`.
pub fn check_bec(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let c = Clause::compare("(d1+1)(d2+1) <= n+1", product(&q), Relation::Le, q.n + 1);
    let ok = c.holds;
    Ok(report(TheoremId::Bec, vec![c], q, ok))
}

/// `(Δ1+1)(Δ2+1) ≤ n+1+min(Δ1,Δ2)+g`. An edgeless first graph is
/// trivially fine.
pub fn check_main(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let Some(g) = q.g_value else {
        let c = Clause::flag("g1 edgeless", true);
        return Ok(report(TheoremId::BecHalf, vec![c], q, true));
    };
    let c = Clause::compare("(d1+1)(d2+1) <= n+1+min(d1,d2)+g", product(&q), Relation::Le, q.n + 1 + q.min_delta + g);
    let ok = c.holds;
    Ok(report(TheoremId::BecHalf, vec![c], q, ok))
}

/// `(Δ1+1)(Δ2+1) ≤ n+min(Δ1,Δ2)`, or, when the positive part of `g1` is
/// not regular, `≤ n+min(Δ1+Δ2, 2Δ2)`.
pub fn check_cor4(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let p = product(&q);
    let first = Clause::compare("(d1+1)(d2+1) <= n+min(d1,d2)", p, Relation::Le, q.n + q.min_delta);
    let irregular = g1.positive_part().map(|h| !h.is_regular()).unwrap_or(false);
    let flag = Clause::flag("positive part of g1 not regular", irregular);
    let second = Clause::compare(
        "(d1+1)(d2+1) <= n+min(d1+d2,2*d2)",
        p,
        Relation::Le,
        q.n + (q.delta1 + q.delta2).min(2 * q.delta2),
    );
    let ok = first.holds || (flag.holds && second.holds);
    Ok(report(TheoremId::Cor4, vec![first, flag, second], q, ok))
}

/// `δ1 ≥ 1`, `n ≥ (δ1+Δ1)(Δ2+1)/δ1` and `n > (δ1+Δ1)(δ1+Δ1−3)/δ1`.
pub fn check_katerinis(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let (lo, hi) = (q.min_degree1, q.delta1);
    let clauses = vec![
        Clause::compare("min degree of g1 >= 1", lo, Relation::Ge, 1),
        Clause::compare("n*m1 >= (m1+d1)(d2+1)", q.n * lo, Relation::Ge, (lo + hi) * (q.delta2 + 1)),
        Clause::compare("n*m1 > (m1+d1)(m1+d1-3)", q.n * lo, Relation::Gt, (lo + hi) * (lo + hi - 3)),
    ];
    let ok = clauses.iter().all(|c| c.holds);
    Ok(report(TheoremId::Katerinis, clauses, q, ok))
}

/// Positive part of `g1` must be `k`-regular with `k ≥ 1`; then
/// `|G1+| ≥ 2Δ2 + 2(k−1)`. The flag `|G1+| = 2Δ2` marks where the
/// matching exceptions may apply.
pub fn check_theorem5_hypothesis(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let plus = g1.positive_part()?;
    if !plus.is_regular() {
        return Err(Error::NotRegular);
    }
    let k = plus.max_degree() as i64;
    let m = plus.order() as i64;
    let clauses = vec![
        Clause::compare("|G1+| >= 2*d2+2(k-1)", m, Relation::Ge, 2 * q.delta2 + 2 * (k - 1)),
        Clause::flag("|G1+| == 2*d2", m == 2 * q.delta2),
    ];
    let ok = clauses[0].holds;
    Ok(report(TheoremId::Thm5, clauses, q, ok))
}

/// `(Δ1+1)(Δ2+1) ≤ n + min(Δ1+kΔ2, k+(k+1)Δ2)`, `|G1+| ≥ 2(Δ1+Δ2)−1`,
/// and some realization of the positive part's sequence has a `k`-factor.
pub fn check_theorem7_hypothesis(g1: &Graph, g2: &Graph, k: usize) -> Result<HypothesisReport> {
    if k == 0 {
        return Err(Error::BadParameter("k must be at least 1".into()));
    }
    let q = quantities(g1, g2)?;
    let plus = g1.positive_part()?;
    let ki = k as i64;
    let bound = (q.delta1 + ki * q.delta2).min(ki + (ki + 1) * q.delta2);
    let size = Clause::compare("|G1+| >= 2(d1+d2)-1", plus.order() as i64, Relation::Ge, 2 * (q.delta1 + q.delta2) - 1);
    let degree = Clause::compare("(d1+1)(d2+1) <= n+min(d1+k*d2,k+(k+1)d2)", product(&q), Relation::Le, q.n + bound);
    let factor = Clause::flag("some realization of pi(G1+) has a k-factor", realization_with_k_factor(&plus, k).is_some());
    let ok = size.holds && degree.holds && factor.holds;
    Ok(report(TheoremId::Thm7, vec![degree, size, factor], q, ok))
}

/// `g1` is a forest, `g2` has at least as many vertices, and
/// `δ(g2) ≥ |E(g1)|`. The orders may differ.
pub fn check_forest_embed(g1: &Graph, g2: &Graph) -> HypothesisReport {
    let q = loose_quantities(g1, g2);
    let clauses = vec![
        Clause::flag("g1 is a forest", g1.is_forest()),
        Clause::compare("|V(g2)| >= |V(g1)|", g2.order() as i64, Relation::Ge, g1.order() as i64),
        Clause::compare("min degree of g2 >= |E(g1)|", g2.min_degree() as i64, Relation::Ge, g1.edge_count() as i64),
    ];
    let ok = clauses.iter().all(|c| c.holds);
    report(TheoremId::ForestEmbed, clauses, q, ok)
}

fn bec_clause(q: &Quantities) -> Clause {
    Clause::compare("(d1+1)(d2+1) <= n+1", product(q), Relation::Le, q.n + 1)
}

/// With the tree components as the forest `F`: `ω(F) ≥ Δ2+1`, and the
/// remaining core, padded with `|F|` isolates, packs component-wise.
pub fn check_lemma9(g1: &Graph, g2: &Graph, budget: &SearchBudget) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let d = tree_split(g1);
    let trees = Clause::compare("forest components >= d2+1", d.forest_components(g1) as i64, Relation::Ge, q.delta2 + 1);
    let mut clauses = vec![trees];
    if clauses[0].holds {
        let padded = d.core_graph(g1).with_isolates(d.forest.len());
        let r = pack_component_wise(&padded, g2, budget)?;
        if r.status == Status::BudgetExhausted {
            return Err(Error::BudgetExhausted);
        }
        clauses.push(Clause::flag("core packs component-wise", r.is_packed()));
    }
    let ok = clauses.len() == 2 && clauses.iter().all(|c| c.holds);
    Ok(report(TheoremId::Lemma9, clauses, q, ok))
}

/// Conjectured bound plus a split into a dominating-clique core and a
/// forest with `ω(F) ≥ Δ2+1` or `|E(F)| ≤ 2Δ2−1`.
pub fn check_theorem10(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let bec = bec_clause(&q);
    let split = Clause::flag(
        "dominating-clique core plus forest",
        dominating_clique_decomposition(g1, q.delta2 as usize).is_some(),
    );
    let ok = bec.holds && split.holds;
    Ok(report(TheoremId::Thm10, vec![bec, split], q, ok))
}

/// Conjectured bound plus a split into a unigraph and a forest with
/// `ω(F) ≥ Δ2+1` or `|E(F)| ≤ 2Δ2−1`.
pub fn check_theorem12(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let bec = bec_clause(&q);
    let mut clauses = vec![bec];
    if clauses[0].holds {
        let found = unigraph_decomposition(g1, q.delta2 as usize)?.is_some();
        clauses.push(Clause::flag("unigraph core plus forest", found));
    }
    let ok = clauses.len() == 2 && clauses.iter().all(|c| c.holds);
    Ok(report(TheoremId::Thm12, clauses, q, ok))
}

/// Conjectured bound, with components on at most two vertices forming `M`
/// and `|M| ≥ 2Δ2+1`.
pub fn check_large_matching(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let m = matching_split(g1).forest.len() as i64;
    let clauses = vec![bec_clause(&q), Clause::compare("|M| >= 2*d2+1", m, Relation::Ge, 2 * q.delta2 + 1)];
    let ok = clauses.iter().all(|c| c.holds);
    Ok(report(TheoremId::LargeMatching, clauses, q, ok))
}

/// Conjectured bound, with the components on three or more vertices
/// forming a split graph.
pub fn check_split(g1: &Graph, g2: &Graph) -> Result<HypothesisReport> {
    let q = quantities(g1, g2)?;
    let core = matching_split(g1).core_graph(g1);
    let clauses = vec![bec_clause(&q), Clause::flag("core is split", is_split(&core).is_some())];
    let ok = clauses.iter().all(|c| c.holds);
    Ok(report(TheoremId::Split, clauses, q, ok))
}

/// Dispatches on `theorem`. For `thm7` without `k`, the smallest `k`
/// that satisfies the hypothesis is used (or `k = 1` when none does).
pub fn check_theorem(theorem: TheoremId, g1: &Graph, g2: &Graph, k: Option<usize>) -> Result<HypothesisReport> {
    match theorem {
        TheoremId::Bec | TheoremId::Problem1 => {
            let mut r = check_bec(g1, g2)?;
            r.theorem = theorem;
            Ok(r)
        }
        TheoremId::BecHalf => check_main(g1, g2),
        TheoremId::Cor4 => check_cor4(g1, g2),
        TheoremId::Katerinis => check_katerinis(g1, g2),
        TheoremId::Thm5 => check_theorem5_hypothesis(g1, g2),
        TheoremId::Thm7 => match k {
            Some(k) => check_theorem7_hypothesis(g1, g2, k),
            None => smallest_theorem7_k(g1, g2).map(|(_, r)| r),
        },
        TheoremId::ForestEmbed => Ok(check_forest_embed(g1, g2)),
        TheoremId::Lemma9 => check_lemma9(g1, g2, &SearchBudget::default()),
        TheoremId::Thm10 => check_theorem10(g1, g2),
        TheoremId::Thm12 => check_theorem12(g1, g2),
        TheoremId::LargeMatching => check_large_matching(g1, g2),
        TheoremId::Split => check_split(g1, g2),
    }
}

/// The smallest `k` whose hypothesis holds, else the report for `k = 1`.
pub(crate) fn smallest_theorem7_k(g1: &Graph, g2: &Graph) -> Result<(usize, HypothesisReport)> {
    let top = g1.delta_plus()?;
    let mut first = None;
    for k in 1..=top {
        let r = check_theorem7_hypothesis(g1, g2, k)?;
        if r.satisfied {
            return Ok((k, r));
        }
        first.get_or_insert((k, r));
    }
    Ok(first.expect("delta_plus is at least one"))
}

/// A realization of `g`'s degree sequence together with one of its
/// `k`-factors.
pub(crate) fn realization_with_k_factor(g: &Graph, k: usize) -> Option<(Graph, Graph)> {
    let n = g.order();
    let mut degrees = g.degrees();
    if degrees.iter().any(|&d| d < k) {
        return None;
    }
    degrees.sort_unstable_by(|a, b| b.cmp(a));
    let mut meter = Meter::new(&SearchBudget::default());
    let mut found = None;
    search_realizations(&Graph::new(n).complement(), Targets::Fixed(degrees), Symmetry::Isomorphic, &mut meter, &mut |h| {
        match find_f_factor(h, &vec![k; n]) {
            Ok(f) => {
                found = Some((h.clone(), f));
                Flow::Stop
            }
            Err(_) => Flow::Continue,
        }
    });
    found
}
