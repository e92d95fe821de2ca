//! Exhaustive confrontation of a statement with every small pair.
//!
//! Pairs are ordered pairs of isomorphism-class representatives of equal
//! order (the two graphs play different roles). Work is spread over a
//! dedicated thread pool; results are collected in instance order, so the
//! report does not depend on the worker count.

use super::hypotheses::{
    check_bec, check_cor4, check_forest_embed, check_katerinis, check_lemma9, check_main, check_theorem10,
    check_theorem12, check_theorem5_hypothesis, check_large_matching, check_split, smallest_theorem7_k,
};
use super::pipelines::{
    pipeline_large_matching, pipeline_lemma9, pipeline_split, pipeline_theorem10, pipeline_theorem12,
    pipeline_theorem5, pipeline_theorem7, PipelineOutcome,
};
use super::TheoremId;
use crate::error::{Error, Result};
use crate::graph::{canonical_graph, enumerate_graphs_with_cap, Graph, DEFAULT_ORDER_CAP};
use crate::pack::{
    find_f_factor_with_budget, forest_embed_with_budget, pack_component_wise, pack_embed, pack_sequence,
    PackingResult, SearchBudget, Status,
};
use crate::recognize::match_exceptions;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::ops::RangeInclusive;

pub const SCHEMA: &str = "packlab/1";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub budget: SearchBudget,
    pub workers: usize,
    pub seed: u64,
    pub order_cap: usize,
    /// Random labeled pairs per order for the relabeling spot check.
    pub spot_samples: usize,
    /// Random bijections per instance for the prescribed-degree statement,
    /// tried after the identity.
    pub bijection_samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            budget: SearchBudget::default(),
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            seed: 0,
            order_cap: DEFAULT_ORDER_CAP,
            spot_samples: 1000,
            bijection_samples: 20,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub instances: usize,
    pub hypothesis_satisfied: usize,
    pub packed: usize,
    pub excluded_by_exception: usize,
    pub budget_exhausted: usize,
}

/// One pair worth reporting.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Finding {
    pub g1: Graph,
    pub g2: Graph,
    pub note: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpotCheck {
    pub samples: usize,
    pub disagreements: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema: String,
    pub theorem: TheoremId,
    pub min_order: usize,
    pub max_order: usize,
    /// Open statements are reported, not asserted.
    pub open_statement: bool,
    pub counts: Counts,
    pub counterexamples: Vec<Finding>,
    /// Instances set aside by a listed exception.
    pub excluded: Vec<Finding>,
    /// Excluded instances the exact solver confirmed unpackable.
    pub exceptions_confirmed_unpackable: usize,
    /// Pipelines that needed the exact solver, and similar surprises.
    pub anomalies: Vec<Finding>,
    pub spot_check: Option<SpotCheck>,
}

impl VerificationReport {
    /// `hypothesis_satisfied = packed + excluded + exhausted + counterexamples`.
    pub fn is_balanced(&self) -> bool {
        let c = &self.counts;
        c.hypothesis_satisfied == c.packed + c.excluded_by_exception + c.budget_exhausted + self.counterexamples.len()
    }
}

enum Verdict {
    Skipped,
    Packed,
    Excluded { confirmed: bool, note: String },
    Exhausted,
    Counterexample(String),
}

struct Judged {
    verdict: Verdict,
    anomaly: Option<String>,
}

impl From<Verdict> for Judged {
    fn from(verdict: Verdict) -> Self {
        Judged { verdict, anomaly: None }
    }
}

pub fn verify_theorem(theorem: TheoremId, orders: RangeInclusive<usize>, budget: &SearchBudget) -> Result<VerificationReport> {
    let opts = VerifyOptions { budget: *budget, ..VerifyOptions::default() };
    verify_theorem_with(theorem, *orders.start(), *orders.end(), &opts)
}

pub fn verify_theorem_with(theorem: TheoremId, min_order: usize, max_order: usize, opts: &VerifyOptions) -> Result<VerificationReport> {
    if min_order > max_order {
        return Err(Error::BadParameter(format!("empty order range {min_order}..={max_order}")));
    }
    if opts.workers == 0 {
        return Err(Error::BadParameter("worker count must be positive".into()));
    }
    let mut classes = Vec::new();
    for n in min_order..=max_order {
        classes.push(enumerate_graphs_with_cap(n, opts.order_cap)?);
    }
    let pairs: Vec<(&Graph, &Graph)> =
        classes.iter().flat_map(|c| c.iter().flat_map(move |a| c.iter().map(move |b| (a, b)))).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.workers)
        .build()
        .map_err(|e| Error::BadParameter(format!("thread pool: {e}")))?;
    let judged: Vec<Judged> = pool.install(|| {
        pairs
            .par_iter()
            .enumerate()
            .map(|(i, (g1, g2))| {
                let mut rng = instance_rng(opts.seed, i as u64);
                judge(theorem, g1, g2, opts, &mut rng)
            })
            .collect::<Result<Vec<_>>>()
    })?;

    let mut report = VerificationReport {
        schema: SCHEMA.to_string(),
        theorem,
        min_order,
        max_order,
        open_statement: theorem.is_open(),
        counts: Counts { instances: pairs.len(), ..Counts::default() },
        counterexamples: Vec::new(),
        excluded: Vec::new(),
        exceptions_confirmed_unpackable: 0,
        anomalies: Vec::new(),
        spot_check: None,
    };
    for ((g1, g2), j) in pairs.iter().zip(judged) {
        let finding = |note: String| Finding { g1: (*g1).clone(), g2: (*g2).clone(), note };
        if let Some(note) = j.anomaly {
            report.anomalies.push(finding(note));
        }
        let c = &mut report.counts;
        match j.verdict {
            Verdict::Skipped => continue,
            Verdict::Packed => c.packed += 1,
            Verdict::Excluded { confirmed, note } => {
                c.excluded_by_exception += 1;
                report.exceptions_confirmed_unpackable += usize::from(confirmed);
                report.excluded.push(finding(note));
            }
            Verdict::Exhausted => c.budget_exhausted += 1,
            Verdict::Counterexample(note) => report.counterexamples.push(finding(note)),
        }
        report.counts.hypothesis_satisfied += 1;
    }
    if opts.spot_samples > 0 {
        let mut total = SpotCheck::default();
        for n in min_order.max(1)..=max_order {
            let s = spot_check_invariance(n, opts.spot_samples, opts.seed ^ n as u64, &opts.budget)?;
            total.samples += s.samples;
            total.disagreements += s.disagreements;
        }
        report.spot_check = Some(total);
    }
    Ok(report)
}

fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn by_status(r: &PackingResult, unpackable: &str) -> Verdict {
    match r.status {
        Status::Packed => Verdict::Packed,
        Status::BudgetExhausted => Verdict::Exhausted,
        Status::Unpackable => Verdict::Counterexample(unpackable.to_string()),
    }
}

fn by_pipeline(out: Result<PipelineOutcome>) -> Judged {
    match out {
        Ok(o) => Judged {
            verdict: by_status(&o.result, o.anomaly.as_deref().unwrap_or("pipeline returned no packing")),
            anomaly: if o.is_packed() { o.anomaly } else { None },
        },
        Err(Error::BudgetExhausted) => Verdict::Exhausted.into(),
        Err(e) => Verdict::Counterexample(format!("pipeline rejected a satisfied hypothesis: {e}")).into(),
    }
}

fn judge(theorem: TheoremId, g1: &Graph, g2: &Graph, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Judged> {
    let budget = &opts.budget;
    let judged = match theorem {
        TheoremId::Bec | TheoremId::Problem1 => {
            if !check_bec(g1, g2)?.satisfied {
                return Ok(Verdict::Skipped.into());
            }
            if theorem == TheoremId::Bec {
                by_status(&pack_embed(g1, g2, budget)?, "no packing").into()
            } else {
                by_status(&pack_component_wise(g1, g2, budget)?, "no component-wise packing").into()
            }
        }
        TheoremId::BecHalf => {
            if !check_main(g1, g2)?.satisfied {
                return Ok(Verdict::Skipped.into());
            }
            let exceptions = match_exceptions(g1, g2)?;
            let r = pack_sequence(g1, g2, budget)?;
            if exceptions.is_empty() {
                by_status(&r, "no realization packs").into()
            } else {
                let tags: Vec<String> = exceptions.iter().map(ToString::to_string).collect();
                let anomaly = r.is_packed().then(|| format!("exception {} packs", tags.join(",")));
                Judged {
                    verdict: Verdict::Excluded { confirmed: r.status == Status::Unpackable, note: tags.join(",") },
                    anomaly,
                }
            }
        }
        TheoremId::Cor4 => {
            if !check_cor4(g1, g2)?.satisfied {
                return Ok(Verdict::Skipped.into());
            }
            by_status(&pack_sequence(g1, g2, budget)?, "no realization packs").into()
        }
        TheoremId::Katerinis => {
            if !check_katerinis(g1, g2)?.satisfied {
                return Ok(Verdict::Skipped.into());
            }
            judge_bijections(g1, g2, opts, rng)?.into()
        }
        TheoremId::Thm5 => match check_theorem5_hypothesis(g1, g2) {
            Ok(r) if r.satisfied => judge_theorem5(g1, g2, budget)?,
            Ok(_) | Err(Error::NotRegular | Error::NoPositiveVertex) => Verdict::Skipped.into(),
            Err(e) => return Err(e),
        },
        TheoremId::Thm7 => match smallest_theorem7_k(g1, g2) {
            Ok((k, r)) if r.satisfied => by_pipeline(pipeline_theorem7(g1, g2, k, budget)),
            Ok(_) | Err(Error::NoPositiveVertex) => Verdict::Skipped.into(),
            Err(e) => return Err(e),
        },
        TheoremId::ForestEmbed => {
            if !check_forest_embed(g1, g2).satisfied {
                return Ok(Verdict::Skipped.into());
            }
            match forest_embed_with_budget(g1, g2, budget) {
                Ok(_) => Verdict::Packed.into(),
                Err(Error::BudgetExhausted) => Verdict::Exhausted.into(),
                Err(Error::NoEmbedding) => Verdict::Counterexample("forest does not embed".into()).into(),
                Err(e) => return Err(e),
            }
        }
        TheoremId::Lemma9 => match check_lemma9(g1, g2, budget) {
            Ok(r) if r.satisfied => by_pipeline(pipeline_lemma9(g1, g2, budget)),
            Ok(_) => Verdict::Skipped.into(),
            Err(Error::BudgetExhausted) => Verdict::Exhausted.into(),
            Err(e) => return Err(e),
        },
        TheoremId::Thm10 => {
            if !check_theorem10(g1, g2)?.satisfied {
                return Ok(Verdict::Skipped.into());
            }
            by_pipeline(pipeline_theorem10(g1, g2, budget))
        }
        TheoremId::Thm12 => {
            if !check_theorem12(g1, g2)?.satisfied {
                return Ok(Verdict::Skipped.into());
            }
            by_pipeline(pipeline_theorem12(g1, g2, budget))
        }
        TheoremId::LargeMatching => {
            if !check_large_matching(g1, g2)?.satisfied {
                return Ok(Verdict::Skipped.into());
            }
            by_pipeline(pipeline_large_matching(g1, g2, budget))
        }
        TheoremId::Split => {
            if !check_split(g1, g2)?.satisfied {
                return Ok(Verdict::Skipped.into());
            }
            by_pipeline(pipeline_split(g1, g2, budget))
        }
    };
    Ok(judged)
}

/// Identity plus sampled bijections: vertex `i` must get degree
/// `d[φ(i)]` in a packing, i.e. an f-factor of the complement.
fn judge_bijections(g1: &Graph, g2: &Graph, opts: &VerifyOptions, rng: &mut ChaCha8Rng) -> Result<Verdict> {
    let n = g1.order();
    let degrees = g1.degrees();
    let host = g2.complement();
    let mut phi: Vec<usize> = (0..n).collect();
    for round in 0..=opts.bijection_samples {
        if round > 0 {
            phi.shuffle(rng);
        }
        let f: Vec<usize> = phi.iter().map(|&j| degrees[j]).collect();
        match find_f_factor_with_budget(&host, &f, &opts.budget) {
            Ok(_) => {}
            Err(Error::BudgetExhausted) => return Ok(Verdict::Exhausted),
            Err(Error::Infeasible | Error::ParityViolation) => {
                return Ok(Verdict::Counterexample(format!("no packing with degrees prescribed by {phi:?}")))
            }
            Err(e) => return Err(e),
        }
    }
    Ok(Verdict::Packed)
}

/// Every vertex subset of the right size must receive a packing, unless a
/// listed exception applies on it.
fn judge_theorem5(g1: &Graph, g2: &Graph, budget: &SearchBudget) -> Result<Judged> {
    let n = g1.order();
    let m = g1.positive_vertices().len();
    let mut excluded = Vec::new();
    let mut confirmed = true;
    let mut exhausted = false;
    let mut anomaly = None;
    for mask in 0u64..1 << n {
        if mask.count_ones() as usize != m {
            continue;
        }
        let x: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        match pipeline_theorem5(g1, g2, &x, budget) {
            Ok(o) => match o.result.status {
                Status::Packed => {
                    if anomaly.is_none() {
                        anomaly = o.anomaly.map(|a| format!("X = {x:?}: {a}"));
                    }
                }
                Status::BudgetExhausted => exhausted = true,
                Status::Unpackable => return Ok(Verdict::Counterexample(format!("X = {x:?} does not pack")).into()),
            },
            Err(Error::HypothesisUnmet(_)) => {
                let plus = g1.positive_part()?;
                let r = pack_sequence(&plus, &g2.induced_subgraph(&x), budget)?;
                confirmed &= r.status == Status::Unpackable;
                excluded.push(x);
            }
            Err(e) => return Err(e),
        }
    }
    let verdict = if exhausted {
        Verdict::Exhausted
    } else if !excluded.is_empty() {
        Verdict::Excluded { confirmed, note: format!("excluded on {} vertex sets", excluded.len()) }
    } else {
        Verdict::Packed
    };
    Ok(Judged { verdict, anomaly })
}

fn random_graph(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let p: f64 = rng.gen();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Draws labeled pairs and compares hypothesis values, exception matches
/// and solver verdicts with those of the canonical representatives.
pub fn spot_check_invariance(order: usize, samples: usize, seed: u64, budget: &SearchBudget) -> Result<SpotCheck> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut disagreements = 0;
    for _ in 0..samples {
        let g1 = random_graph(order, &mut rng);
        let g2 = random_graph(order, &mut rng);
        let (c1, c2) = (canonical_graph(&g1), canonical_graph(&g2));
        let probe = |a: &Graph, b: &Graph| -> Result<(bool, bool, usize, Status, Status)> {
            Ok((
                check_main(a, b)?.satisfied,
                check_cor4(a, b)?.satisfied,
                match_exceptions(a, b)?.len(),
                pack_sequence(a, b, budget)?.status,
                pack_embed(a, b, budget)?.status,
            ))
        };
        if probe(&g1, &g2)? != probe(&c1, &c2)? {
            disagreements += 1;
        }
    }
    Ok(SpotCheck { samples, disagreements })
}
