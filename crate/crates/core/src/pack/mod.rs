//! Packing solvers.
//!
//! Three notions of packing `g1` with `g2` on a shared vertex set:
//! embedding a copy of `g1` into the complement of `g2`, placing any
//! realization of `g1`'s degree sequence there, or placing a realization
//! whose components realize `g1`'s components one for one.
//!
//! Only exhausted exact searches report [`Status::Unpackable`].

mod component;
mod embed;
mod factor;
mod forest;
pub(crate) mod growth;
mod independent;
mod near;
mod repair;
mod sequence;

pub use component::pack_component_wise;
pub use embed::pack_embed;
pub use factor::{find_f_factor, find_f_factor_with_budget};
pub use forest::{forest_embed, forest_embed_with_budget};
pub use growth::pack_regular_by_factor_growth;
pub use independent::realization_with_independent_set;
pub use near::{near_packing, NearPacking};
pub use repair::exchange_repair;
pub use sequence::{pack_sequence, pack_sequence_into};

use crate::error::{Error, Result};
use crate::graph::{canonical_form, DegreeSequence, Graph};
use crate::search::Meter;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Packed,
    Unpackable,
    BudgetExhausted,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Packed => "PACKED",
            Status::Unpackable => "UNPACKABLE",
            Status::BudgetExhausted => "BUDGET_EXHAUSTED",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "embed")]
    Embed,
    #[serde(rename = "sequence")]
    Sequence,
    #[serde(rename = "componentwise")]
    ComponentWise,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Embed => "embed",
            Mode::Sequence => "sequence",
            Mode::ComponentWise => "componentwise",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "embed" => Ok(Mode::Embed),
            "sequence" => Ok(Mode::Sequence),
            "componentwise" | "component-wise" => Ok(Mode::ComponentWise),
            other => Err(Error::BadParameter(format!("unknown mode {other:?}; expected embed, sequence or componentwise"))),
        }
    }
}

/// Node and wall-clock limits for one solver call.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub node_limit: u64,
    pub time_limit: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { node_limit: 10_000_000, time_limit: Duration::from_secs(30) }
    }
}

impl SearchBudget {
    pub fn new(node_limit: u64, time_limit: Duration) -> Result<Self> {
        if node_limit == 0 || time_limit.is_zero() {
            return Err(Error::BadParameter("budget limits must be positive".into()));
        }
        Ok(SearchBudget { node_limit, time_limit })
    }

    pub fn unlimited() -> Self {
        SearchBudget { node_limit: u64::MAX, time_limit: Duration::MAX }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub nodes: u64,
    pub millis: u64,
}

impl Stats {
    pub(crate) fn of(meter: &Meter) -> Self {
        Stats { nodes: meter.nodes, millis: meter.millis() }
    }

    pub(crate) fn add(self, other: Stats) -> Stats {
        Stats { nodes: self.nodes + other.nodes, millis: self.millis + other.millis }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingResult {
    pub status: Status,
    /// The placed graph, edge-disjoint from `g2`, when packed.
    pub witness: Option<Graph>,
    pub mode: Mode,
    pub stats: Stats,
}

impl PackingResult {
    pub(crate) fn packed(mode: Mode, witness: Graph, stats: Stats) -> Self {
        PackingResult { status: Status::Packed, witness: Some(witness), mode, stats }
    }

    pub(crate) fn without_witness(mode: Mode, status: Status, stats: Stats) -> Self {
        PackingResult { status, witness: None, mode, stats }
    }

    pub fn is_packed(&self) -> bool {
        self.status == Status::Packed
    }
}

pub(crate) fn same_order(g1: &Graph, g2: &Graph) -> Result<()> {
    if g1.order() != g2.order() {
        return Err(Error::SizeMismatch(g1.order(), g2.order()));
    }
    Ok(())
}

/// Degree sequences of the components, sorted; the component-wise contract
/// compares these multisets.
pub(crate) fn component_sequences(g: &Graph) -> Vec<DegreeSequence> {
    let mut out: Vec<DegreeSequence> =
        g.components().iter().map(|c| DegreeSequence::of(&g.induced_subgraph(c))).collect();
    out.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| b.terms().cmp(a.terms())));
    out
}

/// Checks that `witness` packs with `g2` and meets `mode`'s contract
/// against `g1`.
pub fn witness_satisfies(g1: &Graph, g2: &Graph, mode: Mode, witness: &Graph) -> bool {
    if witness.order() != g2.order() || g1.order() != g2.order() || !witness.is_edge_disjoint(g2) {
        return false;
    }
    match mode {
        Mode::Embed => canonical_form(witness) == canonical_form(g1),
        Mode::Sequence => DegreeSequence::of(witness) == DegreeSequence::of(g1),
        Mode::ComponentWise => component_sequences(witness) == component_sequences(g1),
    }
}

/// Runs the exact solver for `mode`.
pub fn pack(g1: &Graph, g2: &Graph, mode: Mode, budget: &SearchBudget) -> Result<PackingResult> {
    match mode {
        Mode::Embed => pack_embed(g1, g2, budget),
        Mode::Sequence => pack_sequence(g1, g2, budget),
        Mode::ComponentWise => pack_component_wise(g1, g2, budget),
    }
}
