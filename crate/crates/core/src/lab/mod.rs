//! Hypothesis checkers, constructive pipelines, the equitable-coloring
//! application and the exhaustive verifier.

pub mod coloring;
pub mod decompose;
pub mod hypotheses;
pub mod pipelines;
pub mod verify;

pub use coloring::{equitable_coloring_via_packing, EquitableColoring};
pub use decompose::Decomposition;
pub use hypotheses::{
    check_bec, check_cor4, check_forest_embed, check_katerinis, check_large_matching, check_lemma9, check_main,
    check_split, check_theorem, check_theorem10, check_theorem12, check_theorem5_hypothesis,
    check_theorem7_hypothesis, g_value, Clause, HypothesisReport, Quantities, Relation,
};
pub use pipelines::{
    pipeline_large_matching, pipeline_lemma9, pipeline_split, pipeline_theorem10, pipeline_theorem12,
    pipeline_theorem5, pipeline_theorem7, PipelineOutcome, Route,
};
pub use verify::{spot_check_invariance, verify_theorem, verify_theorem_with, Counts, Finding, SpotCheck, VerificationReport, VerifyOptions};

use crate::error::Error;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// Statements the lab can check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TheoremId {
    /// The conjectured condition `(Δ1+1)(Δ2+1) ≤ n+1`, checked for graph packing.
    Bec,
    /// Degree-sequence packing under the relaxed bound, with four exceptions.
    BecHalf,
    /// Degree-sequence packing under the exception-free bounds.
    Cor4,
    /// Prescribed-degree packing from the f-factor bullets.
    Katerinis,
    /// Regular positive part against any vertex subset.
    Thm5,
    /// Packing that keeps a `k`-factor in the positive part.
    Thm7,
    /// Forests into graphs of large minimum degree.
    ForestEmbed,
    /// Adding a forest with many components to a component-wise packing.
    Lemma9,
    /// Dominating-clique graph plus a forest.
    Thm10,
    /// Unigraph plus a forest.
    Thm12,
    /// A graph plus a large matching part.
    LargeMatching,
    /// A split graph plus a matching part.
    Split,
    /// Open question: component-wise packing under the conjectured bound.
    Problem1,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        TheoremId::Bec,
        TheoremId::BecHalf,
        TheoremId::Cor4,
        TheoremId::Katerinis,
        TheoremId::Thm5,
        TheoremId::Thm7,
        TheoremId::ForestEmbed,
        TheoremId::Lemma9,
        TheoremId::Thm10,
        TheoremId::Thm12,
        TheoremId::LargeMatching,
        TheoremId::Split,
        TheoremId::Problem1,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::Bec => "bec",
            TheoremId::BecHalf => "bec-half",
            TheoremId::Cor4 => "cor4",
            TheoremId::Katerinis => "katerinis",
            TheoremId::Thm5 => "thm5",
            TheoremId::Thm7 => "thm7",
            TheoremId::ForestEmbed => "forest-embed",
            TheoremId::Lemma9 => "lemma9",
            TheoremId::Thm10 => "thm10",
            TheoremId::Thm12 => "thm12",
            TheoremId::LargeMatching => "large-matching",
            TheoremId::Split => "split",
            TheoremId::Problem1 => "problem1",
        }
    }

    /// Open statements are reported, never asserted.
    pub fn is_open(self) -> bool {
        matches!(self, TheoremId::Bec | TheoremId::Problem1)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        TheoremId::ALL.into_iter().find(|t| t.name() == key).ok_or_else(|| {
            let names: Vec<&str> = TheoremId::ALL.iter().map(|t| t.name()).collect();
            Error::BadParameter(format!("unknown theorem {s:?}; expected one of {}", names.join(", ")))
        })
    }
}
