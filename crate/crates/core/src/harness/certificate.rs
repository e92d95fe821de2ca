//! Self-checking packing certificates.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lab::{check_main, HypothesisReport};
use crate::pack::{pack, witness_satisfies, Mode, SearchBudget, Stats, Status};
use crate::recognize::{match_exceptions, ExceptionKind};
use serde::{Deserialize, Serialize};

pub use crate::lab::verify::SCHEMA;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Instance {
    pub g1: Graph,
    pub g2: Graph,
}

/// A solver verdict together with everything needed to recheck it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub schema: String,
    pub tool_version: String,
    pub instance: Instance,
    pub mode: Mode,
    pub status: Status,
    pub witness: Option<Graph>,
    pub exceptions: Vec<ExceptionKind>,
    pub hypothesis: HypothesisReport,
    pub stats: Stats,
}

impl Certificate {
    /// Runs the `mode` solver on the pair and records the result.
    pub fn issue(g1: &Graph, g2: &Graph, mode: Mode, budget: &SearchBudget) -> Result<Self> {
        let result = pack(g1, g2, mode, budget)?;
        Ok(Certificate {
            schema: SCHEMA.to_string(),
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            instance: Instance { g1: g1.clone(), g2: g2.clone() },
            mode,
            status: result.status,
            witness: result.witness,
            exceptions: match_exceptions(g1, g2)?,
            hypothesis: check_main(g1, g2)?,
            stats: result.stats,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates serialize")
    }

    /// Parses a certificate; malformed documents are schema violations.
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::SchemaViolation(e.to_string()))
    }
}

/// Rechecks a certificate from scratch: witness contract, exception
/// matches and hypothesis arithmetic. Structural defects (wrong schema,
/// status and witness disagreeing) are errors; wrong content is `false`.
pub fn certificate_validate(cert: &Certificate) -> Result<bool> {
    if cert.schema != SCHEMA {
        return Err(Error::SchemaViolation(format!("schema {:?}, expected {SCHEMA:?}", cert.schema)));
    }
    match (cert.status, &cert.witness) {
        (Status::Packed, None) => return Err(Error::SchemaViolation("status PACKED without a witness".into())),
        (Status::Unpackable | Status::BudgetExhausted, Some(_)) => {
            return Err(Error::SchemaViolation(format!("status {} with a witness", cert.status)))
        }
        _ => {}
    }
    let Instance { g1, g2 } = &cert.instance;
    if g1.order() != g2.order() {
        return Ok(false);
    }
    if let Some(w) = &cert.witness {
        if !witness_satisfies(g1, g2, cert.mode, w) {
            return Ok(false);
        }
    }
    Ok(cert.exceptions == match_exceptions(g1, g2)? && cert.hypothesis == check_main(g1, g2)?)
}
