use crate::error::{Error, Result};
use crate::graph::DEFAULT_ORDER_CAP;
use crate::lab::{TheoremId, VerifyOptions};
use crate::pack::SearchBudget;
use std::path::PathBuf;

/// Environment variable capping enumeration order.
pub const MAX_ORDER_VAR: &str = "PACKLAB_MAX_ORDER";

/// Everything a batch run depends on. Equal configs give byte-identical
/// reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub theorem: TheoremId,
    pub min_order: usize,
    pub max_order: usize,
    pub budget: SearchBudget,
    pub workers: usize,
    pub output: Option<PathBuf>,
    pub seed: u64,
    pub spot_samples: usize,
}

impl RunConfig {
    pub fn new(theorem: TheoremId, max_order: usize) -> Self {
        RunConfig {
            theorem,
            min_order: 1,
            max_order,
            budget: SearchBudget::default(),
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            output: None,
            seed: 0,
            spot_samples: 1000,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.workers == 0 {
            return Err(Error::BadParameter("--workers must be positive".into()));
        }
        if self.budget.node_limit == 0 || self.budget.time_limit.is_zero() {
            return Err(Error::BadParameter("budget limits must be positive".into()));
        }
        if self.min_order > self.max_order {
            return Err(Error::BadParameter(format!("--min-order {} exceeds --max-order {}", self.min_order, self.max_order)));
        }
        Ok(())
    }

    pub fn verify_options(&self, order_cap: usize) -> VerifyOptions {
        VerifyOptions {
            budget: self.budget,
            workers: self.workers,
            seed: self.seed,
            order_cap,
            spot_samples: self.spot_samples,
            ..VerifyOptions::default()
        }
    }
}

/// Reads the enumeration cap from the environment, defaulting to the
/// library cap. The variable can only lower the cap.
pub fn order_cap_from_env() -> Result<usize> {
    match std::env::var(MAX_ORDER_VAR) {
        Err(_) => Ok(DEFAULT_ORDER_CAP),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|cap| cap.min(DEFAULT_ORDER_CAP))
            .map_err(|_| Error::BadParameter(format!("{MAX_ORDER_VAR}={v:?} is not a non-negative integer"))),
    }
}
