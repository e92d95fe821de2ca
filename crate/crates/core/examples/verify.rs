//! Exhaustive verification over every pair of small graphs.
//!
//!     cargo run --release --example verify -- thm12 7

use packlab::lab::{verify_theorem_with, TheoremId, VerifyOptions};

fn main() -> packlab::Result<()> {
    let mut args = std::env::args().skip(1);
    let theorem: TheoremId = args.next().unwrap_or_else(|| "bec-half".into()).parse()?;
    let max: usize = args.next().map_or(Ok(5), |s| s.parse()).map_err(|e| packlab::Error::BadParameter(format!("{e}")))?;
    let opts = VerifyOptions::default();
    let report = verify_theorem_with(theorem, 1, max, &opts)?;
    println!("{}", serde_json::to_string_pretty(&report.counts).unwrap());
    println!("counterexamples {}, anomalies {}, balanced {}", report.counterexamples.len(), report.anomalies.len(), report.is_balanced());
    if let Some(s) = report.spot_check {
        println!("relabeling spot check: {} of {} disagree", s.disagreements, s.samples);
    }
    Ok(())
}
