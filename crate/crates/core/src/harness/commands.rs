//! The command-line subcommands as library functions.
//!
//! Each returns the text to print and the process exit code, so the binary
//! is a thin shell and every path is testable in-process.

use super::certificate::{certificate_validate, Certificate};
use super::config::{order_cap_from_env, RunConfig};
use crate::error::{Error, Result};
use crate::graph::{enumerate_graphs_with_cap, graph6_decode, havel_hakimi_realize, DegreeSequence, Graph};
use crate::lab::verify::SCHEMA;
use crate::lab::{check_theorem, verify_theorem_with, HypothesisReport, TheoremId, VerificationReport};
use crate::pack::{Mode, SearchBudget, Status};
use crate::recognize::{has_dominating_clique, is_split, is_unigraph, UNIGRAPH_ORDER_CAP};
use serde::Serialize;
use std::fmt::Write;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitCode {
    Completed = 0,
    Counterexample = 1,
    InputError = 2,
    BudgetExhausted = 3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: ExitCode,
}

impl CommandOutput {
    fn ok(stdout: String) -> Self {
        CommandOutput { stdout, stderr: String::new(), code: ExitCode::Completed }
    }

    fn with_code(stdout: String, code: ExitCode) -> Self {
        CommandOutput { stdout, stderr: String::new(), code }
    }

    fn from_error(e: &Error) -> Self {
        let code = match e {
            Error::BudgetExhausted => ExitCode::BudgetExhausted,
            _ => ExitCode::InputError,
        };
        CommandOutput { stdout: String::new(), stderr: format!("error: {e}\n"), code }
    }
}

fn finish(r: Result<CommandOutput>) -> CommandOutput {
    r.unwrap_or_else(|e| CommandOutput::from_error(&e))
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn parse_graph(text: &str) -> Result<Graph> {
    graph6_decode(text.trim())
}

#[derive(Serialize)]
struct Realized<'a> {
    schema: &'a str,
    sequence: &'a [usize],
    graph6: String,
}

/// `realize <seq>`: a Havel–Hakimi realization as graph6.
pub fn realize(seq: &str, json: bool) -> CommandOutput {
    finish((|| {
        let seq: DegreeSequence = seq.parse()?;
        let g = havel_hakimi_realize(&seq)?;
        Ok(CommandOutput::ok(if json {
            json_line(&Realized { schema: SCHEMA, sequence: seq.terms(), graph6: g.to_string() })
        } else {
            format!("{g}\n")
        }))
    })())
}

/// `pack --mode <mode> <g1> <g2>`: a certificate for the pair.
pub fn pack(mode: &str, g1: &str, g2: &str, budget: &SearchBudget, json: bool) -> CommandOutput {
    finish((|| {
        let mode: Mode = mode.parse()?;
        let (g1, g2) = (parse_graph(g1)?, parse_graph(g2)?);
        let cert = Certificate::issue(&g1, &g2, mode, budget)?;
        let code = if cert.status == Status::BudgetExhausted { ExitCode::BudgetExhausted } else { ExitCode::Completed };
        if json {
            return Ok(CommandOutput::with_code(json_line(&cert), code));
        }
        let mut s = String::new();
        writeln!(s, "status: {}", cert.status).unwrap();
        if let Some(w) = &cert.witness {
            writeln!(s, "witness: {w}").unwrap();
        }
        let exceptions: Vec<String> = cert.exceptions.iter().map(ToString::to_string).collect();
        writeln!(s, "exceptions: {}", if exceptions.is_empty() { "none".to_string() } else { exceptions.join(", ") }).unwrap();
        writeln!(s, "hypothesis: {}", if cert.hypothesis.satisfied { "satisfied" } else { "not satisfied" }).unwrap();
        writeln!(s, "nodes: {}", cert.stats.nodes).unwrap();
        Ok(CommandOutput::with_code(s, code))
    })())
}

fn render_report(r: &HypothesisReport) -> String {
    let mut s = format!("theorem: {}\n", r.theorem);
    for c in &r.clauses {
        let rel = serde_json::to_value(c.relation).expect("relations serialize");
        let mark = if c.holds { "ok" } else { "FAILS" };
        writeln!(s, "  {:<28} {} {} {}  {mark}", c.name, c.lhs, rel.as_str().unwrap_or("?"), c.rhs).unwrap();
    }
    writeln!(s, "satisfied: {}", r.satisfied).unwrap();
    s
}

/// `check --theorem <id> [--k k] <g1> <g2>`: the hypothesis arithmetic.
pub fn check(theorem: &str, k: Option<usize>, g1: &str, g2: &str, json: bool) -> CommandOutput {
    finish((|| {
        let theorem: TheoremId = theorem.parse()?;
        let (g1, g2) = (parse_graph(g1)?, parse_graph(g2)?);
        let report = check_theorem(theorem, &g1, &g2, k)?;
        Ok(CommandOutput::ok(if json { json_line(&report) } else { render_report(&report) }))
    })())
}

fn render_verification(r: &VerificationReport) -> String {
    let c = &r.counts;
    let mut s = String::new();
    writeln!(s, "theorem: {} (orders {}..={}){}", r.theorem, r.min_order, r.max_order, if r.open_statement { " [open]" } else { "" }).unwrap();
    writeln!(s, "instances: {}", c.instances).unwrap();
    writeln!(s, "hypothesis satisfied: {}", c.hypothesis_satisfied).unwrap();
    writeln!(s, "packed: {}", c.packed).unwrap();
    writeln!(s, "excluded by exception: {} (confirmed unpackable: {})", c.excluded_by_exception, r.exceptions_confirmed_unpackable).unwrap();
    writeln!(s, "budget exhausted: {}", c.budget_exhausted).unwrap();
    writeln!(s, "counterexamples: {}", r.counterexamples.len()).unwrap();
    for f in &r.counterexamples {
        writeln!(s, "  {} {}  {}", f.g1, f.g2, f.note).unwrap();
    }
    if !r.anomalies.is_empty() {
        writeln!(s, "anomalies: {}", r.anomalies.len()).unwrap();
    }
    if let Some(spot) = &r.spot_check {
        writeln!(s, "spot check: {} samples, {} disagreements", spot.samples, spot.disagreements).unwrap();
    }
    s
}

/// `verify`: every pair up to the configured order. The report also goes
/// to `config.output` as JSON when set.
pub fn verify(config: &RunConfig, json: bool) -> CommandOutput {
    finish((|| {
        config.validate()?;
        let cap = order_cap_from_env()?;
        let report = verify_theorem_with(config.theorem, config.min_order, config.max_order, &config.verify_options(cap))?;
        let text = json_line(&report);
        if let Some(path) = &config.output {
            std::fs::write(path, &text).map_err(|e| Error::BadParameter(format!("cannot write {}: {e}", path.display())))?;
        }
        let code = if !report.counterexamples.is_empty() {
            ExitCode::Counterexample
        } else if report.counts.budget_exhausted > 0 {
            ExitCode::BudgetExhausted
        } else {
            ExitCode::Completed
        };
        Ok(CommandOutput::with_code(if json { text } else { render_verification(&report) }, code))
    })())
}

#[derive(Serialize)]
struct UnigraphReport {
    graph6: String,
    degrees: Vec<usize>,
    unigraph: bool,
    split: bool,
    dominating_clique: bool,
}

/// `unigraph <g6>`: whether the degree sequence pins the graph down.
pub fn unigraph(g: &str, json: bool) -> CommandOutput {
    finish((|| {
        let g = parse_graph(g)?;
        let report = UnigraphReport {
            graph6: g.to_string(),
            degrees: DegreeSequence::of(&g).terms().to_vec(),
            unigraph: is_unigraph(&g)?,
            split: is_split(&g).is_some(),
            dominating_clique: has_dominating_clique(&g).is_some(),
        };
        Ok(CommandOutput::ok(if json {
            json_line(&report)
        } else {
            format!(
                "unigraph: {}\nsplit: {}\ndominating clique: {}\n",
                report.unigraph, report.split, report.dominating_clique
            )
        }))
    })())
}

#[derive(Serialize)]
struct CensusRow {
    order: usize,
    classes: usize,
    connected: usize,
    forests: usize,
    split: usize,
    unigraphs: Option<usize>,
}

/// `census --max-order n`: class counts per order.
pub fn census(max_order: usize, json: bool) -> CommandOutput {
    finish((|| {
        let cap = order_cap_from_env()?;
        let mut rows = Vec::new();
        for n in 0..=max_order {
            let graphs = enumerate_graphs_with_cap(n, cap)?;
            let unigraphs = if n <= UNIGRAPH_ORDER_CAP {
                let mut count = 0;
                for g in &graphs {
                    count += usize::from(is_unigraph(g)?);
                }
                Some(count)
            } else {
                None
            };
            rows.push(CensusRow {
                order: n,
                classes: graphs.len(),
                connected: graphs.iter().filter(|g| g.is_connected()).count(),
                forests: graphs.iter().filter(|g| g.is_forest()).count(),
                split: graphs.iter().filter(|g| is_split(g).is_some()).count(),
                unigraphs,
            });
        }
        if json {
            return Ok(CommandOutput::ok(json_line(&rows)));
        }
        let mut s = format!("{:>5} {:>8} {:>9} {:>7} {:>6} {:>9}\n", "order", "classes", "connected", "forests", "split", "unigraphs");
        for r in &rows {
            let uni = r.unigraphs.map_or("-".to_string(), |u| u.to_string());
            writeln!(s, "{:>5} {:>8} {:>9} {:>7} {:>6} {:>9}", r.order, r.classes, r.connected, r.forests, r.split, uni).unwrap();
        }
        Ok(CommandOutput::ok(s))
    })())
}

#[derive(Serialize)]
struct Validation {
    valid: bool,
}

/// `validate <file>`: rechecks a certificate. An invalid certificate exits
/// with code 1, a malformed one with code 2.
pub fn validate(text: &str, json: bool) -> CommandOutput {
    finish((|| {
        let cert = Certificate::from_json(text)?;
        let valid = certificate_validate(&cert)?;
        let out = if json { json_line(&Validation { valid }) } else { format!("{}\n", if valid { "valid" } else { "invalid" }) };
        Ok(CommandOutput::with_code(out, if valid { ExitCode::Completed } else { ExitCode::Counterexample }))
    })())
}
