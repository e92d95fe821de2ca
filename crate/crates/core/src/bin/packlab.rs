use clap::{Args, Parser, Subcommand};
use packlab::harness::{commands, RunConfig};
use packlab::lab::TheoremId;
use packlab::pack::SearchBudget;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "packlab", version, about = "Graph packing laboratory")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// Search nodes per instance.
    #[arg(long, default_value_t = 10_000_000)]
    node_limit: u64,
    /// Seconds per instance.
    #[arg(long, default_value_t = 30.0)]
    time_limit: f64,
}

impl BudgetArgs {
    fn budget(&self) -> Result<SearchBudget, String> {
        if !(self.time_limit > 0.0 && self.time_limit.is_finite()) {
            return Err("--time-limit must be a positive number of seconds".into());
        }
        SearchBudget::new(self.node_limit, Duration::from_secs_f64(self.time_limit)).map_err(|e| e.to_string())
    }
}

#[derive(Subcommand)]
enum Command {
    /// Realize a degree sequence such as 3,3,2,2,2.
    Realize { sequence: String },
    /// Pack two graphs given in graph6.
    Pack {
        #[arg(long)]
        mode: String,
        g1: String,
        g2: String,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Evaluate a theorem's hypothesis on a pair.
    Check {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        k: Option<usize>,
        g1: String,
        g2: String,
    },
    /// Check a theorem on every pair up to an order.
    Verify {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_order: usize,
        #[arg(long, default_value_t = 1)]
        min_order: usize,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Random labeled pairs per order for the relabeling spot check.
        #[arg(long, default_value_t = 1000)]
        spot_samples: usize,
        /// Also write the JSON report here.
        #[arg(long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Decide whether a graph is determined by its degree sequence.
    Unigraph { g: String },
    /// Count graph classes per order.
    Census {
        #[arg(long)]
        max_order: usize,
    },
    /// Recheck a certificate file; `-` reads stdin.
    Validate { file: PathBuf },
}

fn input_error(msg: String) -> commands::CommandOutput {
    commands::CommandOutput { stdout: String::new(), stderr: format!("error: {msg}\n"), code: commands::ExitCode::InputError }
}

fn run(cli: Cli) -> commands::CommandOutput {
    let json = cli.json;
    match cli.command {
        Command::Realize { sequence } => commands::realize(&sequence, json),
        Command::Pack { mode, g1, g2, budget } => match budget.budget() {
            Ok(b) => commands::pack(&mode, &g1, &g2, &b, json),
            Err(e) => input_error(e),
        },
        Command::Check { theorem, k, g1, g2 } => commands::check(&theorem, k, &g1, &g2, json),
        Command::Verify { theorem, max_order, min_order, workers, seed, spot_samples, output, budget } => {
            let theorem: TheoremId = match theorem.parse() {
                Ok(t) => t,
                Err(e) => return input_error(format!("{e}")),
            };
            let mut config = RunConfig::new(theorem, max_order);
            config.min_order = min_order;
            config.seed = seed;
            config.spot_samples = spot_samples;
            config.output = output;
            if let Some(w) = workers {
                config.workers = w;
            }
            match budget.budget() {
                Ok(b) => config.budget = b,
                Err(e) => return input_error(e),
            }
            commands::verify(&config, json)
        }
        Command::Unigraph { g } => commands::unigraph(&g, json),
        Command::Census { max_order } => commands::census(max_order, json),
        Command::Validate { file } => {
            let text = if file.as_os_str() == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map(|_| s)
            } else {
                std::fs::read_to_string(&file)
            };
            match text {
                Ok(t) => commands::validate(&t, json),
                Err(e) => input_error(format!("cannot read {}: {e}", file.display())),
            }
        }
    }
}

fn main() {
    let out = run(Cli::parse());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    std::io::stdout().flush().ok();
    std::process::exit(out.code as i32);
}
