use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use superbv::suite::{self, resolve_seed, Suite, SuiteConfig, SEED_ENV};

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Md,
}

/// Exact verification suites for odd symplectic superalgebra, BV calculus,
/// simplicial descent and the light-cone superparticle.
#[derive(Parser, Debug)]
#[command(name = "superbv", version, args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Suite to run: superlinalg, bv, simplex, descent, clifford, superparticle, zeta or all.
    #[arg(long, default_value = "all")]
    suite: String,

    /// Seed of all random inputs [default: $SUPERBV_SEED, else 2718].
    #[arg(long)]
    seed: Option<u64>,

    /// Random inputs per randomized check.
    #[arg(long, default_value_t = suite::DEFAULT_TRIALS)]
    trials: usize,

    /// Degree bound of random polynomials.
    #[arg(long, default_value_t = suite::DEFAULT_MAX_DEGREE)]
    max_degree: usize,

    /// Nerve truncation K for the descent scenario [default: the scenario's].
    #[arg(long)]
    truncation: Option<usize>,

    /// Descent scenario file [default: the bundled two-set scenario].
    #[arg(long)]
    scenario: Option<PathBuf>,

    #[arg(long, value_enum, default_value = "json")]
    report: Format,

    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,

    /// Record per-check wall times (makes reports run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print what a check verifies, its anchor and the origin of its constants.
    Explain { check: String },
}

fn run(cli: Cli) -> Result<bool> {
    let suite: Suite = cli.suite.parse()?;
    let env = std::env::var(SEED_ENV).ok();
    let (seed, seed_source) = resolve_seed(cli.seed, env.as_deref())?;
    let cfg = SuiteConfig {
        suite,
        seed,
        seed_source,
        trials: cli.trials,
        max_degree: cli.max_degree,
        truncation: cli.truncation,
        scenario: cli.scenario,
        timings: cli.timings,
    };
    let report = suite::run(&cfg)?;
    let text = match cli.report {
        Format::Json => report.to_json(),
        Format::Md => report.to_markdown(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    for c in report.checks.iter().filter(|c| !c.pass) {
        eprintln!("FAIL {}: {}", c.name, c.error.as_deref().or(c.residual.as_deref()).unwrap_or("-"));
    }
    eprintln!("{} checks, {} passed, {} failed", report.summary.total, report.summary.passed, report.summary.failed);
    Ok(report.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Some(Command::Explain { check }) => suite::explain(check).map(|t| {
            print!("{t}");
            true
        }).map_err(Into::into),
        None => run(cli),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("superbv: error: {e:#}");
            ExitCode::from(2)
        }
    }
}
