//! Named verification suites over seeded inputs, and their reports.
//!
//! Every check evaluates to an exact residual; a check passes iff its
//! residual is the zero polynomial (printed `0`) or, for the few inequality
//! checks, iff the inequality holds at every sampled point.

mod bv;
mod catalog;
mod clifford;
mod descent;
mod linalg;
mod particle;
mod simplex;
mod zeta;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::parallel::*;
use crate::superpoly::Poly;

pub use catalog::{explain, lookup, CheckInfo, CATALOG};

/// Version tag written into every report.
pub const SCHEMA: &str = "superbv-report/1";
/// Environment variable that replaces [`DEFAULT_SEED`] when `--seed` is absent.
pub const SEED_ENV: &str = "SUPERBV_SEED";
pub const DEFAULT_SEED: u64 = 2718;
pub const DEFAULT_TRIALS: usize = 10;
pub const DEFAULT_MAX_DEGREE: usize = 4;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SuiteError {
    #[error("unknown suite `{0}` (expected one of superlinalg, bv, simplex, descent, clifford, superparticle, zeta, all)")]
    UnknownSuite(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("{0}")]
    Scenario(String),
    #[error("invalid seed `{0}`")]
    Seed(String),
    #[error("internal failure: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Superlinalg,
    Bv,
    Simplex,
    Descent,
    Clifford,
    Superparticle,
    Zeta,
    All,
}

impl Suite {
    pub const MEMBERS: [Suite; 7] =
        [Suite::Superlinalg, Suite::Bv, Suite::Simplex, Suite::Descent, Suite::Clifford, Suite::Superparticle, Suite::Zeta];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Superlinalg => "superlinalg",
            Suite::Bv => "bv",
            Suite::Simplex => "simplex",
            Suite::Descent => "descent",
            Suite::Clifford => "clifford",
            Suite::Superparticle => "superparticle",
            Suite::Zeta => "zeta",
            Suite::All => "all",
        }
    }

    /// The concrete suites run for this selection.
    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => Self::MEMBERS.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = SuiteError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::MEMBERS
            .into_iter()
            .chain([Suite::All])
            .find(|m| m.name() == s)
            .ok_or_else(|| SuiteError::UnknownSuite(s.to_string()))
    }
}

/// Where the seed came from; echoed into the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SeedSource {
    Default,
    Flag,
    /// The named environment variable.
    Env(String),
}

impl SeedSource {
    fn label(&self) -> String {
        match self {
            SeedSource::Default => "default".into(),
            SeedSource::Flag => "flag".into(),
            SeedSource::Env(v) => format!("env:{v}"),
        }
    }
}

/// Seed precedence: the flag, then the environment value, then [`DEFAULT_SEED`].
pub fn resolve_seed(flag: Option<u64>, env: Option<&str>) -> Result<(u64, SeedSource), SuiteError> {
    if let Some(s) = flag {
        return Ok((s, SeedSource::Flag));
    }
    match env {
        Some(v) => {
            let s = v.trim().parse().map_err(|_| SuiteError::Seed(v.to_string()))?;
            Ok((s, SeedSource::Env(SEED_ENV.to_string())))
        }
        None => Ok((DEFAULT_SEED, SeedSource::Default)),
    }
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub seed: u64,
    pub seed_source: SeedSource,
    /// Random inputs per randomized check.
    pub trials: usize,
    /// Degree bound of random polynomials.
    pub max_degree: usize,
    /// Nerve truncation `K`; `None` keeps the scenario's value.
    pub truncation: Option<usize>,
    /// Descent scenario file; `None` runs the bundled two-set scenario.
    pub scenario: Option<PathBuf>,
    /// Record wall times. Off by default so reports are byte-reproducible.
    pub timings: bool,
}

impl SuiteConfig {
    pub fn new(suite: Suite) -> Self {
        SuiteConfig {
            suite,
            seed: DEFAULT_SEED,
            seed_source: SeedSource::Default,
            trials: DEFAULT_TRIALS,
            max_degree: DEFAULT_MAX_DEGREE,
            truncation: None,
            scenario: None,
            timings: false,
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self.seed_source = SeedSource::Flag;
        self
    }

    pub fn with_trials(mut self, trials: usize) -> Self {
        self.trials = trials;
        self
    }
}

/// Result of one check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Outcome {
    /// Canonical residual text; `"0"` passes.
    Residual(String),
    /// A computed quantity reported for reference; always passes.
    Value(String),
    /// The check could not be evaluated.
    Error(String),
}

impl Outcome {
    pub(crate) fn zero() -> Self {
        Outcome::Residual("0".into())
    }

    pub(crate) fn poly(p: &Poly) -> Self {
        Outcome::Residual(p.canonical().to_text())
    }

    /// Inequality checks: `0` when `ok`, otherwise a description of the violation.
    pub(crate) fn holds(ok: bool, violation: impl FnOnce() -> String) -> Self {
        if ok {
            Self::zero()
        } else {
            Outcome::Residual(violation())
        }
    }

    fn passes(&self) -> bool {
        match self {
            Outcome::Residual(r) => r == "0",
            Outcome::Value(_) => true,
            Outcome::Error(_) => false,
        }
    }
}

/// First failure over per-trial residuals, in trial order.
pub(crate) fn first_failure(results: Vec<Result<Poly, String>>) -> Outcome {
    for (i, r) in results.into_iter().enumerate() {
        match r {
            Err(e) => return Outcome::Error(format!("trial {i}: {e}")),
            Ok(p) if !p.is_zero() => return Outcome::poly(&p),
            Ok(_) => {}
        }
    }
    Outcome::zero()
}

/// Evaluates `f` on trials `0..n`, in parallel when enabled.
pub(crate) fn over_trials<F>(n: usize, f: F) -> Outcome
where
    F: Fn(usize) -> Result<Poly, String> + Sync + Send,
{
    first_failure((0..n).into_par_iter().map(f).collect())
}

type Eval = Box<dyn FnOnce() -> Vec<(String, usize, Outcome)> + Send>;

/// A deferred check producing one or more named records.
pub(crate) struct Check {
    eval: Eval,
}

impl Check {
    /// One record `name`, evaluated over `trials` inputs.
    pub(crate) fn one(name: impl Into<String>, trials: usize, f: impl FnOnce() -> Outcome + Send + 'static) -> Self {
        let name = name.into();
        Check { eval: Box::new(move || vec![(name, trials, f())]) }
    }

    /// Several records from one shared computation.
    pub(crate) fn many(f: impl FnOnce() -> Vec<(String, usize, Outcome)> + Send + 'static) -> Self {
        Check { eval: Box::new(f) }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub suite: Suite,
    pub anchor: String,
    /// Canonical residual text, `"0"` on pass; `null` for value records and errors.
    pub residual: Option<String>,
    /// Reported quantity of a value record.
    pub value: Option<String>,
    pub error: Option<String>,
    pub pass: bool,
    pub trials: usize,
    /// Wall time of the producing computation; `null` unless timings are on.
    pub wall_time_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub suite: Suite,
    pub seed: u64,
    pub seed_source: String,
    pub trials: usize,
    pub max_degree: usize,
    pub truncation: Option<usize>,
    pub scenario: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub config: ConfigEcho,
    pub checks: Vec<CheckRecord>,
    pub summary: Summary,
    pub pass: bool,
}

fn build(suite: Suite, cfg: &SuiteConfig) -> Result<Vec<Check>, SuiteError> {
    Ok(match suite {
        Suite::Superlinalg => linalg::checks(cfg),
        Suite::Bv => bv::checks(cfg),
        Suite::Simplex => simplex::checks(cfg),
        Suite::Descent => descent::checks(cfg)?,
        Suite::Clifford => clifford::checks(cfg)?,
        Suite::Superparticle => particle::checks(cfg)?,
        Suite::Zeta => zeta::checks(cfg),
        Suite::All => unreachable!("expanded by members()"),
    })
}

/// Runs every check of the selected suite. Records are sorted by name.
pub fn run(cfg: &SuiteConfig) -> Result<Report, SuiteError> {
    let mut checks = Vec::new();
    for s in cfg.suite.members() {
        checks.extend(build(s, cfg)?);
    }
    let timings = cfg.timings;
    let raw: Vec<Vec<(String, usize, Outcome, Option<u64>)>> = checks
        .into_par_iter()
        .map(|c| {
            let start = Instant::now();
            let out = (c.eval)();
            let ms = timings.then(|| start.elapsed().as_millis() as u64);
            out.into_iter().map(|(n, t, o)| (n, t, o, ms)).collect()
        })
        .collect();

    let mut records = Vec::new();
    for (name, trials, outcome, ms) in raw.into_iter().flatten() {
        let info = lookup(&name).ok_or_else(|| SuiteError::Internal(format!("check `{name}` has no catalog entry")))?;
        let pass = outcome.passes();
        let (residual, value, error) = match outcome {
            Outcome::Residual(r) => (Some(r), None, None),
            Outcome::Value(v) => (None, Some(v), None),
            Outcome::Error(e) => (None, None, Some(e)),
        };
        records.push(CheckRecord {
            name,
            suite: info.suite,
            anchor: info.anchor.to_string(),
            residual,
            value,
            error,
            pass,
            trials,
            wall_time_ms: ms,
        });
    }
    records.sort_by(|a, b| a.name.cmp(&b.name));
    if let Some(w) = records.windows(2).find(|w| w[0].name == w[1].name) {
        return Err(SuiteError::Internal(format!("duplicate check name `{}`", w[0].name)));
    }
    let passed = records.iter().filter(|r| r.pass).count();
    let summary = Summary { total: records.len(), passed, failed: records.len() - passed };
    Ok(Report {
        schema: SCHEMA,
        config: ConfigEcho {
            suite: cfg.suite,
            seed: cfg.seed,
            seed_source: cfg.seed_source.label(),
            trials: cfg.trials,
            max_degree: cfg.max_degree,
            truncation: cfg.truncation,
            scenario: cfg.scenario.as_ref().map(|p| p.display().to_string()),
        },
        pass: summary.failed == 0,
        checks: records,
        summary,
    })
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let c = &self.config;
        let opt = |v: Option<String>| v.unwrap_or_else(|| "-".into());
        let mut s = format!("# superbv report ({})\n\n", self.schema);
        s.push_str(&format!("- suite: {}\n- seed: {} ({})\n- trials: {}\n- max degree: {}\n", c.suite, c.seed, c.seed_source, c.trials, c.max_degree));
        s.push_str(&format!("- truncation: {}\n- scenario: {}\n\n", opt(c.truncation.map(|k| k.to_string())), opt(c.scenario.clone())));
        s.push_str("| check | suite | pass | trials | residual | anchor |\n|---|---|---|---|---|---|\n");
        for r in &self.checks {
            let res = match (&r.residual, &r.value, &r.error) {
                (Some(x), _, _) => format!("`{}`", md_cell(x)),
                (_, Some(v), _) => format!("value `{}`", md_cell(v)),
                (_, _, Some(e)) => format!("error: {}", md_cell(e)),
                _ => String::new(),
            };
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} |\n",
                md_cell(&r.name),
                r.suite,
                if r.pass { "yes" } else { "**no**" },
                r.trials,
                res,
                md_cell(&r.anchor)
            ));
        }
        s.push_str(&format!("\n{} checks, {} passed, {} failed.\n", self.summary.total, self.summary.passed, self.summary.failed));
        s
    }
}

#[cfg(test)]
mod tests;
