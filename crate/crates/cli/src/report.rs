use std::collections::BTreeMap;
use std::io;
use std::process::ExitCode;

use fitting_core::suites::SuiteOutcome;
use fitting_core::Error;
use serde_json::Value;
use thiserror::Error;

/// Result of a command that ran to completion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Ok,
    Counterexample,
    Budget,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        match self {
            CliError::Core(Error::BudgetExceeded { .. } | Error::InsufficientBound { .. }) => {
                ExitCode::from(3)
            }
            _ => ExitCode::from(1),
        }
    }
}

impl Outcome {
    pub fn exit_code(self) -> ExitCode {
        match self {
            Outcome::Ok => ExitCode::SUCCESS,
            Outcome::Counterexample => ExitCode::from(2),
            Outcome::Budget => ExitCode::from(3),
        }
    }
}

/// `writeln!` into a `String`, which cannot fail.
#[macro_export]
macro_rules! outln {
    ($out:expr, $($arg:tt)*) => {{
        use std::fmt::Write as _;
        let _ = writeln!($out, $($arg)*);
    }};
}

pub fn push_json(out: &mut String, value: &Value) {
    outln!(
        out,
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

/// `(variable count, instance)` so that table rows sort by ring size first.
fn sort_key(instance: &str) -> (usize, &str) {
    let vars = instance
        .strip_prefix("vars: ")
        .and_then(|rest| rest.split(';').next())
        .map_or(0, |v| v.split(',').count());
    (vars, instance)
}

const VACUOUS: &str = " [hypothesis not met]";

pub fn push_suite_table(out: &mut String, outcome: &SuiteOutcome, verbose: bool) {
    let failures = outcome.failures().count();
    outln!(
        out,
        "suite {} (seed {}): {} instances, {} checks, {} failures",
        outcome.suite,
        outcome.seed,
        outcome.instances,
        outcome.reports.len(),
        failures
    );
    // statement -> (checks, vacuous, failures)
    let mut stats: BTreeMap<&str, (usize, usize, usize)> = BTreeMap::new();
    for r in &outcome.reports {
        let e = stats.entry(r.statement.as_str()).or_default();
        e.0 += 1;
        e.1 += usize::from(r.instance.ends_with(VACUOUS));
        e.2 += usize::from(!r.pass);
    }
    outln!(
        out,
        "{:<32} {:>8} {:>8} {:>8}",
        "statement",
        "checks",
        "vacuous",
        "failures"
    );
    for (name, (checks, vacuous, fails)) in &stats {
        outln!(out, "{name:<32} {checks:>8} {vacuous:>8} {fails:>8}");
    }
    for note in &outcome.notes {
        outln!(out, "note: {note}");
    }
    let mut rows: Vec<_> = outcome
        .reports
        .iter()
        .filter(|r| verbose || !r.pass)
        .collect();
    rows.sort_by(|a, b| {
        (&a.statement, sort_key(&a.instance)).cmp(&(&b.statement, sort_key(&b.instance)))
    });
    for r in rows {
        let tag = if r.pass { "PASS" } else { "FAIL" };
        outln!(out, "{tag} {} | {}", r.statement, r.instance);
        if let Some(w) = &r.witness {
            outln!(out, "  witness: {w}");
        }
    }
}
