//! Scenario-driven front end: reads a scenario document, classifies every
//! element, and writes a report whose certificates anyone can re-check.
//!
//! Scalars are exact strings (`"3"`, `"-1/2"`, `"1/2+3i"`); decimals are
//! rejected. Reports carry SHA-256 digests per certificate and over the
//! whole document.

pub mod codec;
pub mod error;
pub mod report;
pub mod run;
pub mod scenario;
pub mod verify;

use std::fmt::Write as _;

pub use error::CliError;
pub use report::Report;
pub use run::{run_scenario, RunOptions, DEFAULT_BOUND, DEFAULT_SEED};
pub use scenario::Scenario;
pub use verify::{verify_report, verify_text, VerifySummary};

/// Parses and runs a scenario document, then re-verifies the report.
///
/// The report is returned even when re-verification fails, so callers can
/// still emit it next to the error.
pub fn run_text(text: &str, opts: &RunOptions) -> Result<(Report, Result<VerifySummary, CliError>), CliError> {
    let (scenario, echo) = Scenario::parse(text)?;
    let report = run_scenario(&scenario, echo, opts)?;
    let check = verify_report(&report);
    Ok((report, check))
}

pub fn render_json(report: &Report) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group: {}", serde_json::to_string(&report.group).expect("group serializes"));
    for e in &report.entries {
        let route = e.route.as_deref().map(|r| format!(" [{r}]")).unwrap_or_default();
        let _ = writeln!(
            out,
            "entry {}: order {}, {}, {}, {} certificate(s){route}",
            e.index,
            e.order,
            e.real,
            e.rational,
            e.certificates.len()
        );
        for note in &e.notes {
            let _ = writeln!(out, "  note: {note}");
        }
    }
    for c in &report.checks {
        let status = if c.passed { "passed" } else { "FAILED" };
        let _ = writeln!(out, "check {}: {status} ({})", c.name, c.detail);
    }
    let _ = writeln!(out, "digest: {}", report.digest);
    out
}
