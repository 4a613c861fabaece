//! Command dispatch: each request is parsed, analyzed and rendered into
//! an [`Outcome`] holding the exit code and the output streams.
//!
//! Exit codes: 0 success / all checks pass, 1 validation or verification
//! failure, 2 I/O or schema error, 3 size cap exceeded.

use std::path::PathBuf;

use clap::ValueEnum;

use partact_core::{
    burnside_orbit_count, global_orbit_size, globalize_with_cap, verify_globalization, Check,
    Error as CoreError, DEFAULT_SIZE_CAP,
};

use crate::render::{
    render_burnside, render_globalization, render_orbits, render_validation, OrbitRow,
};
use crate::spec::{parse_global, parse_spec, ParsedSpec};
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Tsv,
}

/// A fully parsed command-line request.
#[derive(Debug, Clone)]
pub enum Request {
    Validate { input: PathBuf, format: Format },
    Orbits { input: PathBuf, format: Format },
    Globalize { input: PathBuf, format: Format, max_size: Option<usize> },
    Verify { input: PathBuf, format: Format, global: Option<PathBuf>, max_size: Option<usize> },
    Burnside { input: PathBuf, format: Format, max_size: Option<usize> },
}

/// What a command produced: exit code, stdout payload, stderr diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { code: 0, stdout, stderr: String::new() }
    }

    fn failed(stdout: String) -> Outcome {
        Outcome { code: 1, stdout, stderr: String::new() }
    }
}

pub fn run(request: &Request) -> Outcome {
    match dispatch(request) {
        Ok(outcome) => outcome,
        Err(error) => Outcome {
            code: error.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {error}\n"),
        },
    }
}

fn dispatch(request: &Request) -> Result<Outcome, CliError> {
    match request {
        Request::Validate { input, format } => {
            let spec = parse_spec(input)?;
            let report = spec.action.validate();
            let rendered = render_validation(&report, *format);
            Ok(if report.passed() { Outcome::ok(rendered) } else { Outcome::failed(rendered) })
        }
        Request::Orbits { input, format } => {
            let spec = parse_spec(input)?;
            if let Some(outcome) = gate(&spec, *format) {
                return Ok(outcome);
            }
            let mut rows = Vec::new();
            for rep in spec.action.transversal()? {
                rows.push(OrbitRow {
                    report: spec.action.orbit_report(rep)?,
                    predicted: global_orbit_size(&spec.action, rep)?,
                });
            }
            Ok(Outcome::ok(render_orbits(&spec.action, &rows, *format)))
        }
        Request::Globalize { input, format, max_size } => {
            let spec = parse_spec(input)?;
            if let Some(outcome) = gate(&spec, *format) {
                return Ok(outcome);
            }
            let glob = globalize_with_cap(&spec.action, max_size.unwrap_or(DEFAULT_SIZE_CAP))?;
            Ok(Outcome::ok(render_globalization(&spec.action, &glob, *format)))
        }
        Request::Verify { input, format, global, max_size } => {
            let spec = parse_spec(input)?;
            if let Some(outcome) = gate(&spec, *format) {
                return Ok(outcome);
            }
            let report = match global {
                None => {
                    let glob =
                        globalize_with_cap(&spec.action, max_size.unwrap_or(DEFAULT_SIZE_CAP))?;
                    verify_globalization(&spec.action, &glob.action, &glob.embedding)?
                }
                Some(path) => {
                    let fixture = parse_global(path, &spec)?;
                    let mut report =
                        verify_globalization(&spec.action, &fixture.action, &fixture.embedding)?;
                    if let Some(stated) = &fixture.stated_orbits {
                        report.push(stated_orbits_check(stated, &fixture.action));
                    }
                    report
                }
            };
            let rendered = render_validation(&report, *format);
            Ok(if report.passed() { Outcome::ok(rendered) } else { Outcome::failed(rendered) })
        }
        Request::Burnside { input, format, max_size } => {
            let spec = parse_spec(input)?;
            if let Some(outcome) = gate(&spec, *format) {
                return Ok(outcome);
            }
            let glob = globalize_with_cap(&spec.action, max_size.unwrap_or(DEFAULT_SIZE_CAP))?;
            let count = burnside_orbit_count(&glob.action)?;
            Ok(Outcome::ok(render_burnside(&glob.action, count, *format)))
        }
    }
}

/// Commands beyond `validate` require a valid partial action; on failure
/// they print the validation report and exit 1.
fn gate(spec: &ParsedSpec, format: Format) -> Option<Outcome> {
    let report = spec.action.validate();
    if report.passed() {
        None
    } else {
        Some(Outcome::failed(render_validation(&report, format)))
    }
}

/// Orbits stated in a fixture must match the ones recomputed from its
/// permutations.
fn stated_orbits_check(
    stated: &[Vec<usize>],
    global: &partact_core::GlobalAction,
) -> Check {
    let mut computed = global.orbits();
    computed.sort();
    if stated == computed.as_slice() {
        Check::pass("stated-orbits")
    } else {
        Check::fail(
            "stated-orbits",
            format!("file states {} orbits, permutations give {}", stated.len(), computed.len()),
        )
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Schema { .. } => 2,
            CliError::Invalid { .. } => 1,
            CliError::Core(CoreError::SizeCap { .. }) => 3,
            CliError::Core(_) => 1,
        }
    }
}
