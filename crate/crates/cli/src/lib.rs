//! Command implementations behind the `minperiodic` binary.
//!
//! Every command returns an [`Outcome`] holding the exit code and the exact
//! stdout/stderr text, so the binary is a thin shell around [`run`].

pub mod files;
pub mod report;

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use minperiodic_core::ilp::{audit, global_minimum_with, IlpError};
use minperiodic_core::model::Violation;
use minperiodic_core::realize::{
    self, isolated_total, regularized_counts, GraphViolation, RealizeError,
};
use minperiodic_core::regularize::{orbit_space_orientation, RegularizeError};
use minperiodic_core::{model, regularize, validate, Solver, SystemSpec, ValidationReport};
use thiserror::Error;

use report::{
    to_json, AuditReport, BoundTag, ComponentAudit, InvalidReport, MinReport, RealizeReport,
    RegularizeReport, RegularizedEntry, WitnessFailure, ITERATE_NOTE,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "minperiodic",
    version,
    about = "Minimum isolated periodic points for 3-diffeomorphisms with expanding attractors"
)]
pub struct Cli {
    /// Solve with exhaustive enumeration instead of branch-and-bound.
    #[arg(long, global = true)]
    pub oracle: bool,
    /// Upper bound on each count for the enumeration.
    #[arg(long = "box", value_name = "B", global = true, requires = "oracle")]
    pub bound: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report the minimum number of isolated periodic points.
    Min { spec: PathBuf },
    /// Check per-component counts against the constraint systems.
    Audit { spec: PathBuf, counts: PathBuf },
    /// Build a witness phase graph attaining the minimum.
    Realize { spec: PathBuf },
    /// Show the regularized components.
    Regularize { spec: PathBuf },
}

impl Cli {
    pub fn solver(&self) -> Solver {
        if self.oracle {
            Solver::BruteForce { bound: self.bound }
        } else {
            Solver::Simplex
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("invalid system:\n{0}")]
    Invalid(ValidationReport),
    #[error(transparent)]
    Ilp(#[from] IlpError),
    #[error(transparent)]
    Regularize(#[from] RegularizeError),
    #[error("witness failed its own checks")]
    Witness(Vec<GraphViolation>),
    #[error("witness has {found} isolated points, minimum is {expected}")]
    WitnessTotal { expected: u64, found: u64 },
    #[error(transparent)]
    Unsupported(RealizeError),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Unsupported(_) => EXIT_UNSUPPORTED,
            _ => EXIT_VIOLATION,
        }
    }
}

impl From<RealizeError> for CliError {
    fn from(e: RealizeError) -> Self {
        match e {
            RealizeError::Regularize(e) => CliError::Regularize(e),
            other => CliError::Unsupported(other),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn solver_name(solver: Solver) -> &'static str {
    match solver {
        Solver::Simplex => "simplex",
        Solver::BruteForce { .. } => "oracle",
    }
}

/// Reads and validates a spec file.
pub fn load_spec(path: &Path) -> Result<SystemSpec, CliError> {
    let spec = files::read_spec(path)?;
    let report = validate(&spec);
    if report.is_valid() {
        Ok(spec)
    } else {
        Err(CliError::Invalid(report))
    }
}

fn annotations(total: u64, k: u64) -> Vec<String> {
    if total != k {
        return Vec::new();
    }
    [
        "total equals the number of bunches",
        "every isolated saddle has a one-dimensional unstable manifold",
        "each complement component is a punctured 3-sphere (stated, not computed)",
    ]
    .iter()
    .map(|s| (*s).to_owned())
    .collect()
}

pub fn minimum(spec: &SystemSpec, solver: Solver) -> Result<MinReport, CliError> {
    let regularization = regularize(spec)?;
    let g = global_minimum_with(spec, solver)?;
    let k = u64::from(g.totals.bunches());
    Ok(MinReport {
        command: "min",
        solver: solver_name(solver),
        note: ITERATE_NOTE,
        totals: g.totals,
        regularization,
        solutions: g.per_component,
        total: g.total,
        breakdown: g.breakdown,
        bounds: g.bounds.iter().map(BoundTag::from).collect(),
        annotations: annotations(g.total, k),
    })
}

pub fn cmd_min(path: &Path, solver: Solver) -> Result<MinReport, CliError> {
    minimum(&load_spec(path)?, solver)
}

pub fn cmd_regularize(path: &Path) -> Result<RegularizeReport, CliError> {
    let spec = load_spec(path)?;
    let totals = model::totals(&spec).map_err(|e| CliError::Invalid(e.0))?;
    let components: Vec<RegularizedEntry> = regularize(&spec)?
        .into_iter()
        .map(|rc| RegularizedEntry {
            orbit_spaces: rc
                .cycle_periods
                .iter()
                .map(|&p| orbit_space_orientation(p, false))
                .collect(),
            component: rc,
        })
        .collect();
    Ok(RegularizeReport {
        command: "regularize",
        note: ITERATE_NOTE,
        totals,
        total_glued_sinks: components.iter().map(|c| c.component.glued_sinks).sum(),
        components,
    })
}

pub fn audit_counts(
    spec: &SystemSpec,
    counts: &files::CountsFile,
) -> Result<AuditReport, CliError> {
    let known: BTreeSet<&str> = spec.components.iter().map(|c| c.id.as_str()).collect();
    if let Some(unknown) = counts.keys().find(|k| !known.contains(k.as_str())) {
        return Err(CliError::Input(format!(
            "counts: unknown component '{unknown}'"
        )));
    }
    let mut components = Vec::new();
    for rc in regularize(spec)? {
        let c = counts.get(&rc.source_component).ok_or_else(|| {
            CliError::Input(format!(
                "counts: missing component '{}'",
                rc.source_component
            ))
        })?;
        let violations = audit(&rc, c).map_err(IlpError::from)?;
        components.push(ComponentAudit {
            component: rc.source_component,
            counts: *c,
            violations,
        });
    }
    Ok(AuditReport {
        command: "audit",
        feasible: components.iter().all(|c| c.violations.is_empty()),
        components,
    })
}

pub fn cmd_audit(spec: &Path, counts: &Path) -> Result<AuditReport, CliError> {
    let spec = load_spec(spec)?;
    audit_counts(&spec, &files::read_counts(counts)?)
}

pub fn cmd_realize(path: &Path, solver: Solver) -> Result<RealizeReport, CliError> {
    let spec = load_spec(path)?;
    let minimum = minimum(&spec, solver)?;
    let g = realize::witness(&spec)?;
    let problems = realize::validate_phase_graph(&spec, &g);
    if !problems.is_empty() {
        return Err(CliError::Witness(problems));
    }
    let witness_isolated_total = isolated_total(&g);
    if witness_isolated_total != minimum.total {
        return Err(CliError::WitnessTotal {
            expected: minimum.total,
            found: witness_isolated_total,
        });
    }
    Ok(RealizeReport {
        witness_counts: regularized_counts(&spec, &g)?,
        minimum: MinReport {
            command: "realize",
            ..minimum
        },
        witness_isolated_total,
        witness: g,
    })
}

fn failure(command: &'static str, err: CliError) -> Outcome {
    let code = err.exit_code();
    match err {
        CliError::Invalid(report) => {
            let stderr = report
                .violations
                .iter()
                .map(|v| format!("violation: {v}\n"))
                .collect();
            let violations: Vec<Violation> = report.violations;
            Outcome {
                code,
                stdout: to_json(&InvalidReport {
                    command,
                    status: "invalid",
                    violations,
                }),
                stderr,
            }
        }
        CliError::Witness(violations) => {
            let stderr = violations
                .iter()
                .map(|v| format!("violation: {v:?}\n"))
                .collect();
            Outcome {
                code,
                stdout: to_json(&WitnessFailure {
                    command,
                    status: "witness-failed",
                    violations,
                }),
                stderr,
            }
        }
        other => Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {other}\n"),
        },
    }
}

fn finish<T: serde::Serialize>(command: &'static str, result: Result<T, CliError>) -> Outcome {
    match result {
        Ok(report) => Outcome {
            code: EXIT_OK,
            stdout: to_json(&report),
            stderr: String::new(),
        },
        Err(e) => failure(command, e),
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let solver = cli.solver();
    match &cli.command {
        Command::Min { spec } => finish("min", cmd_min(spec, solver)),
        Command::Regularize { spec } => finish("regularize", cmd_regularize(spec)),
        Command::Realize { spec } => finish("realize", cmd_realize(spec, solver)),
        Command::Audit { spec, counts } => match cmd_audit(spec, counts) {
            Ok(report) if report.feasible => finish("audit", Ok(report)),
            Ok(report) => {
                let stderr = report
                    .components
                    .iter()
                    .flat_map(|c| c.violations.iter().map(move |v| (c, v)))
                    .map(|(c, v)| format!("violation: {}: {v}\n", c.component))
                    .collect();
                Outcome {
                    code: EXIT_VIOLATION,
                    stdout: to_json(&report),
                    stderr,
                }
            }
            Err(e) => failure("audit", e),
        },
    }
}
