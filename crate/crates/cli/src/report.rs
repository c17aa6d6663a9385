//! Machine-readable reports. Field order is fixed by the struct definitions
//! and maps are ordered, so identical inputs serialize to identical bytes.

use std::collections::BTreeMap;

use minperiodic_core::ilp::{BoundCheck, ConstraintViolation};
use minperiodic_core::model::Violation;
use minperiodic_core::realize::{GraphViolation, PhaseGraph};
use minperiodic_core::regularize::OrbitSpace;
use minperiodic_core::{Breakdown, ComponentSolution, PointCounts, RegularizedComponent, Totals};
use serde::Serialize;

pub const ITERATE_NOTE: &str =
    "counts refer to an iterate of the diffeomorphism in which all isolated and boundary periodic points are fixed";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundTag {
    pub tag: String,
    pub formula: &'static str,
    pub value: u64,
    pub applies: bool,
    pub attained: bool,
}

impl From<&BoundCheck> for BoundTag {
    fn from(b: &BoundCheck) -> Self {
        Self {
            tag: format!("{}: {}", b.name, b.formula),
            formula: b.formula,
            value: b.value,
            applies: b.applies,
            attained: b.attained,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinReport {
    pub command: &'static str,
    pub solver: &'static str,
    pub note: &'static str,
    pub totals: Totals,
    pub regularization: Vec<RegularizedComponent>,
    pub solutions: Vec<ComponentSolution>,
    pub total: u64,
    pub breakdown: Breakdown,
    pub bounds: Vec<BoundTag>,
    pub annotations: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizeReport {
    #[serde(flatten)]
    pub minimum: MinReport,
    pub witness_isolated_total: u64,
    /// Regularized counts of the witness, in counts-file format.
    pub witness_counts: BTreeMap<String, PointCounts>,
    pub witness: PhaseGraph,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentAudit {
    pub component: String,
    pub counts: PointCounts,
    pub violations: Vec<ConstraintViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub command: &'static str,
    pub feasible: bool,
    pub components: Vec<ComponentAudit>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularizedEntry {
    #[serde(flatten)]
    pub component: RegularizedComponent,
    /// Orbit space of each cycle, assuming orientation-preserving returns.
    pub orbit_spaces: Vec<OrbitSpace>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RegularizeReport {
    pub command: &'static str,
    pub note: &'static str,
    pub totals: Totals,
    pub total_glued_sinks: u32,
    pub components: Vec<RegularizedEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvalidReport {
    pub command: &'static str,
    pub status: &'static str,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessFailure {
    pub command: &'static str,
    pub status: &'static str,
    pub violations: Vec<GraphViolation>,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
