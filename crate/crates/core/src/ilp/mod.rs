//! Per-component integer programs over fixed-point counts by Morse index.
//!
//! For a regularized component let `C_j` be the number of fixed points with
//! `j`-dimensional unstable manifold. Every component obeys the Lefschetz
//! identity `C3 - C2 + C1 - C0 = 0`; the remaining constraints depend on the
//! case:
//!
//! | case                        | constraints                                            | even       |
//! |-----------------------------|--------------------------------------------------------|------------|
//! | plus side, orientable       | `C1 - C0 ≥ -1`, `C0 ≥ l2`, `C3 ≥ 1`                    |            |
//! | minus side (double cover)   | `C0 ≥ l1 + 2 l2`, `C1 - C0 ≥ l1 - 2`, `C3 ≥ 2`         | C1, C2, C3 |
//! | plus side, non-orientable   | as the orientable plus case, and `C1 ≥ 1`, `C2 ≥ 1`    |            |
//!
//! [`solve_min`] solves these exactly (rational simplex, branch-and-bound,
//! parity by substitution `C = 2D`); [`brute_force_min`] is an independent
//! enumeration oracle.

mod branch;
mod oracle;
mod simplex;

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{self, InvalidSpec, Side, SystemSpec, Totals};
use crate::regularize::{self, RegularizeError, RegularizedComponent};

pub use oracle::{brute_force_min, OracleError};

use branch::IntegerProgram;
use simplex::{Row, Sense};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Var {
    C0,
    C1,
    C2,
    C3,
}

impl Var {
    pub const ALL: [Var; 4] = [Var::C0, Var::C1, Var::C2, Var::C3];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C{}", self.index())
    }
}

/// Fixed points of a regularized component, by unstable dimension.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PointCounts {
    #[serde(rename = "C0")]
    pub c0: u64,
    #[serde(rename = "C1")]
    pub c1: u64,
    #[serde(rename = "C2")]
    pub c2: u64,
    #[serde(rename = "C3")]
    pub c3: u64,
}

impl PointCounts {
    pub fn new(c0: u64, c1: u64, c2: u64, c3: u64) -> Self {
        Self { c0, c1, c2, c3 }
    }

    pub fn as_array(&self) -> [u64; 4] {
        [self.c0, self.c1, self.c2, self.c3]
    }

    pub fn total(&self) -> u64 {
        self.c0 + self.c1 + self.c2 + self.c3
    }

    /// `C3 - C2 + C1 - C0`.
    pub fn alternating_sum(&self) -> i128 {
        self.c3 as i128 - self.c2 as i128 + self.c1 as i128 - self.c0 as i128
    }
}

impl fmt::Display for PointCounts {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.c0, self.c1, self.c2, self.c3)
    }
}

/// `coeffs · (C0, C1, C2, C3)` compared against `rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    pub name: String,
    pub coeffs: [BigRational; 4],
    pub rhs: BigRational,
}

impl LinearConstraint {
    pub fn new(name: impl Into<String>, coeffs: [i64; 4], rhs: i64) -> Self {
        Self {
            name: name.into(),
            coeffs: coeffs.map(|c| BigRational::from_integer(c.into())),
            rhs: BigRational::from_integer(rhs.into()),
        }
    }

    pub fn lhs(&self, p: &PointCounts) -> BigRational {
        self.coeffs
            .iter()
            .zip(p.as_array())
            .map(|(a, x)| a * BigRational::from_integer(x.into()))
            .fold(BigRational::zero(), |acc, v| acc + v)
    }

    fn render(&self, relation: &str) -> String {
        let mut out = String::new();
        for (v, a) in Var::ALL.iter().zip(&self.coeffs).rev() {
            if a.is_zero() {
                continue;
            }
            let sign = if *a < BigRational::zero() { "-" } else { "+" };
            let mag = if *a < BigRational::zero() {
                -a.clone()
            } else {
                a.clone()
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
            }
            out.push_str(&v.to_string());
        }
        format!("{out} {relation} {}", self.rhs)
    }
}

/// Linear equalities, `≥` inequalities and evenness requirements over the
/// four counts, with a linear objective to minimize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstraintSystem {
    pub equalities: Vec<LinearConstraint>,
    pub inequalities: Vec<LinearConstraint>,
    pub parities: BTreeSet<Var>,
    pub objective: [BigRational; 4],
}

impl Default for ConstraintSystem {
    fn default() -> Self {
        Self {
            equalities: Vec::new(),
            inequalities: Vec::new(),
            parities: BTreeSet::new(),
            objective: std::array::from_fn(|_| BigRational::one()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    AtLeast,
    Even,
}

/// One constraint that a candidate fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintViolation {
    pub constraint: String,
    pub relation: Relation,
    /// Human-readable form of the constraint.
    pub expression: String,
    /// Value of the left-hand side at the candidate.
    pub value: String,
}

impl fmt::Display for ConstraintViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (left side is {})",
            self.constraint, self.expression, self.value
        )
    }
}

impl ConstraintSystem {
    pub fn equal(mut self, name: &str, coeffs: [i64; 4], rhs: i64) -> Self {
        self.equalities
            .push(LinearConstraint::new(name, coeffs, rhs));
        self
    }

    pub fn at_least(mut self, name: &str, coeffs: [i64; 4], rhs: i64) -> Self {
        self.inequalities
            .push(LinearConstraint::new(name, coeffs, rhs));
        self
    }

    pub fn even(mut self, var: Var) -> Self {
        self.parities.insert(var);
        self
    }

    pub fn with_objective(mut self, objective: [BigRational; 4]) -> Self {
        self.objective = objective;
        self
    }

    pub fn objective_value(&self, p: &PointCounts) -> BigRational {
        LinearConstraint {
            name: String::new(),
            coeffs: self.objective.clone(),
            rhs: BigRational::zero(),
        }
        .lhs(p)
    }

    /// Every equality, inequality and parity that `p` fails, in that order.
    pub fn violations(&self, p: &PointCounts) -> Vec<ConstraintViolation> {
        let mut out = Vec::new();
        for c in &self.equalities {
            let lhs = c.lhs(p);
            if lhs != c.rhs {
                out.push(ConstraintViolation {
                    constraint: c.name.clone(),
                    relation: Relation::Equal,
                    expression: c.render("="),
                    value: lhs.to_string(),
                });
            }
        }
        for c in &self.inequalities {
            let lhs = c.lhs(p);
            if lhs < c.rhs {
                out.push(ConstraintViolation {
                    constraint: c.name.clone(),
                    relation: Relation::AtLeast,
                    expression: c.render(">="),
                    value: lhs.to_string(),
                });
            }
        }
        for v in &self.parities {
            let x = p.as_array()[v.index()];
            if !x.is_multiple_of(2) {
                out.push(ConstraintViolation {
                    constraint: format!("parity-{}", v.to_string().to_lowercase()),
                    relation: Relation::Even,
                    expression: format!("{v} even"),
                    value: x.to_string(),
                });
            }
        }
        out
    }

    pub fn is_feasible(&self, p: &PointCounts) -> bool {
        self.violations(p).is_empty()
    }
}

/// Which constraint family a regularized component falls into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentCase {
    /// Plus side, orientable.
    Orientable,
    /// Minus side, after the double cover.
    Covered,
    /// Plus side, non-orientable.
    NonOrientable,
}

impl ComponentCase {
    pub fn of(rc: &RegularizedComponent) -> Self {
        if rc.covered {
            ComponentCase::Covered
        } else if rc.component_orientable {
            ComponentCase::Orientable
        } else {
            ComponentCase::NonOrientable
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BuildError {
    #[error("covered component '{component}' needs a positive even l1, got {l1}")]
    CoveredDegreeOne { component: String, l1: u32 },
}

pub const LEFSCHETZ: &str = "lefschetz";
pub const CONNECTIVITY: &str = "connectivity";
pub const GLUED_SINKS: &str = "glued-sinks";
pub const SOURCES: &str = "sources";
pub const SADDLE_BOUND: &str = "saddle-bound";
pub const INDEX_ONE_SADDLE: &str = "index1-saddle";
pub const INDEX_TWO_SADDLE: &str = "index2-saddle";

pub fn build_constraints(rc: &RegularizedComponent) -> Result<ConstraintSystem, BuildError> {
    let l1 = i64::from(rc.l1);
    let l2 = i64::from(rc.l2);
    let base = ConstraintSystem::default().equal(LEFSCHETZ, [-1, 1, -1, 1], 0);
    let cs = match ComponentCase::of(rc) {
        ComponentCase::Covered => {
            if rc.l1 == 0 || rc.l1 % 2 == 1 {
                return Err(BuildError::CoveredDegreeOne {
                    component: rc.source_component.clone(),
                    l1: rc.l1,
                });
            }
            base.at_least(GLUED_SINKS, [1, 0, 0, 0], l1 + 2 * l2)
                .at_least(SADDLE_BOUND, [-1, 1, 0, 0], l1 - 2)
                .at_least(SOURCES, [0, 0, 0, 1], 2)
                .even(Var::C1)
                .even(Var::C2)
                .even(Var::C3)
        }
        case => {
            let cs = base
                .at_least(CONNECTIVITY, [-1, 1, 0, 0], -1)
                .at_least(GLUED_SINKS, [1, 0, 0, 0], l2)
                .at_least(SOURCES, [0, 0, 0, 1], 1);
            if case == ComponentCase::NonOrientable {
                cs.at_least(INDEX_ONE_SADDLE, [0, 1, 0, 0], 1).at_least(
                    INDEX_TWO_SADDLE,
                    [0, 0, 1, 0],
                    1,
                )
            } else {
                cs
            }
        }
    };
    Ok(cs)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("constraint system is infeasible")]
    Infeasible,
    #[error("objective is unbounded below")]
    Unbounded,
    #[error("branch-and-bound exceeded {0} nodes")]
    NodeLimit(usize),
    #[error("optimal counts do not fit in 64 bits")]
    Overflow,
}

/// Minimizes the objective over nonnegative integer counts satisfying `cs`.
/// Among all minimizers the one with the smallest `(C3, C2, C1, C0)` is
/// returned.
pub fn solve_min(cs: &ConstraintSystem) -> Result<PointCounts, SolveError> {
    // Parity variables are replaced by C = 2D with D integral.
    let scale: [BigRational; 4] = Var::ALL
        .map(|v| BigRational::from_integer(if cs.parities.contains(&v) { 2 } else { 1 }.into()));
    let transform = |coeffs: &[BigRational; 4]| -> Vec<BigRational> {
        coeffs.iter().zip(&scale).map(|(a, s)| a * s).collect()
    };

    let mut rows: Vec<Row> = cs
        .equalities
        .iter()
        .map(|c| Row::new(transform(&c.coeffs), Sense::Eq, c.rhs.clone()))
        .chain(
            cs.inequalities
                .iter()
                .map(|c| Row::new(transform(&c.coeffs), Sense::Ge, c.rhs.clone())),
        )
        .collect();

    let objective = transform(&cs.objective);
    let first = branch::solve(&IntegerProgram {
        objective: objective.clone(),
        rows: rows.clone(),
    })?;
    rows.push(Row::new(objective, Sense::Eq, first.value));

    let mut last = first.x;
    for var in [Var::C3, Var::C2, Var::C1, Var::C0] {
        let mut unit = vec![BigRational::zero(); 4];
        unit[var.index()] = scale[var.index()].clone();
        let stage = branch::solve(&IntegerProgram {
            objective: unit.clone(),
            rows: rows.clone(),
        })?;
        rows.push(Row::new(unit, Sense::Eq, stage.value));
        last = stage.x;
    }

    let count = |j: usize| -> Result<u64, SolveError> {
        let s = if cs.parities.contains(&Var::ALL[j]) {
            2
        } else {
            1
        };
        (&last[j] * BigInt::from(s))
            .to_u64()
            .ok_or(SolveError::Overflow)
    };
    Ok(PointCounts::new(count(0)?, count(1)?, count(2)?, count(3)?))
}

/// Evaluates every constraint of the component's system at `candidate`.
pub fn audit(
    rc: &RegularizedComponent,
    candidate: &PointCounts,
) -> Result<Vec<ConstraintViolation>, BuildError> {
    Ok(build_constraints(rc)?.violations(candidate))
}

/// Default oracle box: `4 (l1 + l2) + 12`.
pub fn default_box(rc: &RegularizedComponent) -> u64 {
    4 * u64::from(rc.l1 + rc.l2) + 12
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Solver {
    #[default]
    Simplex,
    /// Exhaustive enumeration; `None` uses [`default_box`].
    BruteForce { bound: Option<u64> },
}

impl Solver {
    pub fn solve(
        &self,
        rc: &RegularizedComponent,
        cs: &ConstraintSystem,
    ) -> Result<PointCounts, IlpError> {
        match *self {
            Solver::Simplex => Ok(solve_min(cs)?),
            Solver::BruteForce { bound } => Ok(brute_force_min(
                cs,
                bound.unwrap_or_else(|| default_box(rc)),
            )?),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IlpError {
    #[error(transparent)]
    Build(#[from] BuildError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Regularize(#[from] RegularizeError),
    #[error("component '{component}': optimum {counts} has fewer sinks than glued sinks or an odd lifted count")]
    Attribution {
        component: String,
        counts: PointCounts,
    },
}

impl From<InvalidSpec> for IlpError {
    fn from(e: InvalidSpec) -> Self {
        IlpError::Regularize(e.into())
    }
}

/// Isolated periodic points of the original system, by Morse index.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakdown {
    pub sinks: u64,
    pub index1_saddles: u64,
    pub index2_saddles: u64,
    pub sources: u64,
}

impl Breakdown {
    pub fn total(&self) -> u64 {
        self.sinks + self.index1_saddles + self.index2_saddles + self.sources
    }

    fn add(&mut self, other: &Breakdown) {
        self.sinks += other.sinks;
        self.index1_saddles += other.index1_saddles;
        self.index2_saddles += other.index2_saddles;
        self.sources += other.sources;
    }
}

/// Removes glued sinks from regularized counts and undoes the double cover.
pub fn attribute(rc: &RegularizedComponent, counts: &PointCounts) -> Option<Breakdown> {
    let sinks = counts.c0.checked_sub(u64::from(rc.glued_sinks))?;
    let per = [sinks, counts.c1, counts.c2, counts.c3];
    let per = if rc.covered {
        if per.iter().any(|v| v % 2 != 0) {
            return None;
        }
        per.map(|v| v / 2)
    } else {
        per
    };
    Some(Breakdown {
        sinks: per[0],
        index1_saddles: per[1],
        index2_saddles: per[2],
        sources: per[3],
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSolution {
    pub component: String,
    pub case: ComponentCase,
    pub counts: PointCounts,
    pub regular_total: u64,
    pub glued_sinks: u32,
    pub covered: bool,
    pub isolated_for_f: u64,
    pub attributed: Breakdown,
}

pub fn component_solution(rc: &RegularizedComponent) -> Result<ComponentSolution, IlpError> {
    component_solution_with(rc, Solver::Simplex)
}

pub fn component_solution_with(
    rc: &RegularizedComponent,
    solver: Solver,
) -> Result<ComponentSolution, IlpError> {
    let cs = build_constraints(rc)?;
    let counts = solver.solve(rc, &cs)?;
    let attributed = attribute(rc, &counts).ok_or_else(|| IlpError::Attribution {
        component: rc.source_component.clone(),
        counts,
    })?;
    Ok(ComponentSolution {
        component: rc.source_component.clone(),
        case: ComponentCase::of(rc),
        counts,
        regular_total: counts.total(),
        glued_sinks: rc.glued_sinks,
        covered: rc.covered,
        isolated_for_f: attributed.total(),
        attributed,
    })
}

/// A closed-form lower bound evaluated for a particular system.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: &'static str,
    pub formula: &'static str,
    pub value: u64,
    /// The hypotheses of the bound hold for this system.
    pub applies: bool,
    pub attained: bool,
}

pub const BUNCH_BOUND: &str = "bunch bound";
pub const NON_ORIENTABLE_BOUND: &str = "non-orientable manifold bound";

/// `(3/2) k1 + k2` holds for every system; `k + 2` for non-orientable
/// manifolds whose attractors are all orientable.
pub fn bounds(spec: &SystemSpec, totals: &Totals, total: u64) -> Vec<BoundCheck> {
    let bunch = u64::from(3 * totals.k1 / 2 + totals.k2);
    let twisted = u64::from(totals.bunches() + 2);
    vec![
        BoundCheck {
            name: BUNCH_BOUND,
            formula: "(3/2)k1+k2",
            value: bunch,
            applies: true,
            attained: total == bunch,
        },
        BoundCheck {
            name: NON_ORIENTABLE_BOUND,
            formula: "k+2",
            value: twisted,
            applies: non_orientable_hypothesis(spec),
            attained: total == twisted,
        },
    ]
}

pub fn non_orientable_hypothesis(spec: &SystemSpec) -> bool {
    !spec.manifold_orientable && spec.attractors.iter().all(|a| a.orientable)
}

/// Every plus-side component is orientable (minus-side components never are).
pub fn plus_side_orientable(spec: &SystemSpec) -> bool {
    spec.components
        .iter()
        .filter(|c| c.side == Side::Plus)
        .all(|c| c.orientable)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlobalMinimum {
    pub totals: Totals,
    pub total: u64,
    pub per_component: Vec<ComponentSolution>,
    pub breakdown: Breakdown,
    pub bounds: Vec<BoundCheck>,
}

pub fn global_minimum(spec: &SystemSpec) -> Result<GlobalMinimum, IlpError> {
    global_minimum_with(spec, Solver::Simplex)
}

pub fn global_minimum_with(spec: &SystemSpec, solver: Solver) -> Result<GlobalMinimum, IlpError> {
    let totals = model::totals(spec)?;
    let per_component = regularize::regularize(spec)?
        .iter()
        .map(|rc| component_solution_with(rc, solver))
        .collect::<Result<Vec<_>, _>>()?;
    let mut breakdown = Breakdown::default();
    for s in &per_component {
        breakdown.add(&s.attributed);
    }
    let total = breakdown.total();
    Ok(GlobalMinimum {
        totals,
        total,
        bounds: bounds(spec, &totals, total),
        per_component,
        breakdown,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::ComponentSpec;
    use crate::regularize::regularize_component;

    fn rc(side: Side, orientable: bool, l1: u32, l2: u32) -> RegularizedComponent {
        let c = ComponentSpec::new("X", side, orientable, l1, l2);
        regularize_component(&c, &vec![1; (l1 + l2) as usize]).unwrap()
    }

    fn rhs(list: &[LinearConstraint]) -> Vec<BigRational> {
        list.iter().map(|c| c.rhs.clone()).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigRational> {
        v.iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect()
    }

    #[test]
    fn orientable_plus_system() {
        let cs = build_constraints(&rc(Side::Plus, true, 0, 2)).unwrap();
        assert_eq!(cs.equalities.len(), 1);
        assert_eq!(cs.equalities[0].name, LEFSCHETZ);
        let names: Vec<_> = cs.inequalities.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, [CONNECTIVITY, GLUED_SINKS, SOURCES]);
        assert_eq!(rhs(&cs.inequalities), ints(&[-1, 2, 1]));
        assert!(cs.parities.is_empty());
    }

    #[test]
    fn covered_system_right_hand_sides() {
        let cs = build_constraints(&rc(Side::Minus, false, 2, 0)).unwrap();
        let all: Vec<_> = cs
            .equalities
            .iter()
            .chain(&cs.inequalities)
            .cloned()
            .collect();
        assert_eq!(rhs(&all), ints(&[0, 2, 0, 2]));
        assert_eq!(cs.parities, [Var::C1, Var::C2, Var::C3].into());
    }

    #[test]
    fn non_orientable_plus_adds_saddles() {
        let cs = build_constraints(&rc(Side::Plus, false, 0, 1)).unwrap();
        let names: Vec<_> = cs.inequalities.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                CONNECTIVITY,
                GLUED_SINKS,
                SOURCES,
                INDEX_ONE_SADDLE,
                INDEX_TWO_SADDLE
            ]
        );
    }

    #[test]
    fn covered_needs_even_positive_l1() {
        let mut r = rc(Side::Minus, false, 2, 0);
        r.l1 = 3;
        assert!(build_constraints(&r).is_err());
        r.l1 = 0;
        assert!(build_constraints(&r).is_err());
    }

    #[test]
    fn solve_min_examples() {
        let cs = build_constraints(&rc(Side::Plus, true, 0, 2)).unwrap();
        assert_eq!(solve_min(&cs).unwrap(), PointCounts::new(2, 1, 0, 1));

        let cs = build_constraints(&rc(Side::Minus, false, 2, 1)).unwrap();
        let p = solve_min(&cs).unwrap();
        assert_eq!(p, PointCounts::new(4, 4, 2, 2));
        assert_eq!(p.total(), 12);

        let cs = build_constraints(&rc(Side::Plus, false, 0, 1)).unwrap();
        assert_eq!(solve_min(&cs).unwrap().total(), 4);
    }

    #[test]
    fn solve_min_reports_infeasible() {
        let cs = ConstraintSystem::default()
            .at_least("pos", [1, 0, 0, 0], 1)
            .at_least("neg", [-1, 0, 0, 0], 0);
        assert_eq!(solve_min(&cs), Err(SolveError::Infeasible));
        let cs = ConstraintSystem::default().equal("half", [2, 0, 0, 0], 1);
        assert_eq!(solve_min(&cs), Err(SolveError::Infeasible));
    }

    #[test]
    fn solve_min_reports_unbounded() {
        let neg = BigRational::from_integer((-1).into());
        let zero = BigRational::zero();
        let cs =
            ConstraintSystem::default().with_objective([neg, zero.clone(), zero.clone(), zero]);
        assert_eq!(solve_min(&cs), Err(SolveError::Unbounded));
    }

    #[test]
    fn parity_on_c0_is_respected() {
        // C0 >= 3 with C0 even → 4
        let cs = ConstraintSystem::default()
            .at_least("c0", [1, 0, 0, 0], 3)
            .even(Var::C0);
        assert_eq!(solve_min(&cs).unwrap(), PointCounts::new(4, 0, 0, 0));
    }

    #[test]
    fn component_solution_examples() {
        assert_eq!(
            component_solution(&rc(Side::Plus, true, 0, 2))
                .unwrap()
                .isolated_for_f,
            2
        );
        let s = component_solution(&rc(Side::Minus, false, 2, 1)).unwrap();
        assert_eq!(s.isolated_for_f, 4);
        assert_eq!(s.case, ComponentCase::Covered);
        assert_eq!(
            component_solution(&rc(Side::Plus, false, 0, 3))
                .unwrap()
                .isolated_for_f,
            5
        );
    }

    #[test]
    fn audit_examples() {
        let covered = rc(Side::Minus, false, 2, 0);
        assert!(audit(&covered, &PointCounts::new(2, 2, 2, 2))
            .unwrap()
            .is_empty());

        let v = audit(&rc(Side::Plus, true, 0, 1), &PointCounts::new(1, 0, 0, 0)).unwrap();
        let names: Vec<_> = v.iter().map(|x| x.constraint.as_str()).collect();
        assert_eq!(names, [LEFSCHETZ, SOURCES]);
        assert_eq!(v[0].value, "-1");

        let v = audit(&covered, &PointCounts::new(2, 3, 3, 2)).unwrap();
        let names: Vec<_> = v.iter().map(|x| x.constraint.as_str()).collect();
        assert_eq!(names, ["parity-c1", "parity-c2"]);
    }

    #[test]
    fn rendered_expressions() {
        let cs = build_constraints(&rc(Side::Minus, false, 2, 0)).unwrap();
        assert_eq!(cs.equalities[0].render("="), "C3 - C2 + C1 - C0 = 0");
        assert_eq!(cs.inequalities[1].render(">="), "C1 - C0 >= 0");
    }

    #[test]
    fn attribution_removes_glued_sinks_and_cover() {
        let covered = rc(Side::Minus, false, 2, 1);
        let b = attribute(&covered, &PointCounts::new(4, 4, 2, 2)).unwrap();
        assert_eq!(
            b,
            Breakdown {
                sinks: 0,
                index1_saddles: 2,
                index2_saddles: 1,
                sources: 1
            }
        );
        assert!(attribute(&covered, &PointCounts::new(3, 4, 2, 2)).is_none());
        assert!(attribute(&covered, &PointCounts::new(5, 4, 2, 2)).is_none());
    }
}
