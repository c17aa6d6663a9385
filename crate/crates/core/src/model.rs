//! Domain model: attractors, bunches, complement components and whole-system
//! specifications, plus structural validation.
//!
//! Every counting operation in this crate works on an iterate of the
//! diffeomorphism in which all isolated and boundary periodic points are
//! fixed. Bunch periods are kept so that the regularization step can report
//! its cycle decomposition, but they never change a lower bound.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A bunch of an expanding attractor: the unstable manifolds of the boundary
/// periodic points whose stable separatrices lie in one basin component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bunch {
    pub id: String,
    /// Number of boundary points, 1 or 2.
    pub degree: u8,
    pub attractor: String,
    pub component: String,
    pub period: u32,
}

impl Bunch {
    pub fn new(
        id: impl Into<String>,
        degree: u8,
        attractor: impl Into<String>,
        component: impl Into<String>,
    ) -> Self {
        Self {
            id: id.into(),
            degree,
            attractor: attractor.into(),
            component: component.into(),
            period: 1,
        }
    }

    pub fn with_period(mut self, period: u32) -> Self {
        self.period = period;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttractorSpec {
    pub id: String,
    pub orientable: bool,
    pub bunch_ids: Vec<String>,
}

/// Which part of the complement of the trapping neighbourhood a component
/// belongs to. `Minus` components carry 1-bunch basins and are treated by a
/// double cover; `Plus` components only see sphere boundaries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    #[serde(alias = "Plus")]
    Plus,
    #[serde(alias = "Minus")]
    Minus,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Plus => f.write_str("plus"),
            Side::Minus => f.write_str("minus"),
        }
    }
}

/// A connected component of the complement of the attractor set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentSpec {
    pub id: String,
    pub side: Side,
    pub orientable: bool,
    /// Attached degree-1 bunch basins.
    pub l1: u32,
    /// Attached degree-2 bunch basins.
    pub l2: u32,
}

impl ComponentSpec {
    pub fn new(id: impl Into<String>, side: Side, orientable: bool, l1: u32, l2: u32) -> Self {
        Self {
            id: id.into(),
            side,
            orientable,
            l1,
            l2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemSpec {
    pub manifold_orientable: bool,
    pub attractors: Vec<AttractorSpec>,
    pub components: Vec<ComponentSpec>,
    pub bunches: Vec<Bunch>,
}

/// Global bunch and component counts of a valid system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Totals {
    pub k1: u32,
    pub k2: u32,
    /// Number of complement components.
    pub s: u32,
}

impl Totals {
    pub fn bunches(&self) -> u32 {
        self.k1 + self.k2
    }
}

/// One violated structural rule, with the identifiers involved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum Violation {
    EmptyId {
        category: &'static str,
    },
    DuplicateId {
        category: &'static str,
        id: String,
    },
    InvalidDegree {
        bunch: String,
        degree: u8,
    },
    ZeroPeriod {
        bunch: String,
    },
    UnknownAttractor {
        bunch: String,
        attractor: String,
    },
    UnknownComponent {
        bunch: String,
        component: String,
    },
    UnknownBunch {
        attractor: String,
        bunch: String,
    },
    /// The bunch names an owner that does not list it.
    UnlistedBunch {
        bunch: String,
        attractor: String,
    },
    /// An attractor lists a bunch owned by someone else, or lists it twice.
    ForeignBunch {
        attractor: String,
        bunch: String,
    },
    EmptyAttractor {
        attractor: String,
    },
    OrientabilityContradictsBunches {
        attractor: String,
        orientable: bool,
        has_degree_one: bool,
    },
    BunchCountMismatch {
        component: String,
        declared: [u32; 2],
        attached: [u32; 2],
    },
    SideMismatch {
        component: String,
        side: Side,
        l1: u32,
    },
    OddDegreeOneCount {
        component: String,
        l1: u32,
    },
    OrientableMinusComponent {
        component: String,
    },
    DetachedComponent {
        component: String,
    },
    NoBunches,
    MissingNonOrientableComponent,
    NonOrientablePlusInOrientableManifold {
        component: String,
    },
    MinusInOrientableManifold {
        component: String,
    },
    IncompletePeriodCycle {
        component: String,
        degree: u8,
        period: u32,
        bunches: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Violation::*;
        match self {
            EmptyId { category } => write!(f, "{category} with empty id"),
            DuplicateId { category, id } => write!(f, "duplicate {category} id '{id}'"),
            InvalidDegree { bunch, degree } => {
                write!(f, "bunch '{bunch}' has degree {degree}; only 1 and 2 are possible")
            }
            ZeroPeriod { bunch } => write!(f, "bunch '{bunch}' has period 0"),
            UnknownAttractor { bunch, attractor } => {
                write!(f, "bunch '{bunch}' refers to unknown attractor '{attractor}'")
            }
            UnknownComponent { bunch, component } => {
                write!(f, "bunch '{bunch}' refers to unknown component '{component}'")
            }
            UnknownBunch { attractor, bunch } => {
                write!(f, "attractor '{attractor}' lists unknown bunch '{bunch}'")
            }
            UnlistedBunch { bunch, attractor } => {
                write!(f, "bunch '{bunch}' is not listed by its attractor '{attractor}'")
            }
            ForeignBunch { attractor, bunch } => write!(
                f,
                "attractor '{attractor}' lists bunch '{bunch}' which it does not own exactly once"
            ),
            EmptyAttractor { attractor } => write!(f, "attractor '{attractor}' has no bunches"),
            OrientabilityContradictsBunches { attractor, orientable, has_degree_one } => write!(
                f,
                "orientability contradicts 1-bunch: attractor '{attractor}' is {} but {} a 1-bunch",
                if *orientable { "orientable" } else { "non-orientable" },
                if *has_degree_one { "has" } else { "lacks" }
            ),
            BunchCountMismatch { component, declared, attached } => write!(
                f,
                "component '{component}' declares (l1, l2) = ({}, {}) but has ({}, {}) attached",
                declared[0], declared[1], attached[0], attached[1]
            ),
            SideMismatch { component, side, l1 } => write!(
                f,
                "component '{component}' is on the {side} side with l1 = {l1}; minus side holds exactly the components with l1 > 0"
            ),
            OddDegreeOneCount { component, l1 } => {
                write!(f, "l1 must be even: component '{component}' has l1 = {l1}")
            }
            OrientableMinusComponent { component } => {
                write!(f, "minus-side component '{component}' must be non-orientable")
            }
            DetachedComponent { component } => {
                write!(f, "component '{component}' touches no bunch basin")
            }
            NoBunches => f.write_str("system has no bunches (k1 + k2 = 0)"),
            MissingNonOrientableComponent => f.write_str(
                "non-orientable manifold with only orientable attractors needs a non-orientable component",
            ),
            NonOrientablePlusInOrientableManifold { component } => write!(
                f,
                "plus-side component '{component}' is non-orientable inside an orientable manifold"
            ),
            MinusInOrientableManifold { component } => write!(
                f,
                "minus-side component '{component}' is non-orientable inside an orientable manifold"
            ),
            IncompletePeriodCycle { component, degree, period, bunches } => write!(
                f,
                "component '{component}' has {bunches} degree-{degree} bunches of period {period}, not a whole number of cycles"
            ),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return f.write_str("valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid system: {0}")]
pub struct InvalidSpec(pub ValidationReport);

impl SystemSpec {
    /// Builds a spec, filling each component's `l1`/`l2` from the bunches
    /// attached to it.
    pub fn assemble(
        manifold_orientable: bool,
        attractors: Vec<AttractorSpec>,
        mut components: Vec<ComponentSpec>,
        bunches: Vec<Bunch>,
    ) -> Self {
        for c in &mut components {
            let [l1, l2] = attached_counts(&bunches, &c.id);
            c.l1 = l1;
            c.l2 = l2;
        }
        Self {
            manifold_orientable,
            attractors,
            components,
            bunches,
        }
    }

    pub fn component(&self, id: &str) -> Option<&ComponentSpec> {
        self.components.iter().find(|c| c.id == id)
    }

    /// Bunches attached to `component`, degree-1 first, otherwise in
    /// declaration order.
    pub fn bunches_of<'a>(&'a self, component: &str) -> Vec<&'a Bunch> {
        let mut out: Vec<&Bunch> = self
            .bunches
            .iter()
            .filter(|b| b.component == component)
            .collect();
        out.sort_by_key(|b| b.degree);
        out
    }
}

fn attached_counts(bunches: &[Bunch], component: &str) -> [u32; 2] {
    let mut counts = [0u32; 2];
    for b in bunches.iter().filter(|b| b.component == component) {
        match b.degree {
            1 => counts[0] += 1,
            2 => counts[1] += 1,
            _ => {}
        }
    }
    counts
}

fn check_ids<'a>(
    category: &'static str,
    ids: impl Iterator<Item = &'a str>,
    out: &mut Vec<Violation>,
) -> BTreeSet<&'a str> {
    let mut seen = BTreeSet::new();
    for id in ids {
        if id.is_empty() {
            out.push(Violation::EmptyId { category });
        } else if !seen.insert(id) {
            out.push(Violation::DuplicateId {
                category,
                id: id.to_owned(),
            });
        }
    }
    seen
}

/// Checks every structural rule and returns all violations found.
pub fn validate(spec: &SystemSpec) -> ValidationReport {
    let mut v = Vec::new();

    let attractor_ids = check_ids(
        "attractor",
        spec.attractors.iter().map(|a| a.id.as_str()),
        &mut v,
    );
    let component_ids = check_ids(
        "component",
        spec.components.iter().map(|c| c.id.as_str()),
        &mut v,
    );
    let bunch_ids = check_ids("bunch", spec.bunches.iter().map(|b| b.id.as_str()), &mut v);

    for b in &spec.bunches {
        if b.degree != 1 && b.degree != 2 {
            v.push(Violation::InvalidDegree {
                bunch: b.id.clone(),
                degree: b.degree,
            });
        }
        if b.period == 0 {
            v.push(Violation::ZeroPeriod {
                bunch: b.id.clone(),
            });
        }
        if !attractor_ids.contains(b.attractor.as_str()) {
            v.push(Violation::UnknownAttractor {
                bunch: b.id.clone(),
                attractor: b.attractor.clone(),
            });
        } else {
            let owner = spec.attractors.iter().find(|a| a.id == b.attractor);
            if owner.is_some_and(|a| !a.bunch_ids.contains(&b.id)) {
                v.push(Violation::UnlistedBunch {
                    bunch: b.id.clone(),
                    attractor: b.attractor.clone(),
                });
            }
        }
        if !component_ids.contains(b.component.as_str()) {
            v.push(Violation::UnknownComponent {
                bunch: b.id.clone(),
                component: b.component.clone(),
            });
        }
    }

    let by_id: BTreeMap<&str, &Bunch> = spec.bunches.iter().map(|b| (b.id.as_str(), b)).collect();
    let mut listings: BTreeMap<&str, u32> = BTreeMap::new();
    for a in &spec.attractors {
        if a.bunch_ids.is_empty() {
            v.push(Violation::EmptyAttractor {
                attractor: a.id.clone(),
            });
        }
        let mut has_degree_one = false;
        for id in &a.bunch_ids {
            *listings.entry(id.as_str()).or_default() += 1;
            match by_id.get(id.as_str()) {
                None if !bunch_ids.contains(id.as_str()) => v.push(Violation::UnknownBunch {
                    attractor: a.id.clone(),
                    bunch: id.clone(),
                }),
                None => {}
                Some(b) => {
                    if b.attractor != a.id {
                        v.push(Violation::ForeignBunch {
                            attractor: a.id.clone(),
                            bunch: id.clone(),
                        });
                    }
                    has_degree_one |= b.degree == 1;
                }
            }
        }
        if a.orientable == has_degree_one {
            v.push(Violation::OrientabilityContradictsBunches {
                attractor: a.id.clone(),
                orientable: a.orientable,
                has_degree_one,
            });
        }
    }
    for (id, n) in listings {
        if n > 1 {
            let owner = by_id
                .get(id)
                .map(|b| b.attractor.clone())
                .unwrap_or_default();
            v.push(Violation::ForeignBunch {
                attractor: owner,
                bunch: id.to_owned(),
            });
        }
    }

    for c in &spec.components {
        let attached = attached_counts(&spec.bunches, &c.id);
        if attached != [c.l1, c.l2] {
            v.push(Violation::BunchCountMismatch {
                component: c.id.clone(),
                declared: [c.l1, c.l2],
                attached,
            });
        }
        if (c.side == Side::Minus) != (c.l1 > 0) {
            v.push(Violation::SideMismatch {
                component: c.id.clone(),
                side: c.side,
                l1: c.l1,
            });
        }
        if c.l1 % 2 == 1 {
            v.push(Violation::OddDegreeOneCount {
                component: c.id.clone(),
                l1: c.l1,
            });
        }
        if c.side == Side::Minus && c.orientable {
            v.push(Violation::OrientableMinusComponent {
                component: c.id.clone(),
            });
        }
        if c.l1 + c.l2 == 0 {
            v.push(Violation::DetachedComponent {
                component: c.id.clone(),
            });
        }
        if spec.manifold_orientable {
            match c.side {
                Side::Plus if !c.orientable => {
                    v.push(Violation::NonOrientablePlusInOrientableManifold {
                        component: c.id.clone(),
                    })
                }
                Side::Minus => v.push(Violation::MinusInOrientableManifold {
                    component: c.id.clone(),
                }),
                _ => {}
            }
        }
        period_cycles(spec, c, &mut v);
    }

    let [k1, k2] = [1u8, 2].map(|d| spec.bunches.iter().filter(|b| b.degree == d).count());
    if k1 + k2 == 0 {
        v.push(Violation::NoBunches);
    }

    if !spec.manifold_orientable
        && !spec.attractors.is_empty()
        && spec.attractors.iter().all(|a| a.orientable)
        && spec.components.iter().all(|c| c.orientable)
    {
        v.push(Violation::MissingNonOrientableComponent);
    }

    ValidationReport { violations: v }
}

/// Bunch basins of one component are permuted in cycles, so the bunches of a
/// given degree and period `m` must come in multiples of `m`.
fn period_cycles(spec: &SystemSpec, c: &ComponentSpec, out: &mut Vec<Violation>) {
    let mut groups: BTreeMap<(u8, u32), u32> = BTreeMap::new();
    for b in spec
        .bunches
        .iter()
        .filter(|b| b.component == c.id && b.period > 0)
    {
        *groups.entry((b.degree, b.period)).or_default() += 1;
    }
    for ((degree, period), bunches) in groups {
        if bunches % period != 0 {
            out.push(Violation::IncompletePeriodCycle {
                component: c.id.clone(),
                degree,
                period,
                bunches,
            });
        }
    }
}

/// Returns `(k1, k2, s)` for a valid spec.
pub fn totals(spec: &SystemSpec) -> Result<Totals, InvalidSpec> {
    let report = validate(spec);
    if !report.is_valid() {
        return Err(InvalidSpec(report));
    }
    let count = |d: u8| spec.bunches.iter().filter(|b| b.degree == d).count() as u32;
    Ok(Totals {
        k1: count(1),
        k2: count(2),
        s: spec.components.len() as u32,
    })
}
