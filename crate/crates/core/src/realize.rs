//! Witness phase graphs attaining the minimal counts.
//!
//! A [`PhaseGraph`] is a combinatorial stand-in for a Morse–Smale system: the
//! fixed points with their Morse indices, a Smale-compatible total order and
//! the pairs `(p, q)` with `W^s(p) ∩ W^u(q) ≠ ∅`. It stores one copy of each
//! isolated periodic point of the original system plus the sinks glued in by
//! regularization. On a covered (minus-side) component the regularized
//! system sees every isolated point twice; [`regularized_counts`] accounts
//! for that.
//!
//! Three templates are available:
//!
//! * plus side, orientable, any `l2 ≥ 1`: the flower, `l2` sinks chained by
//!   `l2 - 1` index-1 saddles and one source;
//! * minus side with exactly two 1-bunches: the product of the minimal
//!   Morse–Smale system on `RP²` (sink, saddle, source) with an expansion of
//!   the line, giving one index-1 saddle, one index-2 saddle and one source;
//! * plus side, non-orientable, `l2 = 1`: the twisted `S²`-bundle model with
//!   one sink, one saddle of each index and one source.
//!
//! Other component shapes are declined with [`RealizeError::Unsupported`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ilp::{self, ConstraintViolation, PointCounts};
use crate::model::{AttractorSpec, Bunch, ComponentSpec, Side, SystemSpec};
use crate::regularize::{self, RegularizeError, RegularizedComponent};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PointRole {
    GluedSink,
    Isolated,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixedPoint {
    pub id: String,
    /// Dimension of the unstable manifold.
    pub index: u8,
    pub role: PointRole,
    pub component: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhaseGraph {
    pub points: Vec<FixedPoint>,
    /// Point ids, lowest first.
    pub order: Vec<String>,
    /// `(p, q)`: the stable manifold of `p` meets the unstable manifold of `q`.
    pub connections: Vec<(String, String)>,
    /// Bunch id → id of the glued sink filling its basin.
    pub bunch_assignment: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Template {
    Flower,
    ProjectiveCylinder,
    TwistedBundle,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealizeError {
    #[error(transparent)]
    Regularize(#[from] RegularizeError),
    #[error("no witness template for component '{component}': {reason}")]
    Unsupported { component: String, reason: String },
    #[error("{0} must be at least 1")]
    Zero(&'static str),
}

pub fn template_for(c: &ComponentSpec) -> Result<Template, RealizeError> {
    let unsupported = |reason: &str| RealizeError::Unsupported {
        component: c.id.clone(),
        reason: reason.to_owned(),
    };
    match (c.side, c.orientable) {
        (Side::Plus, true) if c.l1 == 0 && c.l2 >= 1 => Ok(Template::Flower),
        (Side::Plus, false) if c.l1 == 0 && c.l2 == 1 => Ok(Template::TwistedBundle),
        (Side::Plus, false) => Err(unsupported(
            "non-orientable plus-side components are modelled only with one 2-bunch",
        )),
        (Side::Minus, _) if c.l1 == 2 && c.l2 == 0 => Ok(Template::ProjectiveCylinder),
        (Side::Minus, _) => Err(unsupported(
            "minus-side components are modelled only as a pair of 1-bunches",
        )),
        _ => Err(unsupported("component shape has no template")),
    }
}

struct Builder<'a> {
    component: &'a str,
    graph: PhaseGraph,
}

impl<'a> Builder<'a> {
    fn new(component: &'a str) -> Self {
        Self {
            component,
            graph: PhaseGraph::default(),
        }
    }

    fn point(&mut self, name: String, index: u8, role: PointRole) -> String {
        let id = format!("{}/{}", self.component, name);
        self.graph.points.push(FixedPoint {
            id: id.clone(),
            index,
            role,
            component: self.component.to_owned(),
        });
        id
    }

    fn sinks(&mut self, bunches: &[&str]) -> Vec<String> {
        bunches
            .iter()
            .enumerate()
            .map(|(i, b)| {
                let id = self.point(format!("sink{}", i + 1), 0, PointRole::GluedSink);
                self.graph
                    .bunch_assignment
                    .insert((*b).to_owned(), id.clone());
                id
            })
            .collect()
    }

    fn connect(&mut self, lower: &str, upper: &str) {
        self.graph
            .connections
            .push((lower.to_owned(), upper.to_owned()));
    }
}

fn flower(component: &str, bunches: &[&str]) -> PhaseGraph {
    let mut b = Builder::new(component);
    let sinks = b.sinks(bunches);
    let saddles: Vec<String> = (1..sinks.len())
        .map(|i| b.point(format!("saddle1-{i}"), 1, PointRole::Isolated))
        .collect();
    let source = b.point("source1".into(), 3, PointRole::Isolated);
    for (i, s) in saddles.iter().enumerate() {
        b.connect(&sinks[i], s);
        b.connect(&sinks[i + 1], s);
    }
    for s in &saddles {
        b.connect(s, &source);
    }
    for s in &sinks {
        b.connect(s, &source);
    }
    b.graph
}

fn projective_cylinder(component: &str, bunches: &[&str]) -> PhaseGraph {
    let mut b = Builder::new(component);
    let sinks = b.sinks(bunches);
    let saddle = b.point("saddle1-1".into(), 1, PointRole::Isolated);
    let upper = b.point("saddle2-1".into(), 2, PointRole::Isolated);
    let source = b.point("source1".into(), 3, PointRole::Isolated);
    for s in &sinks {
        b.connect(s, &saddle);
    }
    b.connect(&saddle, &upper);
    b.connect(&upper, &source);
    for s in &sinks {
        b.connect(s, &source);
    }
    b.graph
}

fn twisted_bundle(component: &str, bunches: &[&str]) -> PhaseGraph {
    let mut b = Builder::new(component);
    let sinks = b.sinks(bunches);
    let saddle = b.point("saddle1-1".into(), 1, PointRole::Isolated);
    let upper = b.point("saddle2-1".into(), 2, PointRole::Isolated);
    let source = b.point("source1".into(), 3, PointRole::Isolated);
    b.connect(&sinks[0], &saddle);
    b.connect(&saddle, &upper);
    b.connect(&upper, &source);
    b.connect(&sinks[0], &source);
    b.graph
}

/// Concatenates component graphs; the order lists all sinks first, then all
/// index-1 saddles, and so on.
fn merge(parts: Vec<PhaseGraph>) -> PhaseGraph {
    let mut out = PhaseGraph::default();
    for p in parts {
        out.points.extend(p.points);
        out.connections.extend(p.connections);
        out.bunch_assignment.extend(p.bunch_assignment);
    }
    let mut ordered: Vec<&FixedPoint> = out.points.iter().collect();
    ordered.sort_by_key(|p| p.index);
    out.order = ordered.iter().map(|p| p.id.clone()).collect();
    out
}

/// Builds a witness for every component of a valid spec.
pub fn witness(spec: &SystemSpec) -> Result<PhaseGraph, RealizeError> {
    regularize::regularize(spec)?;
    let mut parts = Vec::with_capacity(spec.components.len());
    for c in &spec.components {
        let bunches: Vec<&str> = spec
            .bunches_of(&c.id)
            .iter()
            .map(|b| b.id.as_str())
            .collect();
        parts.push(match template_for(c)? {
            Template::Flower => flower(&c.id, &bunches),
            Template::ProjectiveCylinder => projective_cylinder(&c.id, &bunches),
            Template::TwistedBundle => twisted_bundle(&c.id, &bunches),
        });
    }
    Ok(merge(parts))
}

fn attractor(id: &str, orientable: bool, bunches: &[Bunch]) -> AttractorSpec {
    AttractorSpec {
        id: id.to_owned(),
        orientable,
        bunch_ids: bunches.iter().map(|b| b.id.clone()).collect(),
    }
}

/// One orientable attractor with `l2` 2-bunches bounding a single plus-side
/// component of an orientable manifold.
pub fn plus_spec(l2: u32) -> SystemSpec {
    let bunches: Vec<Bunch> = (1..=l2)
        .map(|i| Bunch::new(format!("b{i}"), 2, "A", "P"))
        .collect();
    SystemSpec::assemble(
        true,
        vec![attractor("A", true, &bunches)],
        vec![ComponentSpec::new("P", Side::Plus, true, 0, 0)],
        bunches,
    )
}

/// One non-orientable attractor whose two 1-bunches bound an `RP² × [-1, 1]`.
pub fn minus_pair_spec() -> SystemSpec {
    let bunches = vec![Bunch::new("r1", 1, "A", "M"), Bunch::new("r2", 1, "A", "M")];
    SystemSpec::assemble(
        false,
        vec![attractor("A", false, &bunches)],
        vec![ComponentSpec::new("M", Side::Minus, false, 0, 0)],
        bunches,
    )
}

/// One orientable attractor with `k2` 2-bunches, each bounding its own
/// plus-side component; the last component is non-orientable, and so is the
/// manifold.
pub fn nonorientable_spec(k2: u32) -> SystemSpec {
    let comp = |i: u32| {
        if i == k2 {
            "T".to_owned()
        } else {
            format!("S{i}")
        }
    };
    let bunches: Vec<Bunch> = (1..=k2)
        .map(|i| Bunch::new(format!("b{i}"), 2, "A", comp(i)))
        .collect();
    let components = (1..=k2)
        .map(|i| ComponentSpec::new(comp(i), Side::Plus, i != k2, 0, 0))
        .collect();
    SystemSpec::assemble(
        false,
        vec![attractor("A", true, &bunches)],
        components,
        bunches,
    )
}

pub fn realize_plus(l2: u32) -> Result<PhaseGraph, RealizeError> {
    if l2 == 0 {
        return Err(RealizeError::Zero("l2"));
    }
    witness(&plus_spec(l2))
}

pub fn realize_minus_pair() -> PhaseGraph {
    witness(&minus_pair_spec()).expect("minus pair template")
}

pub fn realize_nonorientable(k2: u32) -> Result<PhaseGraph, RealizeError> {
    if k2 == 0 {
        return Err(RealizeError::Zero("k2"));
    }
    witness(&nonorientable_spec(k2))
}

/// Number of isolated periodic points of the original system in `g`.
pub fn isolated_total(g: &PhaseGraph) -> u64 {
    g.points
        .iter()
        .filter(|p| p.role == PointRole::Isolated)
        .count() as u64
}

/// Isolated points by Morse index (`[sinks, index-1, index-2, sources]`).
pub fn isolated_by_index(g: &PhaseGraph) -> [u64; 4] {
    let mut out = [0u64; 4];
    for p in g
        .points
        .iter()
        .filter(|p| p.role == PointRole::Isolated && p.index <= 3)
    {
        out[p.index as usize] += 1;
    }
    out
}

fn component_counts(rc: &RegularizedComponent, g: &PhaseGraph) -> (PointCounts, u64) {
    let mult = if rc.covered { 2 } else { 1 };
    let mut c = [0u64; 4];
    let mut glued = 0;
    for p in g
        .points
        .iter()
        .filter(|p| p.component == rc.source_component && p.index <= 3)
    {
        match p.role {
            PointRole::GluedSink => glued += 1,
            PointRole::Isolated => c[p.index as usize] += mult,
        }
    }
    c[0] += glued;
    (PointCounts::new(c[0], c[1], c[2], c[3]), glued)
}

/// Counts of the regularized system per component, keyed by component id.
pub fn regularized_counts(
    spec: &SystemSpec,
    g: &PhaseGraph,
) -> Result<BTreeMap<String, PointCounts>, RegularizeError> {
    Ok(regularize::regularize(spec)?
        .iter()
        .map(|rc| (rc.source_component.clone(), component_counts(rc, g).0))
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "check", rename_all = "kebab-case")]
pub enum GraphViolation {
    InvalidSpec {
        reason: String,
    },
    DuplicatePoint {
        point: String,
    },
    UnknownComponent {
        point: String,
        component: String,
    },
    BadIndex {
        point: String,
        index: u8,
    },
    GluedSinkIndex {
        point: String,
        index: u8,
    },
    MissingFromOrder {
        point: String,
    },
    UnknownInOrder {
        id: String,
    },
    RepeatedInOrder {
        id: String,
    },
    IndexBlockOrder {
        earlier: String,
        later: String,
    },
    UnknownEndpoint {
        id: String,
    },
    CrossComponent {
        from: String,
        to: String,
    },
    AgainstOrder {
        from: String,
        to: String,
    },
    UnassignedBunch {
        bunch: String,
    },
    UnknownBunch {
        bunch: String,
    },
    NotGluedSink {
        bunch: String,
        point: String,
    },
    WrongComponent {
        bunch: String,
        point: String,
    },
    SharedSink {
        point: String,
        bunches: Vec<String>,
    },
    GluedSinkCount {
        component: String,
        expected: u32,
        found: u64,
    },
    EmptyComponent {
        component: String,
    },
    Constraint {
        component: String,
        violation: ConstraintViolation,
    },
    DisconnectedSkeleton {
        component: String,
        pieces: usize,
    },
}

impl fmt::Display for GraphViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphViolation::*;
        match self {
            InvalidSpec { reason } => write!(f, "invalid spec: {reason}"),
            DuplicatePoint { point } => write!(f, "duplicate point '{point}'"),
            UnknownComponent { point, component } => {
                write!(f, "point '{point}' lies in unknown component '{component}'")
            }
            BadIndex { point, index } => write!(f, "point '{point}' has index {index}"),
            GluedSinkIndex { point, index } => write!(f, "glued sink '{point}' has index {index}"),
            MissingFromOrder { point } => write!(f, "point '{point}' missing from the order"),
            UnknownInOrder { id } => write!(f, "order lists unknown point '{id}'"),
            RepeatedInOrder { id } => write!(f, "order lists '{id}' more than once"),
            IndexBlockOrder { earlier, later } => {
                write!(f, "'{earlier}' precedes '{later}' despite a higher index")
            }
            UnknownEndpoint { id } => write!(f, "connection to unknown point '{id}'"),
            CrossComponent { from, to } => {
                write!(f, "connection '{from}' -> '{to}' crosses components")
            }
            AgainstOrder { from, to } => {
                write!(f, "connection '{from}' -> '{to}' goes against the order")
            }
            UnassignedBunch { bunch } => write!(f, "bunch '{bunch}' has no glued sink"),
            UnknownBunch { bunch } => write!(f, "assignment for unknown bunch '{bunch}'"),
            NotGluedSink { bunch, point } => {
                write!(f, "bunch '{bunch}' assigned to '{point}', not a glued sink")
            }
            WrongComponent { bunch, point } => {
                write!(
                    f,
                    "bunch '{bunch}' assigned to '{point}' in another component"
                )
            }
            SharedSink { point, bunches } => {
                write!(f, "glued sink '{point}' shared by {}", bunches.join(", "))
            }
            GluedSinkCount {
                component,
                expected,
                found,
            } => {
                write!(
                    f,
                    "component '{component}' has {found} glued sinks, expected {expected}"
                )
            }
            EmptyComponent { component } => write!(f, "component '{component}' has no points"),
            Constraint {
                component,
                violation,
            } => write!(f, "component '{component}': {violation}"),
            DisconnectedSkeleton { component, pieces } => write!(
                f,
                "component '{component}': sinks and index-1 saddles form {pieces} pieces"
            ),
        }
    }
}

fn find(parent: &mut [usize], mut i: usize) -> usize {
    while parent[i] != i {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    i
}

/// Structural and counting checks of a witness against `spec`. An empty
/// result means `g` is a valid witness.
pub fn validate_phase_graph(spec: &SystemSpec, g: &PhaseGraph) -> Vec<GraphViolation> {
    use GraphViolation::*;
    let rcs = match regularize::regularize(spec) {
        Ok(r) => r,
        Err(e) => {
            return vec![InvalidSpec {
                reason: e.to_string(),
            }]
        }
    };
    let mut v = Vec::new();

    let mut points: BTreeMap<&str, &FixedPoint> = BTreeMap::new();
    for p in &g.points {
        if points.insert(p.id.as_str(), p).is_some() {
            v.push(DuplicatePoint {
                point: p.id.clone(),
            });
        }
        if spec.component(&p.component).is_none() {
            v.push(UnknownComponent {
                point: p.id.clone(),
                component: p.component.clone(),
            });
        }
        if p.index > 3 {
            v.push(BadIndex {
                point: p.id.clone(),
                index: p.index,
            });
        }
        if p.role == PointRole::GluedSink && p.index != 0 {
            v.push(GluedSinkIndex {
                point: p.id.clone(),
                index: p.index,
            });
        }
    }

    let mut position: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, id) in g.order.iter().enumerate() {
        if !points.contains_key(id.as_str()) {
            v.push(UnknownInOrder { id: id.clone() });
        } else if position.insert(id.as_str(), i).is_some() {
            v.push(RepeatedInOrder { id: id.clone() });
        }
    }
    for p in &g.points {
        if !position.contains_key(p.id.as_str()) {
            v.push(MissingFromOrder {
                point: p.id.clone(),
            });
        }
    }
    let ranked: Vec<&FixedPoint> = g
        .order
        .iter()
        .filter_map(|id| points.get(id.as_str()).copied())
        .collect();
    for w in ranked.windows(2) {
        if w[0].index > w[1].index {
            v.push(IndexBlockOrder {
                earlier: w[0].id.clone(),
                later: w[1].id.clone(),
            });
        }
    }

    for (from, to) in &g.connections {
        let (Some(p), Some(q)) = (points.get(from.as_str()), points.get(to.as_str())) else {
            for id in [from, to] {
                if !points.contains_key(id.as_str()) {
                    v.push(UnknownEndpoint { id: id.clone() });
                }
            }
            continue;
        };
        if p.component != q.component {
            v.push(CrossComponent {
                from: from.clone(),
                to: to.clone(),
            });
        }
        match (position.get(from.as_str()), position.get(to.as_str())) {
            (Some(a), Some(b)) if a < b => {}
            _ => v.push(AgainstOrder {
                from: from.clone(),
                to: to.clone(),
            }),
        }
    }

    let mut users: BTreeMap<&str, Vec<String>> = BTreeMap::new();
    for b in &spec.bunches {
        if !g.bunch_assignment.contains_key(&b.id) {
            v.push(UnassignedBunch {
                bunch: b.id.clone(),
            });
        }
    }
    for (bunch, sink) in &g.bunch_assignment {
        let Some(b) = spec.bunches.iter().find(|x| &x.id == bunch) else {
            v.push(UnknownBunch {
                bunch: bunch.clone(),
            });
            continue;
        };
        match points.get(sink.as_str()) {
            None => v.push(UnknownEndpoint { id: sink.clone() }),
            Some(p) => {
                if p.role != PointRole::GluedSink {
                    v.push(NotGluedSink {
                        bunch: bunch.clone(),
                        point: sink.clone(),
                    });
                }
                if p.component != b.component {
                    v.push(WrongComponent {
                        bunch: bunch.clone(),
                        point: sink.clone(),
                    });
                }
                users.entry(sink.as_str()).or_default().push(bunch.clone());
            }
        }
    }
    for (sink, bunches) in users {
        if bunches.len() > 1 {
            v.push(SharedSink {
                point: sink.to_owned(),
                bunches,
            });
        }
    }

    for rc in &rcs {
        let id = rc.source_component.as_str();
        let members: Vec<&FixedPoint> = g.points.iter().filter(|p| p.component == id).collect();
        if members.is_empty() {
            v.push(EmptyComponent {
                component: id.to_owned(),
            });
            continue;
        }
        let (counts, glued) = component_counts(rc, g);
        if glued != u64::from(rc.glued_sinks) {
            v.push(GluedSinkCount {
                component: id.to_owned(),
                expected: rc.glued_sinks,
                found: glued,
            });
        }
        match ilp::audit(rc, &counts) {
            Ok(list) => v.extend(list.into_iter().map(|violation| Constraint {
                component: id.to_owned(),
                violation,
            })),
            Err(e) => v.push(InvalidSpec {
                reason: e.to_string(),
            }),
        }

        let low: Vec<&str> = members
            .iter()
            .filter(|p| p.index <= 1)
            .map(|p| p.id.as_str())
            .collect();
        if low.len() > 1 {
            let slot: BTreeMap<&str, usize> =
                low.iter().enumerate().map(|(i, id)| (*id, i)).collect();
            let mut parent: Vec<usize> = (0..low.len()).collect();
            for (a, b) in &g.connections {
                if let (Some(&i), Some(&j)) = (slot.get(a.as_str()), slot.get(b.as_str())) {
                    let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                    parent[ri] = rj;
                }
            }
            let roots: BTreeSet<usize> = (0..low.len()).map(|i| find(&mut parent, i)).collect();
            if roots.len() > 1 {
                v.push(DisconnectedSkeleton {
                    component: id.to_owned(),
                    pieces: roots.len(),
                });
            }
        }
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn remove_point(g: &mut PhaseGraph, id: &str) {
        g.points.retain(|p| p.id != id);
        g.order.retain(|p| p != id);
        g.connections.retain(|(a, b)| a != id && b != id);
    }

    #[test]
    fn flower_counts() {
        let g = realize_plus(3).unwrap();
        assert_eq!(g.points.len(), 6);
        assert_eq!(isolated_by_index(&g), [0, 2, 0, 1]);
        assert_eq!(
            g.points
                .iter()
                .filter(|p| p.role == PointRole::GluedSink)
                .count(),
            3
        );
        assert!(validate_phase_graph(&plus_spec(3), &g).is_empty());

        let g = realize_plus(1).unwrap();
        assert_eq!(isolated_by_index(&g), [0, 0, 0, 1]);
        assert_eq!(realize_plus(0), Err(RealizeError::Zero("l2")));
    }

    #[test]
    fn flower_feeds_the_orientable_audit() {
        let spec = plus_spec(2);
        let g = realize_plus(2).unwrap();
        let counts = regularized_counts(&spec, &g).unwrap();
        assert_eq!(counts["P"], PointCounts::new(2, 1, 0, 1));
        let rc = &regularize::regularize(&spec).unwrap()[0];
        assert!(ilp::audit(rc, &counts["P"]).unwrap().is_empty());
    }

    #[test]
    fn projective_cylinder_doubles_to_covered_optimum() {
        let g = realize_minus_pair();
        assert_eq!(isolated_by_index(&g), [0, 1, 1, 1]);
        assert_eq!(isolated_total(&g), 3);
        let counts = regularized_counts(&minus_pair_spec(), &g).unwrap();
        assert_eq!(counts["M"], PointCounts::new(2, 2, 2, 2));
        assert!(validate_phase_graph(&minus_pair_spec(), &g).is_empty());
    }

    #[test]
    fn twisted_bundle_witness() {
        let g = realize_nonorientable(3).unwrap();
        assert_eq!(isolated_by_index(&g), [0, 1, 1, 3]);
        assert_eq!(isolated_total(&g), 5);
        assert_eq!(isolated_total(&realize_nonorientable(1).unwrap()), 3);
        assert!(realize_nonorientable(0).is_err());
    }

    #[test]
    fn twisted_bundle_components_audit_clean() {
        let spec = nonorientable_spec(2);
        let g = realize_nonorientable(2).unwrap();
        for rc in regularize::regularize(&spec).unwrap() {
            let counts = regularized_counts(&spec, &g).unwrap();
            assert!(ilp::audit(&rc, &counts[&rc.source_component])
                .unwrap()
                .is_empty());
        }
        assert!(validate_phase_graph(&spec, &g).is_empty());
    }

    #[test]
    fn removing_the_source_breaks_lefschetz() {
        let mut g = realize_plus(3).unwrap();
        remove_point(&mut g, "P/source1");
        let v = validate_phase_graph(&plus_spec(3), &g);
        let names: Vec<&str> = v
            .iter()
            .map(|x| match x {
                GraphViolation::Constraint { violation, .. } => violation.constraint.as_str(),
                _ => "structural",
            })
            .collect();
        assert_eq!(names, [ilp::LEFSCHETZ, ilp::SOURCES]);
    }

    #[test]
    fn removing_a_saddle_disconnects_the_flower() {
        let mut g = realize_plus(3).unwrap();
        remove_point(&mut g, "P/saddle1-2");
        let v = validate_phase_graph(&plus_spec(3), &g);
        // (3, 1, 0, 1): alternating sum -1 and C1 - C0 = -2, plus the skeleton split.
        assert_eq!(v.len(), 3, "{v:?}");
        assert!(
            matches!(&v[0], GraphViolation::Constraint { violation, .. } if violation.constraint == ilp::LEFSCHETZ)
        );
        assert!(
            matches!(&v[1], GraphViolation::Constraint { violation, .. } if violation.constraint == ilp::CONNECTIVITY)
        );
        assert_eq!(
            v[2],
            GraphViolation::DisconnectedSkeleton {
                component: "P".into(),
                pieces: 2
            }
        );
    }

    #[test]
    fn disconnected_skeleton_with_balanced_counts() {
        // Keep counts optimal but drop the saddle's link to its second sink.
        let mut g = realize_plus(2).unwrap();
        g.connections
            .retain(|c| c != &("P/sink2".to_owned(), "P/saddle1-1".to_owned()));
        assert_eq!(
            validate_phase_graph(&plus_spec(2), &g),
            vec![GraphViolation::DisconnectedSkeleton {
                component: "P".into(),
                pieces: 2
            }]
        );
    }

    #[test]
    fn order_and_assignment_checks() {
        let spec = plus_spec(2);
        let mut g = realize_plus(2).unwrap();
        g.order.swap(0, 3);
        g.bunch_assignment.insert("b2".into(), "P/sink1".into());
        g.connections.push(("P/saddle1-1".into(), "P/sink2".into()));
        let v = validate_phase_graph(&spec, &g);
        assert!(v
            .iter()
            .any(|x| matches!(x, GraphViolation::IndexBlockOrder { .. })));
        assert!(v
            .iter()
            .any(|x| matches!(x, GraphViolation::SharedSink { .. })));
        assert!(v.contains(&GraphViolation::AgainstOrder {
            from: "P/saddle1-1".into(),
            to: "P/sink2".into()
        }));
    }

    #[test]
    fn unsupported_shapes_are_declined() {
        let mut spec = nonorientable_spec(1);
        spec.bunches.push(Bunch::new("extra", 2, "A", "T"));
        spec.attractors[0].bunch_ids.push("extra".into());
        spec.components[0].l2 = 2;
        assert!(matches!(
            witness(&spec),
            Err(RealizeError::Unsupported { .. })
        ));
    }

    #[test]
    fn builder_specs_validate() {
        for spec in [plus_spec(4), minus_pair_spec(), nonorientable_spec(4)] {
            assert!(crate::model::validate(&spec).is_valid());
        }
    }
}
