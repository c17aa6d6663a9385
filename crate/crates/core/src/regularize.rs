//! Passage to a regular system.
//!
//! Each complement component is capped off: minus-side components are first
//! replaced by their orientation double cover (an `RP²` boundary lifts to one
//! sphere, an `S²` boundary lifts to two), then every boundary sphere is
//! filled with a ball containing one hyperbolic sink. Only the counting
//! consequences of that surgery are tracked here.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::model::{self, ComponentSpec, InvalidSpec, Side, SystemSpec};

/// Counting data of one component after the double cover and sink gluing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularizedComponent {
    pub source_component: String,
    /// A double cover was taken (minus side).
    pub covered: bool,
    pub boundary_spheres: u32,
    pub glued_sinks: u32,
    pub l1: u32,
    pub l2: u32,
    pub component_orientable: bool,
    /// Lengths of the cycles in which the glued sinks are permuted.
    pub cycle_periods: Vec<u32>,
}

impl RegularizedComponent {
    pub fn side(&self) -> Side {
        if self.covered {
            Side::Minus
        } else {
            Side::Plus
        }
    }
}

/// Topological type of the orbit space of a cycle of bunch basins.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrbitSpace {
    /// `S² × S¹`
    ProductBundle,
    /// the non-orientable `S²`-bundle over `S¹`
    TwistedBundle,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RegularizeError {
    #[error("component '{component}' expects {expected} bunch periods, got {got}")]
    PeriodCount {
        component: String,
        expected: usize,
        got: usize,
    },
    #[error("component '{component}' has a zero bunch period")]
    ZeroPeriod { component: String },
    #[error("component '{component}': {count} boundary spheres of period {period} do not close into cycles")]
    IncompleteCycle {
        component: String,
        period: u32,
        count: u32,
    },
    #[error("component '{component}' is not a valid {side}-side component (l1 = {l1})")]
    BadSide {
        component: String,
        side: Side,
        l1: u32,
    },
    #[error(transparent)]
    Invalid(#[from] InvalidSpec),
}

/// Regularizes one component. `bunch_periods` lists the periods of the
/// attached bunch basins, the `l1` degree-1 basins first.
///
/// Lifted spheres keep the period of the basin they cover.
pub fn regularize_component(
    c: &ComponentSpec,
    bunch_periods: &[u32],
) -> Result<RegularizedComponent, RegularizeError> {
    let expected = (c.l1 + c.l2) as usize;
    if bunch_periods.len() != expected {
        return Err(RegularizeError::PeriodCount {
            component: c.id.clone(),
            expected,
            got: bunch_periods.len(),
        });
    }
    if bunch_periods.contains(&0) {
        return Err(RegularizeError::ZeroPeriod {
            component: c.id.clone(),
        });
    }
    let covered = match c.side {
        Side::Plus if c.l1 == 0 => false,
        Side::Minus if c.l1 > 0 && c.l1.is_multiple_of(2) => true,
        side => {
            return Err(RegularizeError::BadSide {
                component: c.id.clone(),
                side,
                l1: c.l1,
            });
        }
    };

    let (degree_one, degree_two) = bunch_periods.split_at(c.l1 as usize);
    let copies = if covered { 2 } else { 1 };
    let mut spheres_by_period: BTreeMap<u32, u32> = BTreeMap::new();
    for &p in degree_one {
        *spheres_by_period.entry(p).or_default() += 1;
    }
    for &p in degree_two {
        *spheres_by_period.entry(p).or_default() += copies;
    }

    let mut cycle_periods = Vec::new();
    for (period, count) in spheres_by_period {
        if count % period != 0 {
            return Err(RegularizeError::IncompleteCycle {
                component: c.id.clone(),
                period,
                count,
            });
        }
        cycle_periods.extend(std::iter::repeat_n(period, (count / period) as usize));
    }

    let boundary_spheres = if covered { c.l1 + 2 * c.l2 } else { c.l2 };
    Ok(RegularizedComponent {
        source_component: c.id.clone(),
        covered,
        boundary_spheres,
        glued_sinks: boundary_spheres,
        l1: c.l1,
        l2: c.l2,
        component_orientable: c.orientable,
        cycle_periods,
    })
}

/// Regularizes every component of a valid spec, in input order.
pub fn regularize(spec: &SystemSpec) -> Result<Vec<RegularizedComponent>, RegularizeError> {
    let report = model::validate(spec);
    if !report.is_valid() {
        return Err(InvalidSpec(report).into());
    }
    spec.components
        .iter()
        .map(|c| {
            let periods: Vec<u32> = spec.bunches_of(&c.id).iter().map(|b| b.period).collect();
            regularize_component(c, &periods)
        })
        .collect()
}

pub fn orbit_space_orientation(_period: u32, reverses: bool) -> OrbitSpace {
    if reverses {
        OrbitSpace::TwistedBundle
    } else {
        OrbitSpace::ProductBundle
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{AttractorSpec, Bunch};

    #[test]
    fn minus_pair_gives_two_spheres() {
        let c = ComponentSpec::new("M", Side::Minus, false, 2, 0);
        let rc = regularize_component(&c, &[1, 1]).unwrap();
        assert!(rc.covered);
        assert_eq!((rc.boundary_spheres, rc.glued_sinks), (2, 2));
        assert_eq!(rc.cycle_periods, vec![1, 1]);
    }

    #[test]
    fn plus_side_is_untouched_by_cover() {
        let c = ComponentSpec::new("P", Side::Plus, true, 0, 3);
        let rc = regularize_component(&c, &[1, 1, 1]).unwrap();
        assert!(!rc.covered);
        assert_eq!((rc.boundary_spheres, rc.glued_sinks), (3, 3));
    }

    #[test]
    fn minus_with_sphere_basin_doubles_it() {
        // k1- + 2 k2- = 2 + 2*1
        let c = ComponentSpec::new("M", Side::Minus, false, 2, 1);
        let rc = regularize_component(&c, &[1, 1, 1]).unwrap();
        assert_eq!((rc.boundary_spheres, rc.glued_sinks), (4, 4));
        assert_eq!(rc.cycle_periods.iter().sum::<u32>(), 4);
    }

    #[test]
    fn period_list_length_is_checked() {
        let c = ComponentSpec::new("P", Side::Plus, true, 0, 2);
        assert_eq!(
            regularize_component(&c, &[1]),
            Err(RegularizeError::PeriodCount {
                component: "P".into(),
                expected: 2,
                got: 1
            })
        );
    }

    #[test]
    fn cycles_group_spheres_of_equal_period() {
        let c = ComponentSpec::new("P", Side::Plus, true, 0, 5);
        let rc = regularize_component(&c, &[2, 1, 2, 3, 3]).unwrap_err();
        assert!(matches!(
            rc,
            RegularizeError::IncompleteCycle {
                period: 3,
                count: 2,
                ..
            }
        ));

        let c = ComponentSpec::new("P", Side::Plus, true, 0, 5);
        let rc = regularize_component(&c, &[2, 1, 2, 1, 1]).unwrap();
        assert_eq!(rc.cycle_periods, vec![1, 1, 1, 2]);
        assert_eq!(rc.cycle_periods.iter().sum::<u32>(), rc.glued_sinks);
    }

    #[test]
    fn lifted_sphere_basin_keeps_its_period() {
        // One 2-cycle of degree-2 basins lifts to two 2-cycles.
        let c = ComponentSpec::new("M", Side::Minus, false, 2, 2);
        let rc = regularize_component(&c, &[1, 1, 2, 2]).unwrap();
        assert_eq!(rc.cycle_periods, vec![1, 1, 2, 2]);
        assert_eq!(rc.glued_sinks, 6);
    }

    #[test]
    fn bad_side_is_rejected() {
        let c = ComponentSpec::new("M", Side::Minus, false, 1, 0);
        assert!(matches!(
            regularize_component(&c, &[1]),
            Err(RegularizeError::BadSide { .. })
        ));
        let c = ComponentSpec::new("P", Side::Plus, true, 2, 0);
        assert!(matches!(
            regularize_component(&c, &[1, 1]),
            Err(RegularizeError::BadSide { .. })
        ));
    }

    fn mixed_spec() -> SystemSpec {
        // one plus component with three 2-bunches, two minus pairs of 1-bunches
        let mut bunches = vec![];
        let mut comps = vec![ComponentSpec::new("P", Side::Plus, true, 0, 0)];
        for i in 0..3 {
            bunches.push(Bunch::new(format!("s{i}"), 2, "A", "P"));
        }
        for pair in 0..2 {
            let id = format!("M{pair}");
            comps.push(ComponentSpec::new(id.clone(), Side::Minus, false, 0, 0));
            bunches.push(Bunch::new(format!("r{pair}a"), 1, "B", id.clone()));
            bunches.push(Bunch::new(format!("r{pair}b"), 1, "B", id));
        }
        let ids = |a: &str| {
            bunches
                .iter()
                .filter(|b| b.attractor == a)
                .map(|b| b.id.clone())
                .collect()
        };
        SystemSpec::assemble(
            false,
            vec![
                AttractorSpec {
                    id: "A".into(),
                    orientable: true,
                    bunch_ids: ids("A"),
                },
                AttractorSpec {
                    id: "B".into(),
                    orientable: false,
                    bunch_ids: ids("B"),
                },
            ],
            comps,
            bunches,
        )
    }

    #[test]
    fn total_glued_sinks_for_mixed_spec() {
        // k2 + k1 with k1 = 4, k2 = 3
        let rcs = regularize(&mixed_spec()).unwrap();
        assert_eq!(rcs.len(), 3);
        assert_eq!(rcs.iter().map(|r| r.glued_sinks).sum::<u32>(), 7);
        assert_eq!(
            rcs.iter()
                .map(|r| r.source_component.as_str())
                .collect::<Vec<_>>(),
            ["P", "M0", "M1"]
        );
    }

    #[test]
    fn regularize_propagates_validation() {
        let mut spec = mixed_spec();
        spec.components[1].orientable = true;
        assert!(matches!(
            regularize(&spec),
            Err(RegularizeError::Invalid(_))
        ));
    }

    #[test]
    fn orbit_space_flag() {
        assert_eq!(orbit_space_orientation(1, false), OrbitSpace::ProductBundle);
        assert_eq!(orbit_space_orientation(1, true), OrbitSpace::TwistedBundle);
        assert_eq!(orbit_space_orientation(3, false), OrbitSpace::ProductBundle);
    }
}
