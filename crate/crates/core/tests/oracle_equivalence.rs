//! The simplex/branch-and-bound path against exhaustive enumeration.

mod common;

use minperiodic_core::ilp::{
    brute_force_min, build_constraints, default_box, solve_min, ConstraintSystem, Var,
};
use minperiodic_core::model::{ComponentSpec, Side};
use minperiodic_core::{regularize_component, PointCounts, RegularizedComponent};
use num_rational::BigRational;
use proptest::prelude::*;

fn rc(side: Side, orientable: bool, l1: u32, l2: u32) -> RegularizedComponent {
    let c = ComponentSpec::new("X", side, orientable, l1, l2);
    regularize_component(&c, &vec![1; (l1 + l2) as usize]).unwrap()
}

#[test]
fn covered_pair_by_enumeration() {
    let cs = build_constraints(&rc(Side::Minus, false, 2, 0)).unwrap();
    let p = brute_force_min(&cs, 20).unwrap();
    assert_eq!(p, PointCounts::new(2, 2, 2, 2));
    assert_eq!(p.total(), 8);
}

#[test]
fn lefschetz_with_one_source_by_enumeration() {
    // Total 2 is forced; (1,0,0,1) and (0,0,1,1) both reach it and the
    // tie-break on (C3, C2, C1, C0) prefers C2 = 0.
    let cs = ConstraintSystem::default()
        .equal("lefschetz", [-1, 1, -1, 1], 0)
        .at_least("source", [0, 0, 0, 1], 1)
        .at_least("c0", [1, 0, 0, 0], 0);
    let p = brute_force_min(&cs, 5).unwrap();
    assert_eq!(p, PointCounts::new(1, 0, 0, 1));
    assert_eq!(solve_min(&cs).unwrap(), p);
}

#[test]
fn contradiction_empties_the_box() {
    let cs = ConstraintSystem::default()
        .at_least("pos", [1, 0, 0, 0], 1)
        .at_least("neg", [-1, 0, 0, 0], 0);
    assert_eq!(
        brute_force_min(&cs, 10),
        Err(minperiodic_core::ilp::OracleError::EmptyBox { bound: 10 })
    );
}

#[test]
fn audited_sample_is_feasible() {
    // (5,4,0,1) on the orientable plus system with l2 = 5
    let r = rc(Side::Plus, true, 0, 5);
    let cs = build_constraints(&r).unwrap();
    assert!(cs.is_feasible(&PointCounts::new(5, 4, 0, 1)));
    assert_eq!(
        brute_force_min(&cs, default_box(&r)).unwrap(),
        PointCounts::new(5, 4, 0, 1)
    );
}

fn case() -> impl Strategy<Value = RegularizedComponent> {
    prop_oneof![
        (1u32..=8).prop_map(|l2| rc(Side::Plus, true, 0, l2)),
        (1u32..=8).prop_map(|l2| rc(Side::Plus, false, 0, l2)),
        ((1u32..=4).prop_map(|h| 2 * h), 0u32..=4).prop_map(|(l1, l2)| rc(
            Side::Minus,
            false,
            l1,
            l2
        )),
    ]
}

fn small_rational() -> impl Strategy<Value = BigRational> {
    (-3i64..=3, 1i64..=3).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn built_systems_agree(r in case()) {
        let cs = build_constraints(&r).unwrap();
        prop_assert_eq!(solve_min(&cs).unwrap(), brute_force_min(&cs, default_box(&r)).unwrap());
    }

    /// Arbitrary small systems, boxed so that the enumeration is complete.
    #[test]
    fn random_boxed_systems_agree(
        rows in proptest::collection::vec((proptest::array::uniform4(small_rational()), -4i64..=6), 0..4),
        objective in proptest::array::uniform4(0i64..=3),
        even in proptest::array::uniform4(any::<bool>()),
    ) {
        const B: i64 = 7;
        let mut cs = ConstraintSystem::default()
            .with_objective(objective.map(|c| BigRational::from_integer(c.into())));
        for (i, (coeffs, rhs)) in rows.into_iter().enumerate() {
            cs.inequalities.push(minperiodic_core::ilp::LinearConstraint {
                name: format!("r{i}"),
                coeffs,
                rhs: BigRational::from_integer(rhs.into()),
            });
        }
        for (j, v) in Var::ALL.iter().enumerate() {
            let mut unit = [0i64; 4];
            unit[j] = -1;
            cs = cs.at_least(&format!("box-{v}"), unit, -B);
            if even[j] {
                cs = cs.even(*v);
            }
        }
        match brute_force_min(&cs, B as u64) {
            Ok(p) => prop_assert_eq!(solve_min(&cs).unwrap(), p),
            Err(_) => prop_assert!(solve_min(&cs).is_err()),
        }
    }
}
