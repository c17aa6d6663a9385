#![allow(dead_code)]

use minperiodic_core::model::{AttractorSpec, Bunch, ComponentSpec, Side, SystemSpec};

/// `(side, orientable, l1, l2)` for each complement component.
pub type Shape = (Side, bool, u32, u32);

/// Builds a valid spec with one orientable attractor owning every 2-bunch
/// and one non-orientable attractor owning every 1-bunch.
pub fn spec_from_shapes(shapes: &[Shape]) -> SystemSpec {
    let mut bunches = Vec::new();
    let mut components = Vec::new();
    for (i, &(side, orientable, l1, l2)) in shapes.iter().enumerate() {
        let id = format!("C{i}");
        for j in 0..l1 {
            bunches.push(Bunch::new(format!("C{i}-r{j}"), 1, "B", id.clone()));
        }
        for j in 0..l2 {
            bunches.push(Bunch::new(format!("C{i}-s{j}"), 2, "A", id.clone()));
        }
        components.push(ComponentSpec::new(id, side, orientable, 0, 0));
    }
    let owned = |a: &str| -> Vec<String> {
        bunches
            .iter()
            .filter(|b| b.attractor == a)
            .map(|b| b.id.clone())
            .collect()
    };
    let mut attractors = Vec::new();
    if !owned("A").is_empty() {
        attractors.push(AttractorSpec {
            id: "A".into(),
            orientable: true,
            bunch_ids: owned("A"),
        });
    }
    if !owned("B").is_empty() {
        attractors.push(AttractorSpec {
            id: "B".into(),
            orientable: false,
            bunch_ids: owned("B"),
        });
    }
    let manifold_orientable = shapes
        .iter()
        .all(|&(side, orientable, _, _)| side == Side::Plus && orientable);
    SystemSpec::assemble(manifold_orientable, attractors, components, bunches)
}

pub fn plus(l2: u32) -> Shape {
    (Side::Plus, true, 0, l2)
}

pub fn twisted(l2: u32) -> Shape {
    (Side::Plus, false, 0, l2)
}

pub fn minus(l1: u32, l2: u32) -> Shape {
    (Side::Minus, false, l1, l2)
}
