//! Minimum numbers of isolated periodic points for Ω-stable diffeomorphisms of
//! closed 3-manifolds whose non-trivial basic sets are codimension-one
//! expanding attractors.
//!
//! The pipeline is [`model`] → [`regularize`] → [`ilp`], with [`realize`]
//! producing witness phase graphs that attain the computed minima.

pub mod ilp;
pub mod model;
pub mod realize;
pub mod regularize;

pub use ilp::{
    audit, brute_force_min, build_constraints, component_solution, global_minimum, solve_min,
    Breakdown, ComponentCase, ComponentSolution, ConstraintSystem, GlobalMinimum, PointCounts,
    Solver,
};
pub use model::{
    validate, AttractorSpec, Bunch, ComponentSpec, Side, SystemSpec, Totals, ValidationReport,
};
pub use realize::{validate_phase_graph, FixedPoint, PhaseGraph};
pub use regularize::{regularize, regularize_component, RegularizedComponent};
