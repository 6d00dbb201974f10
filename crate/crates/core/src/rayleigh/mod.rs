//! Finite-difference estimate of the Hardy constant of a planar domain.

pub mod grid;
pub mod solver;

pub use grid::{build_grid, GridProblem, TRUNCATION_RADIUS};
pub use solver::{estimate_constant, estimate_with_vector, EigenOptions, RayleighEstimate};
