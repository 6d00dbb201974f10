//! ODE layer: the integrator and the problems it serves.

pub mod hprofile;
pub mod rk;
pub mod shooting;

pub use hprofile::{g_upper_bound, g_upper_residual, h_family_half, solve_h, HProfile};
pub use shooting::{shoot_c, ShootingResult};
