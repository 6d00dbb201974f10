//! Hardy constants of planar sectors, certificates for non-convex planar
//! domains, and a finite-difference cross-check of those constants.

pub mod angles;
pub mod certify;
pub mod cli;
pub mod error;
pub mod ode;
pub mod quad;
pub mod rayleigh;
pub mod roots;
pub mod sector;
pub mod specfun;

pub use error::{HardyError, Result};
pub use sector::{beta_critical, sector_constant, solve_c_beta, HardySolution, Method, SectorProfile};
