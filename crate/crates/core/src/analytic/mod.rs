//! Reference solutions and error metrics: the time-harmonic scattering
//! solution for a traction-free circular cavity, manufactured solutions,
//! and norms for verification runs.

pub mod bessel;
pub mod cavity;
pub mod error;
pub mod mms;

pub use cavity::{CavityField, CavityScatterParams};
pub use error::{convergence_order, relative_max_error};
pub use mms::ManufacturedSolution;
