//! Two-solver toolkit for 2D elastic wave propagation.
//!
//! One solver integrates the first-order velocity-stress system on a
//! staggered Cartesian grid (4th order in space, leapfrog in time) and
//! represents cavities and interfaces by material contrast alone. The
//! other integrates the second-order displacement formulation on
//! boundary-conforming curvilinear multiblock grids with summation-by-parts
//! operators and simultaneous-approximation-term boundary/interface
//! treatment (4th order in time).
//!
//! Supporting modules provide structured mesh generation (transfinite
//! blocks, ring meshes around circular cavities, layered tunnel scenes),
//! moment-matched point sources, an analytic plane-wave-on-cavity
//! scattering solution used as a verification oracle, and manufactured
//! solutions for convergence measurement.

pub mod analytic;
pub mod grid;
pub mod material;
pub mod mesh;
pub mod sbp;
pub mod scene;
pub mod source;
pub mod svs;

pub use grid::{CartesianGrid, Receiver, TimeAxis};
pub use material::Material;
