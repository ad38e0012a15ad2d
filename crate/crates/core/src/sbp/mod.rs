//! SBP-SAT displacement-formulation solver on curvilinear multiblock grids.

pub mod operators;
