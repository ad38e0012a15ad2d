//! Velocity-stress staggered-grid solver on Cartesian grids.
