//! Structured curvilinear mesh generation and the mesh file format.
