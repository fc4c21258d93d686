//! The toric crepant resolution of `ℂ³/K`, `K = ℤ/(2g+1)` acting with
//! weights `(1, 1, 2g−1)`: its lattice, fan, compact components and the
//! dual complex of the central fiber.
//!
//! Lattice arithmetic happens in `(2g+1)·N ⊆ ℤ³`, so every check is an
//! integer computation.

mod dual;
mod error;
mod fan;
mod lattice;
mod suite;
mod surface;

pub use dual::{dual_complex, Component, ComponentGraph, Curve, TriplePoint};
pub use error::ToricError;
pub use fan::{
    build_fan, crepancy_check, ray_is_crepant, smoothness_check, support_check, ConeCheck, Fan, Ray, SupportCheck,
};
pub use lattice::{cross, det3, IVec, QuotientLattice};
pub use suite::{toric_suite, ToricReport};
pub use surface::{component_table, surface_from_fan, SurfaceType};
