//! Finite-dimensional nilpotent DGLAs over the rationals: Maurer-Cartan
//! residuals, the gauge action, BCH products, L∞-morphisms and the
//! obstructions to lifting along central extensions.

mod dgla;
mod error;
mod homotopy;
mod linf;
mod mc;
mod obstruction;
mod random;
mod signs;
mod suite;

pub use dgla::{add, is_zero, scale, sub, BracketJson, Dgla, DiffJson, Generator, PresentationJson, Vector};
pub use error::DglaError;
pub use homotopy::{homotopy_o1a, integrate_dt, line_homotopy, PolyLineForm};
pub use linf::LInfMorphism;
pub use mc::{bch, exp_ad, gauge_act, gauge_flow, is_mc, mc_residual, McElement};
pub use obstruction::{
    find_gauge_lift, find_mc_lift, obstruction_o1, obstruction_o2, obstruction_o2_of_lift, CentralIdeal,
    CohomologyClass,
};
pub use random::{random_central_extension, RandomInstance};
pub use signs::{chi_sign, chi_sign_i, koszul_sign, koszul_sign_i, permutations, sgn_i};
pub use suite::{obstruction_suite, GaugeCase, LiftCase, SuiteReport};
