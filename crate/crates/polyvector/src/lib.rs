//! Formal polyvector fields `ℂ[[V∨]] ⊗ Λ(V)`: the Schouten bracket, the HKR
//! map from Hochschild cochains, the Koszul complex of `ι_{dW}`, invariant
//! bases, and the normalization of a superpotential up to formal change of
//! coordinates.

mod basis;
mod error;
mod field;
mod hkr;
mod koszul;
mod normalize;

pub use basis::{graded_basis, invariant_basis};
pub use error::PolyvectorError;
pub use field::{exp_ad, schouten, Polyvector, PolyvectorJson};
pub use hkr::{hkr, hkr_eval};
pub use koszul::{ideal_reduce, koszul_solve, mc_split_residual, reduce_in_degrees, IdealReduction, McSplit};
pub use normalize::{normalize, pushforward_diffeo, superpotential, Certificate, FormalDiffeo, Step, StepKind};
