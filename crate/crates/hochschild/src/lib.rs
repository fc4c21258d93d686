//! Hochschild cochains `CC(A, A)` of `A = Λ(V)` with the shifted grading
//! `|φ| = i + j − 1` for `φ ∈ Hom^j(A^{⊗i}, A)`.
//!
//! Arguments are written right to left: a slice `[a_j, …, a₁]`, so `args[0]`
//! is `a_j` and the last entry is `a₁`. Basis elements of `A` are `u16`
//! masks over the generators `ξ_k`.

mod ainf;
mod cochain;
mod error;
mod gauge;
mod ops;

pub use ainf::{
    ainf_from_mc, ainf_residual, corrupted, mc_from_ainf, sign_convert, stasheff_residual_standard, AInfStructure,
    FromMc, Provenance, StandardForm, Strict,
};
pub use cochain::{all_tuples, Cochain, CochainEntryJson};
pub use error::HochError;
pub use gauge::{gauge_action, gauge_phi, morphism_residual, GaugeMorphism};
pub use ops::{bracket_eval, diff_eval, eval_multilinear, gerstenhaber, hoch_diff, product_cochain, solve_primitive};

/// Parity of a basis mask.
pub fn deg(mask: u16) -> u32 {
    mask.count_ones() % 2
}
