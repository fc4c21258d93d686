//! Minimal A∞-structure on `Λ(V)` transferred from the endomorphism algebra
//! of the Koszul matrix factorization.
//!
//! Each ribbon tree is read with the rule table: incoming edges apply `i`,
//! finite edges `b ↦ (−1)^{|b|−1} h(b)`, bivalent vertices
//! `b ↦ (−1)^{|b|} (∂̃ − ∂)(b)`, trivalent vertices
//! `(b₂, b₁) ↦ (−1)^{|b₁|} b₂ b₁`, and the outgoing edge `p`. The morphism
//! components read the outgoing edge like a finite edge. Arguments are written `μ^d(a_d, …, a₁)`, so the
//! first slice entry is `a_d`.

mod audit;
mod engine;
mod error;
mod structure;
mod tree;

pub use audit::{
    aux_degree_audit, diagonal_clauses, diagonal_component, diagonal_polynomial, hbar_power, hypothesis_check,
    mu_component, term_degree, AuxAudit, Clause, HypothesisReport, AUX_DEGREE, CUBIC, EQUIVARIANCE, TOP, VANISHING,
};
pub use engine::{hkr_diagonal_terms, Transfer};
pub use error::TransferError;
pub use structure::{morphism_residual, Transferred};
pub use tree::{catalan, enumerate_skeletons, enumerate_trees, tree_evaluate, RibbonTree};
