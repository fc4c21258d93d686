//! Exact arithmetic for formal series, exterior algebras and the
//! endomorphism algebra of the Koszul complex.
//!
//! Everything here is over `BigRational`; there is no floating point path.
//! Polynomials are sparse maps from exponent vectors to coefficients,
//! exterior elements are sparse maps from generator bitmasks, and
//! [`BElement`] stores operators `f dz_S ∧ ι_{ξ_T}` on `Ω(V)` in normal
//! order.

mod belement;
mod error;
mod ext;
mod grade;
pub mod json;
pub mod linalg;
mod monomial;
mod poly;
mod rational;

pub use belement::{matmul, BElement, BKey, PolyMatrix};
pub use error::AlgebraError;
pub use ext::{mask_iter, mask_sign_merge, ExtElement, Side};
pub use grade::{
    add_weights, g_weight, mask_weight, mono_weight, negate_weight, TriGrade, Weight, WeightResult, Weighted,
};
pub use monomial::Monomial;
pub use poly::{Polynomial, Truncated};
pub use rational::{parse_rational, q, qi, rational_string, Q};

/// Largest supported number of variables; exterior subsets are `u16` masks.
pub const MAX_VARS: usize = 16;

/// Variable count, optional genus and the degree cap applied by truncating
/// operations.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RingConfig {
    pub n: usize,
    pub genus: Option<u32>,
    pub truncation_order: u32,
}

impl RingConfig {
    pub fn new(n: usize, genus: Option<u32>, truncation_order: u32) -> Result<Self, AlgebraError> {
        if n == 0 || n > MAX_VARS {
            return Err(AlgebraError::VariableCount(n));
        }
        if let Some(g) = genus {
            if truncation_order < 2 * g + 2 {
                return Err(AlgebraError::TruncationTooLow { order: truncation_order, needed: 2 * g + 2 });
            }
        }
        Ok(RingConfig { n, genus, truncation_order })
    }

    /// The three-variable ring used throughout with default order `4g`.
    pub fn for_genus(g: u32) -> Self {
        RingConfig { n: 3, genus: Some(g), truncation_order: 4 * g }
    }
}
