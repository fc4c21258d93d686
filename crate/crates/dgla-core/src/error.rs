use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DglaError {
    #[error("invalid presentation: {0}")]
    Invalid(String),
    #[error("expected a homogeneous element of degree {expected}")]
    Degree { expected: i32 },
    #[error("inputs are not homogeneous")]
    Inhomogeneous,
    #[error("vector of length {got} in a presentation of dimension {dim}")]
    Length { got: usize, dim: usize },
    #[error("presentation is not nilpotent")]
    NotNilpotent,
    #[error("arity {needed} exceeds the cap {cap}")]
    ArityCap { needed: usize, cap: usize },
    #[error("ideal is not a central DG ideal: {0}")]
    NotCentral(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed presentation: {0}")]
    Parse(String),
}
