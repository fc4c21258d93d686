use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HochError {
    #[error("arity {needed} exceeds cap {cap}")]
    CapExceeded { needed: usize, cap: usize },
    #[error("cochain is not homogeneous")]
    Inhomogeneous,
    #[error("component of arity {arity} has degree profile incompatible with {expected}")]
    DegreeProfile { arity: usize, expected: &'static str },
    #[error("malformed cochain: {0}")]
    Parse(String),
}
