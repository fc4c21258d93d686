use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ToricError {
    #[error("genus must be at least 2, got {0}")]
    Genus(u32),
    #[error("the dual complex needs genus at least 3, got {0}")]
    DualComplexGenus(u32),
}
