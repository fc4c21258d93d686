use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("variable count {0} outside 1..=16")]
    VariableCount(usize),
    #[error("mismatched variable counts {0} and {1}")]
    Mismatch(usize, usize),
    #[error("variable index {index} out of range for {n} variables")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("truncation order {order} below required {needed}")]
    TruncationTooLow { order: u32, needed: u32 },
    #[error("cannot combine exterior elements over different sides")]
    MixedSides,
    #[error("matrix has shape {rows}x{cols}, expected {expected}x{expected}")]
    MatrixShape { rows: usize, cols: usize, expected: usize },
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("weights need a genus and three variables")]
    NoWeights,
}
