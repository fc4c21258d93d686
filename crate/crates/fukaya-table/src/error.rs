use thiserror::Error;

#[derive(Debug, Error)]
pub enum FukayaError {
    #[error("genus must be at least 2, got {0}")]
    Genus(u32),
    #[error("table checksum mismatch: expected {expected}, got {got}")]
    Checksum { expected: String, got: String },
    #[error("table does not parse: {0}")]
    Parse(String),
    #[error("bad table data: {0}")]
    Data(String),
}
