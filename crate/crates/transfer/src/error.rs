use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransferError {
    #[error("tree has {leaves} leaves but {args} arguments were given")]
    MalformedTree { leaves: usize, args: usize },
    #[error("arity {arity} exceeds the cap {cap}")]
    CapExceeded { arity: usize, cap: usize },
}
