use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("label family mismatch: {0}")]
    FamilyMismatch(String),
    #[error("illegal orientation: {0}")]
    IllegalOrientation(String),
    #[error("tile count {found} does not match board capacity {expected}")]
    CapacityMismatch { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid partition system: {0}")]
    InvalidPartition(String),
    #[error("exact count overflowed")]
    Overflow,
}
