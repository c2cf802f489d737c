use thiserror::Error;

/// Errors produced by the counting, oracle and board routines.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid box shape: {0}")]
    InvalidShape(String),

    #[error("subset size k = {k} is outside 1..={cells}")]
    SubsetSizeOutOfRange { k: usize, cells: usize },

    #[error("invalid multi-index: {0}")]
    InvalidMultiIndex(String),

    #[error("invalid subset mask: {0}")]
    InvalidMask(String),

    #[error("{cells} cells exceeds the oracle limit of {limit}; use the closed form instead")]
    OracleLimitExceeded { cells: usize, limit: usize },

    #[error("{lines} occupied rows and columns exceeds the inclusion-exclusion limit of {limit}")]
    InclusionExclusionLimitExceeded { lines: usize, limit: usize },

    #[error("invalid limit: {0}")]
    InvalidLimit(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid board: {0}")]
    InvalidBoard(String),

    #[error("board parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for the errors that signal a configured resource bound was hit.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::OracleLimitExceeded { .. } | Error::InclusionExclusionLimitExceeded { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
