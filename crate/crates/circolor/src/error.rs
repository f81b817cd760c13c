use thiserror::Error;

/// Errors produced by graph construction, verification and solving.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A constructor was called with parameters outside its domain.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An operation received structurally unusable input (partial coloring,
    /// non-permutation embedding order, disconnected graph where a connected
    /// one is required, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The backtracking search exceeded its node budget. Distinct from a
    /// negative decision: the instance status is unknown.
    #[error("search node limit exceeded ({limit} nodes)")]
    NodeLimitExceeded { limit: u64 },

    /// An internal invariant that is guaranteed by theory was violated at
    /// runtime; indicates a malformed partition or embedding.
    #[error("internal invariant violated: {0}")]
    InternalInvariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
