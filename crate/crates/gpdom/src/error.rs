use thiserror::Error;

/// Error taxonomy shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid fault: {0}")]
    InvalidFault(String),

    #[error("invalid edge: {0}")]
    InvalidEdge(String),

    #[error("invalid vertex: {0}")]
    InvalidVertex(String),

    #[error("invalid set: {0}")]
    InvalidSet(String),

    #[error("instance too large: {live} live vertices exceeds limit {limit}")]
    SizeLimit { live: usize, limit: usize },

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid exchange: {0}")]
    InvalidExchange(String),

    #[error("rejected exchange: {0}")]
    RejectedExchange(String),

    /// A rewrite that theory says must succeed failed its runtime check.
    /// Reaching this is a falsification report, not a recoverable error.
    #[error("contradiction: {0}")]
    Contradiction(String),

    #[error("infeasible pattern: {0}")]
    InfeasiblePattern(String),

    #[error("construction bug: {0}")]
    ConstructionBug(String),
}
