use thiserror::Error;

/// Errors surfaced by the solvers, planners and the simulator.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or self-inconsistent instance document.
    #[error("invalid instance: {0}")]
    Instance(String),

    /// An id set refers outside the ground set, or carriers disagree.
    #[error("not a subset of the carrier: {0}")]
    NotASubset(String),

    /// Partition operations on mismatched carriers.
    #[error("carrier mismatch: {0}")]
    CarrierMismatch(String),

    /// Piecewise-linear operands live on different domains.
    #[error("domain mismatch: {0}")]
    DomainMismatch(String),

    /// A point outside a function's domain.
    #[error("argument outside domain: {0}")]
    OutOfDomain(String),

    /// An exhaustive enumeration would exceed the configured cap.
    #[error("exhaustive limit exceeded: {0}")]
    LimitExceeded(String),

    /// Caller-supplied data violates an operation's precondition.
    #[error("{0}")]
    Domain(String),

    /// An internal consistency check failed; indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
