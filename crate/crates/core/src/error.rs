//! Error type shared by every module.

use thiserror::Error;

/// Failures reported by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a basis: {0}")]
    NotABasis(String),
    #[error("pivot on a non-edge: {0} and {1} are not adjacent")]
    PivotOnNonEdge(String, String),
    #[error("matroid is not 3-connected")]
    NotThreeConnected,
    #[error("bad basepoint for 2-sum: {0}")]
    BadBasepoint(String),
    #[error("({0:?}, {1:?}) is not an exact separation")]
    NotExactSeparation(Vec<String>, Vec<String>),
    #[error("{0:?} is not a coindependent triangle")]
    NotCoindependentTriangle(Vec<String>),
    #[error("{0:?} is not an independent triad")]
    NotIndependentTriad(Vec<String>),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("bad rank {rank} for {kind} Mobius matroid")]
    BadRank { kind: &'static str, rank: usize },
    #[error("unknown catalog id: {0}")]
    UnknownId(String),
    #[error("matroid is a wheel")]
    IsAWheel,
    #[error("no reduction step found")]
    NotFound,
    #[error("unknown check id: {0}")]
    UnknownCheckId(String),
    #[error("unknown label: {0}")]
    UnknownLabel(String),
    #[error("invalid matroid: {0}")]
    Invalid(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
