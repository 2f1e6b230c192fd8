use thiserror::Error;

use crate::textio::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground set size {0} is not supported (must be 1..=64)")]
    GroundSetSize(usize),

    #[error("index {index} is outside the ground set 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("statements are over different ground sets ({left} vs {right} variables)")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("statement is not in pure form: {0}")]
    NotPureForm(String),

    #[error("invalid weakening: {0}")]
    InvalidWeakening(String),

    #[error("the premise set is empty")]
    EmptyPremises,

    #[error("bounds exceeded: {0}")]
    BoundsExceeded(String),

    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    #[error("no separating distribution exists: {0}")]
    NoWitness(String),

    /// A template failed the oracle where the theory says one must pass.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error(transparent)]
    Parse(#[from] ParseError),
}
