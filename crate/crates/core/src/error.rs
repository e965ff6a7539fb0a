use thiserror::Error;

/// Errors raised by the ranking, chain, solver, and harness layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} elements, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("transition matrix is not row-stochastic: {0}")]
    NotStochastic(String),

    /// The chain has more than one communicating class; rank it with the
    /// component recursion in [`crate::markov::chain_ranking`] instead.
    #[error("reducible chain ({components} strongly connected components); use scc-recursive ranking")]
    ReducibleChain { components: usize },

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("budget exceeded: n = {n} exceeds the limit of {limit} for {what}")]
    Budget { n: usize, limit: usize, what: &'static str },

    #[error("{message}, line {line}")]
    Parse { line: usize, message: String },

    #[error("unknown algorithm '{0}'")]
    UnknownAlgorithm(String),
}

pub type Result<T> = std::result::Result<T, Error>;
