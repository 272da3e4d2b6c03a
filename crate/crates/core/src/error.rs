// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count {n} outside supported range 1..={max}")]
    VariableCount { n: usize, max: usize },

    #[error("monomial has length {got}, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("the zero vector has no rotation representative")]
    ZeroMonomial,

    #[error("two representatives lie in the same rotation orbit: {0}")]
    DuplicateOrbit(String),

    #[error("cannot parse SANF {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("function is not homogeneous")]
    NotHomogeneous,

    #[error("operation requires an even variable count, got n = {0}")]
    OddVariableCount(usize),

    #[error("expected algebraic degree {expected}, got {got}")]
    WrongDegree { expected: String, got: String },

    #[error("{needed} monomials exceed the direct subset-sum capacity of {cap}; use the spectral route")]
    Capacity { needed: usize, cap: usize },

    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{candidates} candidates exceed the per-run budget of {budget}; pass the long-run flag or split into at least {shards} shards")]
    Budget {
        candidates: u64,
        budget: u64,
        shards: u64,
    },

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
