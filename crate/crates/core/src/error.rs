use thiserror::Error;

/// Crate-wide result type.
pub type Result<T> = std::result::Result<T, Error>;

/// Errors produced by the exact-arithmetic and combinatorial layers.
///
/// Every operation in this crate is exact, so most errors signal either a
/// violated precondition or a genuine defect (e.g. a closed form that fails
/// to divide by its `(1-q)^n` prefactor).
#[derive(Debug, Error)]
pub enum Error {
    /// Polynomial division left a nonzero remainder.
    #[error("polynomial division is not exact")]
    NotDivisible,

    /// Division by the zero polynomial.
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// A truncated series has no inverse (constant term is not 1 or -1).
    #[error("series is not invertible: constant term must be 1 or -1")]
    NotInvertible,

    /// A weighted path is not a valid histoire of the requested family.
    #[error("invalid histoire: {0}")]
    InvalidHistoire(String),

    /// A path is not admissible for the weight system it was checked against.
    #[error("invalid path: {0}")]
    InvalidPath(String),

    /// Prefix/core pair cannot be merged: final height of the prefix must
    /// equal the length of the core.
    #[error("height mismatch: prefix ends at height {prefix_height}, core has length {core_len}")]
    HeightMismatch { prefix_height: usize, core_len: usize },

    /// Exhaustive enumeration was requested beyond the guard.
    #[error("{what} of size {requested} exceeds the enumeration guard {limit}")]
    TooLarge { what: &'static str, requested: usize, limit: usize },

    /// Ballot numbers require the length and the final height to have equal parity.
    #[error("parity mismatch: n={n} and k={k} must have equal parity")]
    ParityMismatch { n: usize, k: usize },

    /// A word is not a member of the core-word set it was checked against.
    #[error("word is not a valid core word: {0}")]
    NotInC(String),

    /// Neither branch of an involution applies; this signals a defect, not
    /// a user error.
    #[error("involution defect: {0}")]
    InvolutionDefect(String),

    /// Fixed-point iteration failed to stabilise within its budget.
    #[error("functional-equation iteration did not converge")]
    NonConvergence,

    /// A computation was requested beyond its explicit guard.
    #[error("{what}: n={requested} exceeds the limit {limit} (pass --unsafe-n to override)")]
    GuardExceeded { what: &'static str, requested: usize, limit: usize },

    /// Malformed textual input.
    #[error("parse error: {0}")]
    Parse(String),
}
