//! Error type shared by the exact-arithmetic, projector, and semantics layers.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong below the DSL layer.
///
/// DSL-level failures carry source positions and live in
/// [`crate::dsl::DslError`]; they wrap this type for evaluation failures.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values that must share a dimension do not.
    DimensionMismatch { expected: usize, found: usize },
    /// A state or ket was the zero vector; states must be nonzero.
    ZeroVector,
    /// A matrix posing as a projector is not equal to its conjugate transpose.
    NotHermitian { label: String },
    /// A matrix posing as a projector is not idempotent.
    NotIdempotent { label: String },
    /// Product of two projectors that do not commute is not a projector.
    NonCommuting { left: String, right: String },
    /// Weak value with orthogonal pre- and post-selection: the defining
    /// ratio has denominator zero, so the value does not exist.
    UndefinedWeakValue { pre: String, post: String },
    /// Bivalent semantics was asked about a state lying in neither the
    /// range nor the kernel of the projector.
    NoBivalentValue { projector: String, state: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::ZeroVector => write!(f, "zero vector where a nonzero vector is required"),
            Error::NotHermitian { label } => {
                write!(f, "matrix `{label}` is not Hermitian, so it is not a projector")
            }
            Error::NotIdempotent { label } => {
                write!(f, "matrix `{label}` is not idempotent, so it is not a projector")
            }
            Error::NonCommuting { left, right } => {
                write!(
                    f,
                    "projectors `{left}` and `{right}` do not commute; their product is not a projector"
                )
            }
            Error::UndefinedWeakValue { pre, post } => {
                write!(
                    f,
                    "weak value undefined: post-selection `{post}` is orthogonal to pre-selection `{pre}`"
                )
            }
            Error::NoBivalentValue { projector, state } => {
                write!(
                    f,
                    "no bivalent truth value: `{state}` lies in neither the range nor the kernel of `{projector}`"
                )
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
