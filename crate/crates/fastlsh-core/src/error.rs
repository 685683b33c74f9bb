//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Errors produced by hashing, indexing, and the theory numerics.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A precondition on the arguments was violated.
    InvalidArgument(&'static str),
    /// A quadrature or special-function evaluation failed to converge; the
    /// message carries diagnostics (ranges, panel counts, residuals).
    NumericFailure(String),
    /// ρ(c) is undefined at this point because p₁ or p₂ is 1.
    UndefinedRho,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArgument(msg) => write!(f, "invalid argument: {msg}"),
            Error::NumericFailure(msg) => write!(f, "numeric failure: {msg}"),
            Error::UndefinedRho => write!(f, "rho undefined: collision probability is 1"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
