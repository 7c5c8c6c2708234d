use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric precondition was violated (nonpositive where positive is
    /// required, negative under a square root, unparseable text, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Sum or difference of surds with distinct nonzero radicands. Such a
    /// value is not a single-term surd, so the operation is refused instead
    /// of falling back to floating point.
    #[error("incompatible radicands: sqrt({0}) and sqrt({1})")]
    IncompatibleRadicands(String, String),

    /// Rejected triple parameters (m, n) or scale factor t.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Rejected radii pair.
    #[error("invalid radii: {0}")]
    InvalidRadii(String),

    /// A claimed Pythagorean triple that is not primitive, not ordered, or
    /// not a triple at all.
    #[error("invalid triple: {0}")]
    InvalidTriple(String),

    /// A cross-check between two independent computation paths exceeded its
    /// tolerance.
    #[error("verification failure: {0}")]
    VerificationFailure(String),
}

pub type Result<T> = std::result::Result<T, Error>;
