use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Negative *verdicts* (not Salem, not realizable, conditions fail) are not
/// errors; they are returned as ordinary values with reasons attached.
#[derive(Debug, Error)]
pub enum Error {
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("polynomial is not reciprocal")]
    NotReciprocal,
    #[error("expected even degree, got {0}")]
    OddDegree(usize),
    #[error("expected degree {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("not a Salem polynomial: {0}")]
    NotSalem(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("no sign change on the bracket")]
    NoSignChange,
    #[error("inexact division")]
    InexactDivision,
    #[error("matrix is not invertible over the integers")]
    NotInvertible,
    #[error("matrix is not an isometry of the given form")]
    NotIsometry,
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("clustered roots within tolerance: {0}")]
    ClusteredRoots(String),
    #[error("conjugate pairing failed: {0}")]
    ConjugatePairing(String),
    #[error("square property does not hold: {0}")]
    SquarePropertyFails(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("file format: {0}")]
    FileFormat(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}
