//! Exact arithmetic for Salem polynomials and the entropies of complex
//! surface automorphisms.
//!
//! The crate decides three nested questions about a monic integer
//! polynomial `S(t)`:
//!
//! 1. is it a Salem polynomial (reciprocal, one positive root pair off the
//!    unit circle, everything else on it), and what is `λ > 1`;
//! 2. is `log λ` the entropy of an automorphism of a two-dimensional
//!    complex torus, with an explicit linear-algebra witness when it is;
//! 3. which of the K3-surface realizability conditions hold (Kummer
//!    inheritance, the degree-14/22 product condition, and the
//!    congruence-based sufficient condition for even unimodular lattices).
//!
//! All root counting is done with Sturm sequences over exact rationals;
//! the only approximate operations are the numeric period matrix of a
//! torus witness and the eigenspace signatures of a lattice isometry,
//! both of which report explicit residuals.
//!
//! Core arithmetic is generic over the scalar type via `num-traits`; the
//! aliases below fix the concrete instantiations used throughout.

pub mod error;
pub mod interval;
pub mod k3;
pub mod lattice;
pub mod matrix;
pub mod period;
pub mod poly;
pub mod projective;
pub mod salem;
pub mod scalar;
pub mod sturm;
pub mod torus;

pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Dense polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = poly::Poly<num_bigint::BigInt>;
/// Dense polynomial with exact rational coefficients.
pub type RatPoly = poly::Poly<num_rational::BigRational>;
/// Dense matrix over the integers.
pub type IntMat = matrix::Mat<num_bigint::BigInt>;
/// Dense matrix over the rationals.
pub type RatMat = matrix::Mat<num_rational::BigRational>;
