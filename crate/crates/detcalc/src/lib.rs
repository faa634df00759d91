//! Exact determinant evaluation over the rationals.
//!
//! The crate is organised around a small [`Scalar`] trait so that every matrix
//! algorithm in [`linalg`] runs unchanged over rationals, polynomials and
//! rational functions. On top of that sit the Hankel/continued-fraction tools,
//! combinatorial ground sets, a registry of closed-form determinant identities
//! with an exact randomized verifier, and a sequence guesser.

pub mod catalog;
pub mod combinat;
pub mod error;
pub mod exactnum;
pub mod guess;
pub mod hankel;
pub mod linalg;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary precision rational, always kept in lowest terms.
pub type Rational = num_rational::BigRational;
/// Dense univariate polynomial with rational coefficients.
pub type PolyQ = exactnum::poly::Poly;
/// Quotient of two [`PolyQ`] with monic denominator.
pub type RatFn = exactnum::ratfn::RationalFunction;
/// Truncated Laurent series over the rationals.
pub type TruncSeries = exactnum::series::Series;

/// Matrix over the rationals.
pub type MatrixQ = linalg::Matrix<Rational>;
/// Matrix over rational polynomials.
pub type MatrixPoly = linalg::Matrix<PolyQ>;
/// Matrix over rational functions.
pub type MatrixRatFn = linalg::Matrix<RatFn>;
