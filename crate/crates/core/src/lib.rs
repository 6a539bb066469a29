//! Universal Euler-characteristic polynomials of coherent sheaves on
//! projective space, written in terms of Chern classes.
//!
//! For a dimension `N` and rank `n` the crate builds the polynomial
//! `P(C1, ..., CN)` with `chi(F) = P(c1(F), ..., cN(F))` and its twisted
//! form `G(C1, ..., CN, T)` with `chi(F(t)) = G(c(F), t)`. The construction
//! goes through unsigned Stirling numbers of the first kind
//! ([`stirling`]) and the power-sum to elementary-symmetric basis change
//! ([`symmfun`]); [`oracle`] checks results against split bundles.
//!
//! Polynomials are generic over their coefficient ring; the crate works
//! with the [`RatPoly`] and [`IntPoly`] instances.

pub mod algebra;
pub mod bench;
pub mod eulerchi;
pub mod oracle;
pub mod stirling;
pub mod symmfun;

pub use algebra::{AlgebraError, Monomial, Polynomial, Rational, VarId};
pub use eulerchi::{ChernVector, ChiError, ChiRequest, Rank};
pub use symmfun::PowerSumMethod;

pub type Integer = num_bigint::BigInt;

/// Polynomial with exact rational coefficients.
pub type RatPoly = Polynomial<Rational>;

/// Polynomial with arbitrary-precision integer coefficients.
pub type IntPoly = Polynomial<Integer>;
