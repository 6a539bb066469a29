//! Exact rational arithmetic.
//!
//! Backed by [`num_rational::BigRational`], which keeps every value reduced
//! with a positive denominator (zero is `0/1`). The free functions here are
//! the field operations the rest of the crate uses; only division can fail.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::AlgebraError;

pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(value: impl Into<BigInt>) -> Rational {
    Rational::from_integer(value.into())
}

pub fn rat_add(a: &Rational, b: &Rational) -> Rational {
    a + b
}

pub fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    a * b
}

pub fn rat_neg(a: &Rational) -> Rational {
    -a
}

pub fn rat_div(a: &Rational, b: &Rational) -> Result<Rational, AlgebraError> {
    if b.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(a / b)
}

/// Parses `"p/q"` or `"p"`; the result is reduced.
pub fn parse_rational(s: &str) -> Result<Rational, AlgebraError> {
    let bad = || AlgebraError::Parse(format!("invalid rational {s:?}"));
    let s = s.trim();
    let (numer, denom) = match s.split_once('/') {
        Some((p, q)) => (p.trim(), q.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(AlgebraError::DivisionByZero);
    }
    Ok(Rational::new(numer, denom))
}

/// Least common multiple of the denominators of `values` (1 for none).
pub fn common_denominator<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
