//! Exact arithmetic and the sparse multivariate polynomial ring.

mod monomial;
mod polynomial;
pub mod rational;
mod render;
mod var;

use thiserror::Error;

pub use monomial::Monomial;
pub use polynomial::{Coeff, Polynomial};
pub use rational::{
    common_denominator, parse_rational, rat, rat_add, rat_div, rat_int, rat_mul, rat_neg, Rational,
};
pub use render::{Prefactored, RenderCoeff, Style};
pub use var::VarId;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("variable {0} is not bound in the evaluation point")]
    UnboundVariable(VarId),
    #[error("unknown variable name {0:?}")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
}
