//! Exact arithmetic: rationals, Gaussian rationals, half-integers and dense
//! linear algebra over them. Nothing in this crate uses floating point.

mod combinatorics;
mod complex;
mod halfint;
mod matrix;
mod rational;

pub use combinatorics::{binomial, double_factorial};
pub use complex::ComplexRational;
pub use halfint::HalfInt;
pub use matrix::{lagrange_projectors, rank_and_kernel, ExactMatrix, RankKernel};
pub use rational::Rational;

pub(crate) use rational::exact_quotient;
pub(crate) use matrix::lagrange_projectors_with;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {0:?} as a rational")]
    Parse(String),
    #[error("{0} is not a half-integer")]
    NotHalfInteger(String),
    #[error("matrix shape mismatch: {0}")]
    Shape(String),
    #[error("eigenvalues {0} and {1} are not distinct")]
    RepeatedEigenvalue(String, String),
    #[error("product of (m - c·I) over the predicted eigenvalues is nonzero; predicted list is wrong")]
    AnnihilationFailure,
}
