//! Exact arithmetic over the rationals and over real biquadratic fields
//! `Q(√d1, √d2)`.
//!
//! Every coordinate handled by the rest of the crate is a [`QuadExt`]. Signs
//! are decided without any floating-point step, so predicates built on top of
//! [`QuadExt::sign`] are exact.

mod field;
mod linalg;
mod rational;

pub use field::{FieldContext, QuadExt, Sign};
pub use linalg::{determinant, rank, solve_linear, LinearSolution};
pub use rational::{parse_rational, rational, Rational};

use thiserror::Error;

/// Errors raised by the exact arithmetic layer.
#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum NumericError {
    /// `d` must be a positive square-free integer.
    #[error("{0} is not a positive square-free integer")]
    NotSquareFree(u64),
    /// Both radicands coincide, so the basis would be linearly dependent.
    #[error("field context ({0}, {0}) has a repeated radicand")]
    RepeatedRadicand(u64),
    /// Two operands live in different, non-nested fields.
    #[error("context mismatch: {left} vs {right}")]
    ContextMismatch {
        left: FieldContext,
        right: FieldContext,
    },
    #[error("division by zero")]
    DivisionByZero,
    #[error("malformed rational literal {0:?}")]
    BadRational(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    /// Back-substitution failed; indicates an internal bug.
    #[error("linear solve failed back-substitution check")]
    SolveCheck,
}
