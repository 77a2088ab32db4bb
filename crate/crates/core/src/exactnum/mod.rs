//! Exact arithmetic: rationals, the cyclotomic fields Q(ζ_n), and dense
//! linear algebra over them. No floating point is used anywhere.

mod cyclotomic;
mod matrix;
pub mod poly;
mod rational;

pub use cyclotomic::{field_degree, parse_prefix, Cyclotomic};
pub use matrix::{dot, rref_rows, Matrix, Subspace, Vector};
pub use rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cyclotomic order mismatch: Q(z{left}) vs Q(z{right})")]
    OrderMismatch { left: u32, right: u32 },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("linear system has no solution")]
    SingularSystem,
    #[error("parse error at byte {pos}: {message}")]
    Parse { pos: usize, message: String },
}
