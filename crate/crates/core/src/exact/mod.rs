//! Exact arithmetic: rationals, the golden field ℚ(√5), Eisenstein integers,
//! and small vectors and matrices over ℚ(√5). Nothing here touches floating
//! point except display helpers.

mod eisenstein;
mod matrix;
mod quaternion;
mod sqrt5;

pub use eisenstein::Eisenstein;
pub use matrix::{ExactMatrix, ExactVector, MatrixSummary};
pub use quaternion::Quaternion;
pub use sqrt5::Sqrt5Scalar;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("matrix rows must all have the matrix dimension")]
    NotSquare,
}
