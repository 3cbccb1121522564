//! Exact scalar fields (ℚ, ℚ(i), 𝔽_p) and dense linear algebra over them.
//!
//! Nothing here touches floating point: every conjugation certificate
//! downstream is checked by exact equality.

mod field;
mod gaussian;
mod matrix;
mod prime;
mod rational;
mod vector;

use thiserror::Error;

pub use field::Field;
pub use gaussian::GaussianRational;
pub use matrix::{has_fixed_point, kernel_basis, solve_linear, Matrix, Rref};
pub use prime::{is_prime, Fp, F2, F3};
pub use rational::Rational;
pub use vector::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is {rows}x{cols}, a square matrix is required")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("rows have different lengths")]
    Ragged,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("parse error: {0}")]
    Parse(String),
}
