//! Exact-string encodings of scalars, vectors and matrices.

use semireal::{Field, Matrix, Vector};

use crate::error::CliError;

pub type MatrixRows = Vec<Vec<String>>;

/// Parses `p`, `p/q` or a Gaussian form; anything with a decimal point or
/// exponent is rejected before the field parser sees it.
pub fn scalar<F: Field>(s: &str) -> Result<F, CliError> {
    if s.contains(['.', 'e', 'E']) {
        return Err(CliError::Parse(format!("scalar {s:?} is not exact")));
    }
    s.parse::<F>().map_err(|e| CliError::Parse(e.to_string()))
}

pub fn vector<F: Field>(entries: &[String]) -> Result<Vector<F>, CliError> {
    Ok(Vector::new(entries.iter().map(|s| scalar(s)).collect::<Result<_, _>>()?))
}

pub fn matrix<F: Field>(rows: &[Vec<String>]) -> Result<Matrix<F>, CliError> {
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|s| scalar(s)).collect::<Result<Vec<F>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Matrix::from_rows(parsed).map_err(|e| CliError::Parse(e.to_string()))
}

pub fn square_matrix<F: Field>(rows: &[Vec<String>], dim: usize) -> Result<Matrix<F>, CliError> {
    let m = matrix(rows)?;
    if m.rows() != dim || m.cols() != dim {
        return Err(CliError::Parse(format!("expected a {dim}x{dim} matrix, found {}x{}", m.rows(), m.cols())));
    }
    Ok(m)
}

pub fn enc_vector<F: Field>(v: &Vector<F>) -> Vec<String> {
    v.entries().iter().map(|e| e.to_string()).collect()
}

pub fn enc_matrix<F: Field>(m: &Matrix<F>) -> MatrixRows {
    (0..m.rows()).map(|i| m.row(i).iter().map(|e| e.to_string()).collect()).collect()
}
