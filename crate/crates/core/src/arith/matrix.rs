use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{ArithError, Field, Vector};

/// Dense row-major matrix over an exact field. Value type with structural
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

/// Reduced row echelon form of a matrix together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref<F> {
    pub reduced: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { F::one() } else { F::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self, ArithError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(ArithError::Ragged);
        }
        Ok(Matrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer-entry matrix, mainly for fixtures. Panics on ragged input.
    pub fn from_i64s(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| F::from_i64(v)).collect())
                .collect(),
        )
        .expect("ragged integer matrix")
    }

    pub fn diagonal(entries: &[F]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| if i == j { entries[i].clone() } else { F::zero() })
    }

    /// Matrix whose columns are the given vectors (all of equal dimension).
    pub fn from_columns(rows: usize, columns: &[Vector<F>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: F) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector<F> {
        Vector::new((0..self.rows).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| c.clone() * x.clone()).collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    /// Rows `r0..r1`, columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        Self::from_fn(r1 - r0, c1 - c0, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    /// Block-diagonal sum `diag(self, other)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let (r, c) = (self.rows, self.cols);
        Self::from_fn(r + other.rows, c + other.cols, |i, j| {
            if i < r && j < c {
                self.get(i, j).clone()
            } else if i >= r && j >= c {
                other.get(i - r, j - c).clone()
            } else {
                F::zero()
            }
        })
    }

    pub fn mul_vec(&self, v: &Vector<F>) -> Vector<F> {
        assert_eq!(self.cols, v.dim(), "matrix-vector dimension mismatch");
        Vector::new(
            (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .zip(v.entries())
                        .fold(F::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
                })
                .collect(),
        )
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self, ArithError> {
        if self.cols != rhs.rows {
            return Err(ArithError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(F::zero(), |acc, k| {
                acc + self.get(i, k).clone() * rhs.get(k, j).clone()
            })
        }))
    }

    fn require_square(&self) -> Result<(), ArithError> {
        if self.is_square() {
            Ok(())
        } else {
            Err(ArithError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Gauss–Jordan elimination. The pivot in each column is the first
    /// nonzero entry at or below the current row.
    pub fn rref(&self) -> Rref<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).inv().expect("pivot is nonzero");
            for j in col..m.cols {
                let v = m.get(row, j).clone() * inv.clone();
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in col..m.cols {
                    let v = m.get(r, j).clone() - factor.clone() * m.get(row, j).clone();
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        Rref { reduced: m, pivots }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    pub fn det(&self) -> Result<F, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let mut m = self.clone();
        let mut det = F::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m.get(r, col).is_zero()) else {
                return Ok(F::zero());
            };
            if p != col {
                m.swap_rows(p, col);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det = det * pivot.clone();
            let inv = pivot.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone() * inv.clone();
                for j in col..n {
                    let v = m.get(r, j).clone() - factor.clone() * m.get(col, j).clone();
                    m.set(r, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Self, ArithError> {
        self.require_square()?;
        let n = self.rows;
        let augmented = Self::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let Rref { reduced, pivots } = augmented.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(ArithError::Singular);
        }
        Ok(reduced.block(0, n, n, 2 * n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// `self^k`; `A⁰ = I` and negative `k` goes through the inverse.
    pub fn pow(&self, k: i64) -> Result<Self, ArithError> {
        self.require_square()?;
        let base = if k < 0 { self.inverse()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.rows);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            e >>= 1;
            if e > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Basis of the null space, one vector per free column of the RREF.
    /// Empty exactly when the columns are independent.
    pub fn kernel_basis(&self) -> Vec<Vector<F>> {
        let Rref { reduced, pivots } = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = Vector::zeros(self.cols).into_entries();
                v[f] = F::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -reduced.get(r, f).clone();
                }
                Vector::new(v)
            })
            .collect()
    }

    /// Basis of the column space: the pivot columns of `self`.
    pub fn image_basis(&self) -> Vec<Vector<F>> {
        self.rref().pivots.iter().map(|&c| self.column(c)).collect()
    }

    /// A solution of `self · w = b`. Free variables are set to zero, so an
    /// invertible system yields its unique solution. `Ok(None)` when the
    /// system is inconsistent.
    pub fn solve(&self, b: &Vector<F>) -> Result<Option<Vector<F>>, ArithError> {
        if b.dim() != self.rows {
            return Err(ArithError::DimensionMismatch {
                expected: self.rows,
                found: b.dim(),
            });
        }
        let n = self.cols;
        let augmented = Self::from_fn(self.rows, n + 1, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let Rref { reduced, pivots } = augmented.rref();
        if pivots.last() == Some(&n) {
            return Ok(None);
        }
        let mut w = vec![F::zero(); n];
        for (r, &p) in pivots.iter().enumerate() {
            w[p] = reduced.get(r, n).clone();
        }
        Ok(Some(Vector::new(w)))
    }

    /// Whether `self` fixes a nonzero vector, i.e. `det(self − I) = 0`.
    pub fn has_fixed_point(&self) -> Result<bool, ArithError> {
        self.require_square()?;
        let shifted = self - &Self::identity(self.rows);
        Ok(!shifted.kernel_basis().is_empty())
    }
}

/// Free-function form of [`Matrix::solve`].
pub fn solve_linear<F: Field>(a: &Matrix<F>, b: &Vector<F>) -> Result<Option<Vector<F>>, ArithError> {
    a.solve(b)
}

/// Free-function form of [`Matrix::kernel_basis`].
pub fn kernel_basis<F: Field>(a: &Matrix<F>) -> Vec<Vector<F>> {
    a.kernel_basis()
}

/// Free-function form of [`Matrix::has_fixed_point`].
pub fn has_fixed_point<F: Field>(a: &Matrix<F>) -> Result<bool, ArithError> {
    a.has_fixed_point()
}

impl<F: Field> Mul for &Matrix<F> {
    type Output = Matrix<F>;
    fn mul(self, rhs: &Matrix<F>) -> Matrix<F> {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl<F: Field> Add for &Matrix<F> {
    type Output = Matrix<F>;
    fn add(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }
}

impl<F: Field> Sub for &Matrix<F> {
    type Output = Matrix<F>;
    fn sub(self, rhs: &Matrix<F>) -> Matrix<F> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        }
    }
}

impl<F: Field> Neg for &Matrix<F> {
    type Output = Matrix<F>;
    fn neg(self) -> Matrix<F> {
        self.scale(&-F::one())
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.data[i * self.cols..(i + 1) * self.cols].iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e:?}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, e) in self.data[i * self.cols..(i + 1) * self.cols].iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{e}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Rational, F2};

    type Q = Rational;

    fn q(n: i64, d: i64) -> Q {
        Rational::new(n, d)
    }

    #[test]
    fn solve_identity() {
        let a = Matrix::<Q>::identity(2);
        let b = Vector::from_i64s(&[3, -1]);
        assert_eq!(a.solve(&b).unwrap().unwrap(), b);
    }

    #[test]
    fn solve_diagonal() {
        let a = Matrix::diagonal(&[q(2, 1), q(1, 2)]);
        let b = Vector::from_i64s(&[1, 1]);
        assert_eq!(a.solve(&b).unwrap().unwrap(), Vector::new(vec![q(1, 2), q(2, 1)]));
    }

    #[test]
    fn solve_inconsistent() {
        // Second row is twice the first, but 3 ≠ 2·1.
        let a = Matrix::<Q>::from_i64s(&[&[1, 1], &[2, 2]]);
        assert!(a.solve(&Vector::from_i64s(&[1, 3])).unwrap().is_none());
        // Consistent right-hand side gives a particular solution.
        let w = a.solve(&Vector::from_i64s(&[1, 2])).unwrap().unwrap();
        assert_eq!(a.mul_vec(&w), Vector::from_i64s(&[1, 2]));
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = Matrix::<Q>::identity(2);
        assert!(matches!(
            a.solve(&Vector::from_i64s(&[1, 2, 3])),
            Err(ArithError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn kernel_cases() {
        let z = &Matrix::<Q>::identity(3) - &Matrix::identity(3);
        assert_eq!(z.kernel_basis().len(), 3);
        assert!(Matrix::<Q>::identity(3).kernel_basis().is_empty());
        let a = Matrix::<Q>::from_i64s(&[&[0, 0], &[0, 1]]);
        assert_eq!(a.kernel_basis(), vec![Vector::from_i64s(&[1, 0])]);
    }

    #[test]
    fn fixed_points() {
        assert!(!Matrix::diagonal(&[q(2, 1), q(1, 2)]).has_fixed_point().unwrap());
        assert!(Matrix::<Q>::identity(2).has_fixed_point().unwrap());
    }

    #[test]
    fn powers() {
        let a = Matrix::<Q>::from_i64s(&[&[1, 1], &[0, 1]]);
        assert!(a.pow(0).unwrap().is_identity());
        assert_eq!(a.pow(3).unwrap(), Matrix::from_i64s(&[&[1, 3], &[0, 1]]));
        assert_eq!(a.pow(-2).unwrap(), Matrix::from_i64s(&[&[1, -2], &[0, 1]]));
        let x = Matrix::<F2>::from_i64s(&[&[1, 1], &[1, 0]]);
        assert!(x.pow(3).unwrap().is_identity());
        assert!(!x.pow(1).unwrap().is_identity());
    }

    #[test]
    fn singular_inverse_fails() {
        let a = Matrix::<Q>::from_i64s(&[&[1, 2], &[2, 4]]);
        assert_eq!(a.inverse(), Err(ArithError::Singular));
        assert!(a.pow(-1).is_err());
        assert!(a.det().unwrap().is_zero());
    }

    #[test]
    fn determinant_and_inverse() {
        let a = Matrix::<Q>::from_i64s(&[&[2, 1, 0], &[0, 1, 3], &[1, 0, 1]]);
        assert_eq!(a.det().unwrap(), Rational::integer(5));
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
    }

    #[test]
    fn non_square_rejected() {
        let a = Matrix::<Q>::zeros(2, 3);
        assert!(matches!(a.det(), Err(ArithError::NotSquare { .. })));
        assert!(a.has_fixed_point().is_err());
    }

    #[test]
    fn image_basis_spans_columns() {
        let a = Matrix::<Q>::from_i64s(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]);
        assert_eq!(a.image_basis().len(), 2);
        assert_eq!(a.rank(), 2);
    }
}
