use crate::arith::{ArithError, Field, Matrix, Vector};
use crate::group::GroupElement;

/// `(A, b)`, realized as the block matrix `[[A, b], [0, 1]]`:
/// `(A, b)·(C, d) = (A·C, A·d + b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineElement<F> {
    linear: Matrix<F>,
    translation: Vector<F>,
}

impl<F: Field> AffineElement<F> {
    pub fn new(linear: Matrix<F>, translation: Vector<F>) -> Result<Self, ArithError> {
        if !linear.is_square() {
            return Err(ArithError::NotSquare {
                rows: linear.rows(),
                cols: linear.cols(),
            });
        }
        if translation.dim() != linear.rows() {
            return Err(ArithError::DimensionMismatch {
                expected: linear.rows(),
                found: translation.dim(),
            });
        }
        if !linear.is_invertible() {
            return Err(ArithError::Singular);
        }
        Ok(AffineElement {
            linear,
            translation,
        })
    }

    /// `(A, 0)`.
    pub fn linear_part(linear: Matrix<F>) -> Result<Self, ArithError> {
        let n = linear.rows();
        Self::new(linear, Vector::zeros(n))
    }

    /// `(I, b)`.
    pub fn translation_part(translation: Vector<F>) -> Self {
        AffineElement {
            linear: Matrix::identity(translation.dim()),
            translation,
        }
    }

    pub fn linear(&self) -> &Matrix<F> {
        &self.linear
    }

    pub fn translation(&self) -> &Vector<F> {
        &self.translation
    }

    pub fn dim(&self) -> usize {
        self.translation.dim()
    }

    pub fn apply(&self, p: &Vector<F>) -> Vector<F> {
        &self.linear.mul_vec(p) + &self.translation
    }

    pub fn to_block_matrix(&self) -> Matrix<F> {
        let n = self.dim();
        Matrix::from_fn(n + 1, n + 1, |i, j| match (i < n, j < n) {
            (true, true) => self.linear.get(i, j).clone(),
            (true, false) => self.translation[i].clone(),
            (false, true) => F::zero(),
            (false, false) => F::one(),
        })
    }

    pub fn from_block_matrix(m: &Matrix<F>) -> Result<Self, ArithError> {
        if !m.is_square() || m.rows() == 0 {
            return Err(ArithError::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows() - 1;
        let bottom_ok = (0..n).all(|j| m.get(n, j).is_zero()) && m.get(n, n).is_one();
        if !bottom_ok {
            return Err(ArithError::Parse("bottom row must be (0, ..., 0, 1)".into()));
        }
        Self::new(m.block(0, n, 0, n), m.column(n).slice(0, n))
    }

    /// `(A, b)^l = (A^l, (A^{l-1} + … + A + I)·b)` for `l ≥ 0`.
    pub fn telescoped_translation(&self, l: u64) -> Vector<F> {
        let mut acc = Vector::zeros(self.dim());
        for _ in 0..l {
            acc = &self.linear.mul_vec(&acc) + &self.translation;
        }
        acc
    }
}

impl<F: Field> GroupElement for AffineElement<F> {
    fn mul(&self, rhs: &Self) -> Self {
        AffineElement {
            linear: &self.linear * &rhs.linear,
            translation: &self.linear.mul_vec(&rhs.translation) + &self.translation,
        }
    }

    fn inverse(&self) -> Self {
        let inv = Matrix::inverse(&self.linear).expect("affine linear part is invertible");
        let translation = -&inv.mul_vec(&self.translation);
        AffineElement {
            linear: inv,
            translation,
        }
    }

    fn identity_like(&self) -> Self {
        AffineElement::translation_part(Vector::zeros(self.dim()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;

    #[test]
    fn product_matches_block_matrices() {
        let a = AffineElement::new(
            Matrix::<Rational>::from_i64s(&[&[1, 2], &[0, 1]]),
            Vector::from_i64s(&[3, -1]),
        )
        .unwrap();
        let b = AffineElement::new(
            Matrix::from_i64s(&[&[0, 1], &[-1, 0]]),
            Vector::from_i64s(&[5, 7]),
        )
        .unwrap();
        let block = &a.to_block_matrix() * &b.to_block_matrix();
        assert_eq!(a.mul(&b).to_block_matrix(), block);
        assert_eq!(AffineElement::from_block_matrix(&block).unwrap(), a.mul(&b));
        assert!(a.mul(&a.inverse()).is_identity());
    }

    #[test]
    fn telescoped_translation_matches_power() {
        let a = AffineElement::new(
            Matrix::<Rational>::from_i64s(&[&[0, 1], &[1, 1]]),
            Vector::from_i64s(&[1, 2]),
        )
        .unwrap();
        for l in 0..6 {
            assert_eq!(a.pow(l as i64).translation(), &a.telescoped_translation(l));
        }
    }

    #[test]
    fn singular_linear_part_rejected() {
        let err = AffineElement::new(Matrix::<Rational>::zeros(2, 2), Vector::zeros(2));
        assert_eq!(err.unwrap_err(), ArithError::Singular);
    }
}
