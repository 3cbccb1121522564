use crate::arith::{Field, Matrix, Vector};
use crate::group::GroupElement;

use super::AffineElement;

/// An acting-group element viewed as an automorphism `σ(h)` of `N`, the
/// conjugation `n ↦ h n h⁻¹` inside `H ⋉ N`.
pub trait Automorphism<N> {
    fn act(&self, n: &N) -> N;
}

impl<F: Field> Automorphism<Vector<F>> for Matrix<F> {
    fn act(&self, n: &Vector<F>) -> Vector<F> {
        self.mul_vec(n)
    }
}

/// `h·n ∈ H ⋉ N`, multiplied as
/// `(h₁, n₁)·(h₂, n₂) = (h₁h₂, σ(h₂⁻¹)(n₁)·n₂)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SemidirectElement<H, N> {
    pub h: H,
    pub n: N,
}

impl<H, N> SemidirectElement<H, N>
where
    H: GroupElement + Automorphism<N>,
    N: GroupElement,
{
    pub fn new(h: H, n: N) -> Self {
        SemidirectElement { h, n }
    }

    /// `(h, e_N)`.
    pub fn from_acting(h: H, n_like: &N) -> Self {
        SemidirectElement {
            h,
            n: n_like.identity_like(),
        }
    }

    /// `(e_H, n)`.
    pub fn from_normal(n: N, h_like: &H) -> Self {
        SemidirectElement {
            h: h_like.identity_like(),
            n,
        }
    }
}

impl<H, N> GroupElement for SemidirectElement<H, N>
where
    H: GroupElement + Automorphism<N>,
    N: GroupElement,
{
    fn mul(&self, rhs: &Self) -> Self {
        SemidirectElement {
            h: self.h.mul(&rhs.h),
            n: rhs.h.inverse().act(&self.n).mul(&rhs.n),
        }
    }

    fn inverse(&self) -> Self {
        SemidirectElement {
            h: self.h.inverse(),
            n: self.h.act(&self.n.inverse()),
        }
    }

    fn identity_like(&self) -> Self {
        SemidirectElement {
            h: self.h.identity_like(),
            n: self.n.identity_like(),
        }
    }
}

/// Vector-group case `H ⋉ V` with `H` acting by matrices.
pub type VectorSemidirect<F> = SemidirectElement<Matrix<F>, Vector<F>>;

impl<F: Field> SemidirectElement<Matrix<F>, Vector<F>> {
    /// The product `h·v` written as a block matrix has translation `h·v`.
    pub fn to_affine(&self) -> AffineElement<F> {
        AffineElement::new(self.h.clone(), self.h.mul_vec(&self.n))
            .expect("acting matrix is invertible")
    }

    pub fn from_affine(a: &AffineElement<F>) -> Self {
        let inv = Matrix::inverse(a.linear()).expect("affine linear part is invertible");
        SemidirectElement {
            h: a.linear().clone(),
            n: inv.mul_vec(a.translation()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Rational, F3};

    #[test]
    fn identity_and_inverse() {
        let g = SemidirectElement::new(
            Matrix::<F3>::from_i64s(&[&[1, 1], &[0, 1]]),
            Vector::from_i64s(&[2, 1]),
        );
        assert!(g.mul(&g.inverse()).is_identity());
        assert!(g.inverse().mul(&g).is_identity());
        assert_eq!(g.mul(&g.identity_like()), g);
    }

    #[test]
    fn affine_round_trip() {
        let g = SemidirectElement::new(
            Matrix::<Rational>::from_i64s(&[&[2, 1], &[1, 1]]),
            Vector::from_i64s(&[4, -3]),
        );
        assert_eq!(SemidirectElement::from_affine(&g.to_affine()), g);
    }
}
