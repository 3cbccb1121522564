//! Constructive conjugators in `H ⋉ V` for a linear part with no nonzero
//! fixed vector.
//!
//! Everything here is in the block convention `(x, b) ≙ [[x, b], [0, 1]]`.
//! Written as a product `x·v` (linear part first) the same element has
//! `b = x·v`; `reduce_translation` solves `(x − I)·w = b`, which is the
//! equation `v = (x⁻¹ − I)·w'` of the product form after that change of
//! variable with `w' = −w`.

use crate::arith::{Field, Matrix, Vector};
use crate::group::{element_order, Certificate, GroupElement, OrderResult, Relation, DEFAULT_ORDER_BOUND};

use super::{AffineElement, SemidirectError};

fn fixed_point_check<F: Field>(x: &Matrix<F>, level: usize) -> Result<(), SemidirectError> {
    if !x.is_square() {
        return Err(SemidirectError::Arith(crate::arith::ArithError::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        }));
    }
    let kernel = (x - &Matrix::identity(x.rows())).kernel_basis();
    if kernel.is_empty() {
        Ok(())
    } else {
        Err(SemidirectError::FixedPoint {
            level,
            kernel: kernel.iter().map(|v| v.to_string()).collect(),
        })
    }
}

/// The unique `w` with `(I, w)·(x, b)·(I, w)⁻¹ = (x, 0)`.
pub fn reduce_translation<F: Field>(x: &Matrix<F>, b: &Vector<F>) -> Result<Vector<F>, SemidirectError> {
    fixed_point_check(x, 0)?;
    let shifted = x - &Matrix::identity(x.rows());
    shifted
        .solve(b)?
        .ok_or_else(|| SemidirectError::Internal("x − I invertible but system inconsistent".into()))
}

fn conjugator<F: Field>(x: &Matrix<F>, b: &Vector<F>, h: &Matrix<F>) -> Result<AffineElement<F>, SemidirectError> {
    let w = reduce_translation(x, b)?;
    let c = AffineElement::translation_part(w);
    let lin = AffineElement::linear_part(h.clone())?;
    Ok(c.inverse().mul(&lin).mul(&c))
}

/// Certificate that `(x, b)` is real, from `h` with `h·x·h⁻¹ = x⁻¹`:
/// the witness is `c⁻¹·(h, 0)·c` where `c = (I, reduce_translation(x, b))`.
pub fn make_real_witness<F: Field>(
    x: &Matrix<F>,
    b: &Vector<F>,
    h: &Matrix<F>,
) -> Result<Certificate<AffineElement<F>>, SemidirectError> {
    let x_inv = Matrix::inverse(x)?;
    if !h.is_invertible() || (h * x) != (&x_inv * h) {
        return Err(SemidirectError::NotAWitness(Relation::Inverse));
    }
    let g = conjugator(x, b, h)?;
    let subject = AffineElement::new(x.clone(), b.clone())?;
    Ok(Certificate::new(subject, g, Relation::Inverse)?)
}

/// Certificate that `(x, b)` is conjugate to `(x, b)^k`, from `h` with
/// `h·x·h⁻¹ = x^k`. When `x` has finite order `m` (up to the default
/// bound) this also checks `(x, b)^m = e`.
pub fn make_power_witness<F: Field>(
    x: &Matrix<F>,
    b: &Vector<F>,
    h: &Matrix<F>,
    k: i64,
) -> Result<Certificate<AffineElement<F>>, SemidirectError> {
    let xk = x.pow(k)?;
    if !h.is_invertible() || (h * x) != (&xk * h) {
        return Err(SemidirectError::NotAWitness(Relation::Power(k)));
    }
    let g = conjugator(x, b, h)?;
    let subject = AffineElement::new(x.clone(), b.clone())?;
    if let OrderResult::Finite(m) = element_order(x, DEFAULT_ORDER_BOUND) {
        if !subject.pow(m as i64).is_identity() {
            return Err(SemidirectError::Internal(format!(
                "order of (x, b) does not divide Ord(x) = {m}"
            )));
        }
    }
    Ok(Certificate::new(subject, g, Relation::Power(k))?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{Rational, F2};

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn zero_translation_gives_zero() {
        let x = Matrix::diagonal(&[q(2, 1), q(1, 2)]);
        assert!(reduce_translation(&x, &Vector::zeros(2)).unwrap().is_zero());
    }

    #[test]
    fn diagonal_example() {
        let x = Matrix::diagonal(&[q(2, 1), q(1, 2)]);
        let b = Vector::from_i64s(&[1, 1]);
        let w = reduce_translation(&x, &b).unwrap();
        assert_eq!(w, Vector::from_i64s(&[1, -2]));
        let c = AffineElement::translation_part(w);
        let s = AffineElement::new(x.clone(), b).unwrap();
        assert_eq!(s.conjugate_by(&c), AffineElement::linear_part(x).unwrap());
    }

    #[test]
    fn fixed_point_reports_kernel() {
        let x = Matrix::diagonal(&[q(1, 1), q(3, 1)]);
        match reduce_translation(&x, &Vector::from_i64s(&[1, 1])) {
            Err(SemidirectError::FixedPoint { level: 0, kernel }) => {
                assert_eq!(kernel, vec!["(1, 0)".to_string()]);
            }
            other => panic!("expected fixed point error, got {other:?}"),
        }
    }

    #[test]
    fn real_witness_zero_translation_is_h() {
        let x = Matrix::diagonal(&[q(2, 1), q(1, 2)]);
        let h = Matrix::from_i64s(&[&[0, 1], &[-1, 0]]);
        let cert = make_real_witness(&x, &Vector::zeros(2), &h).unwrap();
        assert_eq!(cert.witness(), &AffineElement::linear_part(h).unwrap());
    }

    #[test]
    fn real_witness_diagonal() {
        let x = Matrix::diagonal(&[q(2, 1), q(1, 2)]);
        let h = Matrix::from_i64s(&[&[0, 1], &[-1, 0]]);
        let cert = make_real_witness(&x, &Vector::from_i64s(&[1, 1]), &h).unwrap();
        assert!(cert.reverify());
        assert_eq!(cert.witness().linear(), &h);
    }

    #[test]
    fn bad_witness_rejected() {
        let x = Matrix::diagonal(&[q(2, 1), q(1, 2)]);
        let not_h = Matrix::identity(2);
        assert!(matches!(
            make_real_witness(&x, &Vector::from_i64s(&[1, 1]), &not_h),
            Err(SemidirectError::NotAWitness(Relation::Inverse))
        ));
    }

    #[test]
    fn power_witness_k1_is_identity() {
        let x = Matrix::diagonal(&[q(2, 1), q(1, 2)]);
        let cert = make_power_witness(&x, &Vector::from_i64s(&[4, 5]), &Matrix::identity(2), 1).unwrap();
        assert!(cert.witness().is_identity());
    }

    #[test]
    fn minus_identity_order_two() {
        let x = Matrix::<Rational>::identity(2).scale(&q(-1, 1));
        let cert = make_power_witness(&x, &Vector::from_i64s(&[1, 2]), &Matrix::identity(2), 1).unwrap();
        assert!(cert.witness().is_identity());
        assert_eq!(cert.subject().pow(2), cert.subject().identity_like());
    }

    #[test]
    fn example_over_f2_matches_swap_conjugator() {
        let x = Matrix::<F2>::from_i64s(&[&[1, 1], &[1, 0]]);
        let h = Matrix::<F2>::from_i64s(&[&[0, 1], &[1, 0]]);
        for (v1, v2) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let b = Vector::from_i64s(&[v1, v2]);
            let cert = make_power_witness(&x, &b, &h, 2).unwrap();
            let swap = AffineElement::new(h.clone(), Vector::from_i64s(&[v2, v2])).unwrap();
            assert_eq!(cert.witness(), &swap);
        }
    }
}
