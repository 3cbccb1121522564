//! Rational points of the circle acting on ℚ² by the double-angle rotation:
//! `t` acts as `R(2t)` and is recorded faithfully by `R(t)`.

use std::fmt;

use crate::arith::{Field, Matrix, Rational, Vector};
use crate::group::GroupElement;
use crate::semidirect::{Automorphism, SemidirectElement};

use super::SolvableError;

/// `(cos t, sin t)` with `cos² + sin² = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CirclePoint {
    cos: Rational,
    sin: Rational,
}

impl CirclePoint {
    pub fn new(cos: Rational, sin: Rational) -> Result<Self, SolvableError> {
        if !(cos.clone() * cos.clone() + sin.clone() * sin.clone()).is_one() {
            return Err(SolvableError::Precondition(format!("({cos}, {sin}) is not on the unit circle")));
        }
        Ok(CirclePoint { cos, sin })
    }

    /// `((1 − u²)/(1 + u²), 2u/(1 + u²))`.
    pub fn from_slope(u: &Rational) -> Self {
        let u2 = u.clone() * u.clone();
        let d = (Rational::one() + u2.clone()).inv().expect("1 + u² > 0");
        CirclePoint {
            cos: (Rational::one() - u2) * d.clone(),
            sin: Rational::integer(2) * u.clone() * d,
        }
    }

    pub fn angle_zero() -> Self {
        CirclePoint {
            cos: Rational::one(),
            sin: Rational::zero(),
        }
    }

    /// `t = π`.
    pub fn half_turn() -> Self {
        CirclePoint {
            cos: -Rational::one(),
            sin: Rational::zero(),
        }
    }

    /// `t = π/2`.
    pub fn quarter_turn() -> Self {
        CirclePoint {
            cos: Rational::zero(),
            sin: Rational::one(),
        }
    }

    pub fn cos(&self) -> &Rational {
        &self.cos
    }

    pub fn sin(&self) -> &Rational {
        &self.sin
    }

    /// `R(t)`.
    pub fn rotation(&self) -> Matrix<Rational> {
        Matrix::from_rows(vec![
            vec![self.cos.clone(), -self.sin.clone()],
            vec![self.sin.clone(), self.cos.clone()],
        ])
        .expect("2x2")
    }

    /// `R(2t)`, the action on ℚ².
    pub fn action(&self) -> Matrix<Rational> {
        let r = self.rotation();
        &r * &r
    }
}

impl GroupElement for CirclePoint {
    fn mul(&self, rhs: &Self) -> Self {
        CirclePoint {
            cos: self.cos.clone() * rhs.cos.clone() - self.sin.clone() * rhs.sin.clone(),
            sin: self.sin.clone() * rhs.cos.clone() + self.cos.clone() * rhs.sin.clone(),
        }
    }

    fn inverse(&self) -> Self {
        CirclePoint {
            cos: self.cos.clone(),
            sin: -self.sin.clone(),
        }
    }

    fn identity_like(&self) -> Self {
        CirclePoint::angle_zero()
    }
}

impl fmt::Debug for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(cos {}, sin {})", self.cos, self.sin)
    }
}

impl Automorphism<Vector<Rational>> for CirclePoint {
    fn act(&self, n: &Vector<Rational>) -> Vector<Rational> {
        self.action().mul_vec(n)
    }
}

pub type CircleAffine = SemidirectElement<CirclePoint, Vector<Rational>>;

/// The 5×5 matrix `[[R(2t), b, 0], [0, 1, 0], [0, 0, R(t)]]` of
/// `(t, n)`, where `b = R(2t)·n` is the block translation.
pub fn five_by_five(g: &CircleAffine) -> Matrix<Rational> {
    let r2 = g.h.action();
    let r1 = g.h.rotation();
    let b = r2.mul_vec(&g.n);
    Matrix::from_fn(5, 5, |i, j| match (i, j) {
        (0..=1, 0..=1) => r2.get(i, j).clone(),
        (0..=1, 2) => b[i].clone(),
        (2, 2) => Rational::one(),
        (3..=4, 3..=4) => r1.get(i - 3, j - 3).clone(),
        _ => Rational::zero(),
    })
}
