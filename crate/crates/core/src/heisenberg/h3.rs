//! The three-dimensional Heisenberg group of unitriangular matrices
//! `[[1, a, c], [0, 1, b], [0, 0, 1]]` with the torus `λ·(a, b, c) = (λa, b/λ, c)`.
//!
//! Elements of `A ⋉ N` are stored acting part first, `(λ, n) = λ·n`. An
//! element written normal part first, `m·λ`, is `(λ, λ⁻¹·m)` here.

use std::fmt;

use rand::Rng;

use crate::arith::{Field, GaussianRational, Matrix, Vector};
use crate::group::{Certificate, GroupElement, Relation};
use crate::semidirect::{Automorphism, CentralSeriesPresentation, SemidirectElement};

use super::SolvableError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Heisenberg3<F> {
    pub a: F,
    pub b: F,
    pub c: F,
}

/// The complex Heisenberg group over ℚ(i).
pub type ComplexHeisenbergElement = Heisenberg3<GaussianRational>;

impl<F: Field> Heisenberg3<F> {
    pub fn new(a: F, b: F, c: F) -> Self {
        Heisenberg3 { a, b, c }
    }

    pub fn from_i64s(a: i64, b: i64, c: i64) -> Self {
        Heisenberg3::new(F::from_i64(a), F::from_i64(b), F::from_i64(c))
    }

    pub fn identity() -> Self {
        Heisenberg3::new(F::zero(), F::zero(), F::zero())
    }

    pub fn is_central(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn to_matrix(&self) -> Matrix<F> {
        let (o, z) = (F::one(), F::zero());
        Matrix::from_rows(vec![
            vec![o.clone(), self.a.clone(), self.c.clone()],
            vec![z.clone(), o.clone(), self.b.clone()],
            vec![z.clone(), z, o],
        ])
        .expect("3x3")
    }
}

impl<F: Field> GroupElement for Heisenberg3<F> {
    fn mul(&self, rhs: &Self) -> Self {
        Heisenberg3 {
            a: self.a.clone() + rhs.a.clone(),
            b: self.b.clone() + rhs.b.clone(),
            c: self.c.clone() + rhs.c.clone() + self.a.clone() * rhs.b.clone(),
        }
    }

    fn inverse(&self) -> Self {
        Heisenberg3 {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: self.a.clone() * self.b.clone() - self.c.clone(),
        }
    }

    fn identity_like(&self) -> Self {
        Heisenberg3::identity()
    }
}

impl<F: Field> fmt::Debug for Heisenberg3<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a = {}, b = {}, c = {})", self.a, self.b, self.c)
    }
}

/// A nonzero scalar `λ` of the torus.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Torus<F>(F);

impl<F: Field> Torus<F> {
    pub fn new(lambda: F) -> Result<Self, SolvableError> {
        if lambda.is_zero() {
            return Err(SolvableError::Precondition("torus element must be nonzero".into()));
        }
        Ok(Torus(lambda))
    }

    pub fn from_i64(lambda: i64) -> Result<Self, SolvableError> {
        Torus::new(F::from_i64(lambda))
    }

    pub fn value(&self) -> &F {
        &self.0
    }
}

impl<F: Field> GroupElement for Torus<F> {
    fn mul(&self, rhs: &Self) -> Self {
        Torus(self.0.clone() * rhs.0.clone())
    }

    fn inverse(&self) -> Self {
        Torus(self.0.inv().expect("torus elements are nonzero"))
    }

    fn identity_like(&self) -> Self {
        Torus(F::one())
    }
}

impl<F: Field> fmt::Debug for Torus<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<F: Field> Automorphism<Heisenberg3<F>> for Torus<F> {
    fn act(&self, n: &Heisenberg3<F>) -> Heisenberg3<F> {
        Heisenberg3 {
            a: self.0.clone() * n.a.clone(),
            b: n.b.clone() * self.0.inv().expect("torus elements are nonzero"),
            c: n.c.clone(),
        }
    }
}

pub type TorusHeisenberg<F> = SemidirectElement<Torus<F>, Heisenberg3<F>>;

/// `N ⊃ Z(N) ⊃ {e}`: level 0 is `(a, b)` with action `diag(λ, 1/λ)`,
/// level 1 is `c` with trivial action.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Heisenberg3Presentation<F> {
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> Heisenberg3Presentation<F> {
    pub fn new() -> Self {
        Heisenberg3Presentation {
            _field: std::marker::PhantomData,
        }
    }
}

impl<F: Field> CentralSeriesPresentation for Heisenberg3Presentation<F> {
    type Scalar = F;
    type Elem = Heisenberg3<F>;
    type Acting = Torus<F>;

    fn levels(&self) -> usize {
        2
    }

    fn level_dim(&self, level: usize) -> usize {
        if level == 0 {
            2
        } else {
            1
        }
    }

    fn identity(&self) -> Heisenberg3<F> {
        Heisenberg3::identity()
    }

    fn project(&self, level: usize, n: &Heisenberg3<F>) -> Vector<F> {
        if level == 0 {
            Vector::new(vec![n.a.clone(), n.b.clone()])
        } else {
            Vector::new(vec![n.c.clone()])
        }
    }

    fn section(&self, level: usize, v: &Vector<F>) -> Heisenberg3<F> {
        if level == 0 {
            Heisenberg3::new(v[0].clone(), v[1].clone(), F::zero())
        } else {
            Heisenberg3::new(F::zero(), F::zero(), v[0].clone())
        }
    }

    fn level_action(&self, level: usize, x: &Torus<F>) -> Matrix<F> {
        if level == 0 {
            Matrix::diagonal(&[x.0.clone(), x.0.inv().expect("nonzero")])
        } else {
            Matrix::identity(1)
        }
    }
}

/// The acting part `x ∈ {1, −1}` of the subject, and for `x = −1` the torus
/// parameter `λ` of the conjugator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LambdaCase<F> {
    Identity,
    MinusOne { lambda: F },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HeisenbergVerdict<F: Field> {
    Real(Certificate<TorusHeisenberg<F>>),
    /// The last coordinate of the conjugation equation leaves the
    /// λ-independent residual `2c − ab` (or `2c` for central `n`), checked
    /// nonzero, and re-evaluated at each λ listed.
    NotReal { residual: F, lambdas_checked: Vec<F> },
}

impl<F: Field> HeisenbergVerdict<F> {
    pub fn is_real(&self) -> bool {
        matches!(self, HeisenbergVerdict::Real(_))
    }
}

/// Sample λ values for the residual check.
pub fn lambda_grid<F: Field>() -> Vec<F> {
    [1, -1, 2, -3, 5]
        .iter()
        .map(|&k| F::from_i64(k))
        .chain([F::from_i64(2).inv().expect("char != 2")])
        .collect()
}

/// Forced `(p, q)` for a conjugator with torus part `λ⁻¹`, and the
/// remaining difference in the last coordinate of `g·s = s⁻¹·g`.
fn minus_one_residual<F: Field>(n: &Heisenberg3<F>, lambda: &F) -> Result<(F, F, F), SolvableError> {
    let two_inv = F::from_i64(2)
        .inv()
        .ok_or_else(|| SolvableError::Precondition("characteristic 2".into()))?;
    let lambda_inv = lambda
        .inv()
        .ok_or_else(|| SolvableError::Precondition("lambda must be nonzero".into()))?;
    let (a, b) = (n.a.clone(), n.b.clone());
    let p = (a.clone() - lambda.clone() * a.clone()) * two_inv.clone();
    let q = (b.clone() - b.clone() * lambda_inv) * two_inv;
    // Conjugator (λ⁻¹, (p, q, 0)); the top-right entries of g·s and s⁻¹·g.
    let g = SemidirectElement::new(Torus(lambda.inv().expect("nonzero")), Heisenberg3::new(p.clone(), q.clone(), F::zero()));
    let s = SemidirectElement::new(Torus(-F::one()), n.clone());
    let lhs = g.mul(&s);
    let rhs = s.inverse().mul(&g);
    Ok((p, q, lhs.n.c - rhs.n.c))
}

/// Reality of `(x, n)` in `A ⋉ N` for `x = ±1`.
///
/// - `x = 1`, `a ≠ 0`: witness `m·(−1)` with `m = (0, (ab − 2c)/a, 0)`;
///   `b ≠ 0`: `m = ((2c − ab)/b, 0, 0)`; `n` central and nontrivial: not real.
/// - `x = −1`: the conjugator `(λ⁻¹, (p, q, 0))` with
///   `p = (a − λa)/2`, `q = (b − b/λ)/2` works exactly when `ab = 2c`.
pub fn complex_heisenberg_reality<F: Field>(
    n: &Heisenberg3<F>,
    case: &LambdaCase<F>,
) -> Result<HeisenbergVerdict<F>, SolvableError> {
    if F::characteristic() == 2 {
        return Err(SolvableError::Precondition("characteristic 2".into()));
    }
    let one = F::one();
    let minus = Torus(-one.clone());
    let two = F::from_i64(2);
    let (a, b, c) = (n.a.clone(), n.b.clone(), n.c.clone());
    let ab = a.clone() * b.clone();
    match case {
        LambdaCase::Identity => {
            let s = SemidirectElement::new(Torus(one), n.clone());
            let m = if let Some(a_inv) = a.inv() {
                Heisenberg3::new(F::zero(), (ab - two * c) * a_inv, F::zero())
            } else if let Some(b_inv) = b.inv() {
                Heisenberg3::new((two * c - ab) * b_inv, F::zero(), F::zero())
            } else if c.is_zero() {
                return Ok(HeisenbergVerdict::Real(Certificate::new(
                    s.clone(),
                    s.identity_like(),
                    Relation::Inverse,
                )?));
            } else {
                // Central n is fixed by every conjugation.
                return Ok(HeisenbergVerdict::NotReal {
                    residual: two * c,
                    lambdas_checked: Vec::new(),
                });
            };
            // m·(−1) = (−1, (−1)⁻¹·m)
            let g = SemidirectElement::new(minus.clone(), minus.inverse().act(&m));
            Ok(HeisenbergVerdict::Real(Certificate::new(s, g, Relation::Inverse)?))
        }
        LambdaCase::MinusOne { lambda } => {
            let (p, q, residual) = minus_one_residual(n, lambda)?;
            let expected = two * c - ab;
            if residual != expected {
                return Err(SolvableError::Internal(format!(
                    "residual {residual} differs from 2c - ab = {expected}"
                )));
            }
            let s = SemidirectElement::new(minus, n.clone());
            if residual.is_zero() {
                let g = SemidirectElement::new(
                    Torus::new(lambda.clone())?.inverse(),
                    Heisenberg3::new(p, q, F::zero()),
                );
                return Ok(HeisenbergVerdict::Real(Certificate::new(s, g, Relation::Inverse)?));
            }
            let mut lambdas_checked = vec![lambda.clone()];
            for l in lambda_grid::<F>() {
                let (_, _, r) = minus_one_residual(n, &l)?;
                if r != residual {
                    return Err(SolvableError::Internal(format!("residual depends on lambda at {l}")));
                }
                lambdas_checked.push(l);
            }
            Ok(HeisenbergVerdict::NotReal {
                residual,
                lambdas_checked,
            })
        }
    }
}

/// Random element with Gaussian-rational coordinates of bounded height.
pub fn random_complex_heisenberg<R: Rng + ?Sized>(rng: &mut R, height: i64) -> ComplexHeisenbergElement {
    let mut z = || {
        GaussianRational::new(
            crate::arith::Rational::random(rng, height),
            crate::arith::Rational::random(rng, height),
        )
    };
    Heisenberg3::new(z(), z(), z())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::Rational;
    use crate::semidirect::check_presentation;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type C = GaussianRational;

    fn cplx(re: i64, im: i64) -> C {
        C::new(Rational::integer(re), Rational::integer(im))
    }

    #[test]
    fn matches_matrix_multiplication() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let x = random_complex_heisenberg(&mut rng, 4);
            let y = random_complex_heisenberg(&mut rng, 4);
            assert_eq!(x.mul(&y).to_matrix(), &x.to_matrix() * &y.to_matrix());
            assert_eq!(x.inverse().to_matrix(), x.to_matrix().inverse().unwrap());
        }
    }

    #[test]
    fn torus_acts_by_automorphisms() {
        let l = Torus::new(cplx(2, 1)).unwrap();
        let x = Heisenberg3::new(cplx(1, 1), cplx(0, 3), cplx(-2, 0));
        let y = Heisenberg3::new(cplx(4, 0), cplx(1, -1), cplx(0, 1));
        assert_eq!(l.act(&x.mul(&y)), l.act(&x).mul(&l.act(&y)));
    }

    #[test]
    fn presentation_invariants() {
        let p = Heisenberg3Presentation::<Rational>::new();
        let acting = vec![Torus::from_i64(2).unwrap(), Torus::from_i64(-1).unwrap()];
        let normal = vec![Heisenberg3::from_i64s(1, 2, 3), Heisenberg3::from_i64s(-1, 0, 5)];
        let l0 = vec![Vector::from_i64s(&[1, 0]), Vector::from_i64s(&[2, -3])];
        let l1 = vec![Vector::from_i64s(&[4])];
        check_presentation(&p, &acting, &normal, &[l0, l1]).unwrap();
    }

    #[test]
    fn minus_one_real_example() {
        let n = Heisenberg3::<C>::from_i64s(2, 1, 1);
        let v = complex_heisenberg_reality(&n, &LambdaCase::MinusOne { lambda: C::one() }).unwrap();
        assert!(v.is_real());
    }

    #[test]
    fn minus_one_not_real_example() {
        let n = Heisenberg3::<C>::from_i64s(1, 1, 1);
        match complex_heisenberg_reality(&n, &LambdaCase::MinusOne { lambda: cplx(0, 1) }).unwrap() {
            HeisenbergVerdict::NotReal { residual, lambdas_checked } => {
                assert_eq!(residual, C::one());
                assert!(lambdas_checked.len() > 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn identity_case_witnesses() {
        for n in [
            Heisenberg3::<C>::from_i64s(2, 0, 7),
            Heisenberg3::<C>::from_i64s(0, 3, 7),
            Heisenberg3::new(cplx(1, 1), cplx(2, -1), cplx(0, 5)),
        ] {
            assert!(complex_heisenberg_reality(&n, &LambdaCase::Identity).unwrap().is_real());
        }
        let central = Heisenberg3::<C>::from_i64s(0, 0, 3);
        assert!(!complex_heisenberg_reality(&central, &LambdaCase::Identity).unwrap().is_real());
    }

    #[test]
    fn identity_case_uses_closed_form_m() {
        // m = (0, (ab − 2c)/a, 0) written normal part first.
        let n = Heisenberg3::<Rational>::from_i64s(2, 1, 5);
        let cert = match complex_heisenberg_reality(&n, &LambdaCase::Identity).unwrap() {
            HeisenbergVerdict::Real(c) => c,
            other => panic!("{other:?}"),
        };
        let m = Heisenberg3::new(Rational::zero(), Rational::new(2 - 10, 2), Rational::zero());
        let minus = Torus::from_i64(-1).unwrap();
        let m_then_minus = SemidirectElement::from_normal(m, &minus).mul(&SemidirectElement::from_acting(minus, &n));
        assert_eq!(cert.witness(), &m_then_minus);
    }
}
