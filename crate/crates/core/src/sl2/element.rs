use std::fmt;

use rand::Rng;

use crate::arith::{Field, Matrix, Rational, Vector};
use crate::group::GroupElement;
use crate::semidirect::AffineElement;

use super::{map, Sl2Error};

/// `[[a, b], [c, d]]` with `ad − bc = 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SL2Element {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
}

impl SL2Element {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational) -> Result<Self, Sl2Error> {
        let det = a.clone() * d.clone() - b.clone() * c.clone();
        if !det.is_one() {
            return Err(Sl2Error::NotSpecialLinear(det.to_string()));
        }
        Ok(SL2Element { a, b, c, d })
    }

    pub fn from_i64s(a: i64, b: i64, c: i64, d: i64) -> Result<Self, Sl2Error> {
        SL2Element::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_matrix(m: &Matrix<Rational>) -> Result<Self, Sl2Error> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Sl2Error::NotSpecialLinear(format!("{}x{} matrix", m.rows(), m.cols())));
        }
        SL2Element::new(m.get(0, 0).clone(), m.get(0, 1).clone(), m.get(1, 0).clone(), m.get(1, 1).clone())
    }

    pub fn identity() -> Self {
        SL2Element {
            a: Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    pub fn minus_identity() -> Self {
        SL2Element {
            a: -Rational::one(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: -Rational::one(),
        }
    }

    /// `diag(r, 1/r)`.
    pub fn diagonal(r: &Rational) -> Result<Self, Sl2Error> {
        let inv = r.inv().ok_or(Sl2Error::ZeroScalar)?;
        Ok(SL2Element {
            a: r.clone(),
            b: Rational::zero(),
            c: Rational::zero(),
            d: inv,
        })
    }

    /// `[[0, t], [−1/t, 0]]`.
    pub fn antidiagonal(t: &Rational) -> Result<Self, Sl2Error> {
        let inv = t.inv().ok_or(Sl2Error::ZeroScalar)?;
        Ok(SL2Element {
            a: Rational::zero(),
            b: t.clone(),
            c: -inv,
            d: Rational::zero(),
        })
    }

    /// `[[1, s], [0, 1]]`.
    pub fn upper_unipotent(s: &Rational) -> Self {
        SL2Element {
            a: Rational::one(),
            b: s.clone(),
            c: Rational::zero(),
            d: Rational::one(),
        }
    }

    /// `[[1, 0], [s, 1]]`.
    pub fn lower_unipotent(s: &Rational) -> Self {
        SL2Element {
            a: Rational::one(),
            b: Rational::zero(),
            c: s.clone(),
            d: Rational::one(),
        }
    }

    /// Random element with entries of bounded height.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, height: i64) -> Self {
        let a = Rational::random_nonzero(rng, height);
        let b = Rational::random(rng, height);
        let c = Rational::random(rng, height);
        let d = (Rational::one() + b.clone() * c.clone()) * a.inv().expect("nonzero");
        SL2Element { a, b, c, d }
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn c(&self) -> &Rational {
        &self.c
    }

    pub fn d(&self) -> &Rational {
        &self.d
    }

    pub fn is_diagonal(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    pub fn to_matrix(&self) -> Matrix<Rational> {
        Matrix::from_rows(vec![
            vec![self.a.clone(), self.b.clone()],
            vec![self.c.clone(), self.d.clone()],
        ])
        .expect("2x2")
    }
}

impl GroupElement for SL2Element {
    fn mul(&self, rhs: &Self) -> Self {
        SL2Element {
            a: self.a.clone() * rhs.a.clone() + self.b.clone() * rhs.c.clone(),
            b: self.a.clone() * rhs.b.clone() + self.b.clone() * rhs.d.clone(),
            c: self.c.clone() * rhs.a.clone() + self.d.clone() * rhs.c.clone(),
            d: self.c.clone() * rhs.b.clone() + self.d.clone() * rhs.d.clone(),
        }
    }

    fn inverse(&self) -> Self {
        SL2Element {
            a: self.d.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: self.a.clone(),
        }
    }

    fn identity_like(&self) -> Self {
        SL2Element::identity()
    }
}

impl fmt::Debug for SL2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[[{}, {}], [{}, {}]]", self.a, self.b, self.c, self.d)
    }
}

impl fmt::Display for SL2Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Binary form `Σ aᵢ x^{n−i} yⁱ` of degree `n`, stored as `(a₀, …, aₙ)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PolyVector {
    coeffs: Vector<Rational>,
}

impl PolyVector {
    pub fn new(coeffs: Vector<Rational>) -> Result<Self, Sl2Error> {
        if coeffs.dim() == 0 {
            return Err(Sl2Error::EmptyForm);
        }
        Ok(PolyVector { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self, Sl2Error> {
        PolyVector::new(Vector::from_i64s(coeffs))
    }

    pub fn zeros(degree: usize) -> Self {
        PolyVector {
            coeffs: Vector::zeros(degree + 1),
        }
    }

    /// The monomial `x^{n−i} yⁱ`.
    pub fn monomial(degree: usize, i: usize) -> Self {
        PolyVector {
            coeffs: Vector::basis(degree + 1, i),
        }
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, degree: usize, height: i64) -> Self {
        PolyVector {
            coeffs: Vector::new((0..=degree).map(|_| Rational::random(rng, height)).collect()),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.dim() - 1
    }

    pub fn coeffs(&self) -> &Vector<Rational> {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    /// Value at `(x, y)`.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let n = self.degree() as i64;
        let mut acc = Rational::zero();
        for (i, a) in self.coeffs.entries().iter().enumerate() {
            let i = i as i64;
            let xp = x.pow(n - i).unwrap_or_else(Rational::zero);
            let yp = y.pow(i).unwrap_or_else(Rational::zero);
            acc = acc + a.clone() * xp * yp;
        }
        acc
    }
}

impl fmt::Debug for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs)
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coeffs)
    }
}

/// Element `(g, v) ≙ [[map(g), v], [0, 1]]` of `SL(2) ⋉ Vₙ`, with
/// `(g₁, v₁)(g₂, v₂) = (g₁g₂, map(g₁)·v₂ + v₁)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Sl2VElement {
    g: SL2Element,
    v: PolyVector,
}

impl Sl2VElement {
    pub fn new(g: SL2Element, v: PolyVector) -> Self {
        Sl2VElement { g, v }
    }

    pub fn linear(&self) -> &SL2Element {
        &self.g
    }

    pub fn translation(&self) -> &PolyVector {
        &self.v
    }

    pub fn degree(&self) -> usize {
        self.v.degree()
    }

    /// The same element as an affine map on `ℚ^{n+1}`.
    pub fn to_affine(&self) -> AffineElement<Rational> {
        AffineElement::new(map(&self.g, self.degree()), self.v.coeffs.clone()).expect("map is invertible")
    }
}

impl GroupElement for Sl2VElement {
    fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.degree(), rhs.degree(), "degree mismatch");
        let moved = map(&self.g, self.degree()).mul_vec(&rhs.v.coeffs);
        Sl2VElement {
            g: self.g.mul(&rhs.g),
            v: PolyVector {
                coeffs: &moved + &self.v.coeffs,
            },
        }
    }

    fn inverse(&self) -> Self {
        let g_inv = self.g.inverse();
        let v = -&map(&g_inv, self.degree()).mul_vec(&self.v.coeffs);
        Sl2VElement {
            g: g_inv,
            v: PolyVector { coeffs: v },
        }
    }

    fn identity_like(&self) -> Self {
        Sl2VElement {
            g: SL2Element::identity(),
            v: PolyVector::zeros(self.degree()),
        }
    }
}

impl fmt::Debug for Sl2VElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?}, {:?})", self.g, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn determinant_enforced() {
        assert!(SL2Element::from_i64s(1, 1, 0, 1).is_ok());
        assert!(matches!(
            SL2Element::from_i64s(2, 0, 0, 1),
            Err(Sl2Error::NotSpecialLinear(_))
        ));
    }

    #[test]
    fn random_elements_have_unit_determinant() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = SL2Element::random(&mut rng, 6);
            assert!(SL2Element::new(g.a().clone(), g.b().clone(), g.c().clone(), g.d().clone()).is_ok());
            assert!(g.mul(&g.inverse()).is_identity());
        }
    }

    #[test]
    fn antidiagonal_inverts_diagonal() {
        let x = SL2Element::diagonal(&Rational::new(3, 2)).unwrap();
        let y = SL2Element::antidiagonal(&Rational::new(-5, 7)).unwrap();
        assert_eq!(x.conjugate_by(&y), x.inverse());
    }

    #[test]
    fn semidirect_group_laws() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for n in 0..5 {
            let s = Sl2VElement::new(SL2Element::random(&mut rng, 4), PolyVector::random(&mut rng, n, 5));
            let t = Sl2VElement::new(SL2Element::random(&mut rng, 4), PolyVector::random(&mut rng, n, 5));
            let u = Sl2VElement::new(SL2Element::random(&mut rng, 4), PolyVector::random(&mut rng, n, 5));
            assert_eq!(s.mul(&t).mul(&u), s.mul(&t.mul(&u)));
            assert!(s.mul(&s.inverse()).is_identity());
            assert_eq!(s.mul(&t).to_affine(), s.to_affine().mul(&t.to_affine()));
        }
    }

    #[test]
    fn eval_matches_coefficients() {
        // x² + 2xy − y² at (2, 3)
        let p = PolyVector::from_i64s(&[1, 2, -1]).unwrap();
        assert_eq!(p.eval(&Rational::integer(2), &Rational::integer(3)), Rational::integer(7));
    }
}
