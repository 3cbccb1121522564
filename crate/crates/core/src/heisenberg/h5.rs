use std::fmt;

use rand::Rng;

use crate::arith::{Field, Matrix, Rational, Vector};
use crate::group::{Certificate, GroupElement};
use crate::semidirect::{real_witness_via_lift, Automorphism, CentralSeriesPresentation, LiftedElement};

use super::SolvableError;

/// `J = [[0, I_m], [−I_m, 0]]`.
pub fn symplectic_form(dim: usize) -> Matrix<Rational> {
    assert!(dim.is_multiple_of(2), "symplectic form needs even dimension");
    let m = dim / 2;
    Matrix::from_fn(dim, dim, |i, j| {
        if i < m && j == i + m {
            Rational::one()
        } else if i >= m && j + m == i {
            -Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// `ω(v, v') = vᵀ J v'`.
pub fn omega(v: &Vector<Rational>, w: &Vector<Rational>) -> Rational {
    v.dot(&symplectic_form(v.dim()).mul_vec(w))
}

/// `(v, t)` in the Heisenberg group on `ℚ^{2m} × ℚ`, with
/// `(v, t)·(v', t') = (v + v', t + t' + ½ω(v, v'))`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HeisenbergElement {
    pub v: Vector<Rational>,
    pub t: Rational,
}

impl HeisenbergElement {
    pub fn new(v: Vector<Rational>, t: Rational) -> Self {
        assert!(v.dim().is_multiple_of(2), "Heisenberg vector part needs even dimension");
        HeisenbergElement { v, t }
    }

    pub fn identity(dim: usize) -> Self {
        HeisenbergElement::new(Vector::zeros(dim), Rational::zero())
    }

    pub fn from_i64s(v: &[i64], t: i64) -> Self {
        HeisenbergElement::new(Vector::from_i64s(v), Rational::integer(t))
    }

    pub fn central(dim: usize, t: Rational) -> Self {
        HeisenbergElement::new(Vector::zeros(dim), t)
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, dim: usize, height: i64) -> Self {
        let v = Vector::new((0..dim).map(|_| Rational::random(rng, height)).collect());
        HeisenbergElement::new(v, Rational::random(rng, height))
    }

    pub fn dim(&self) -> usize {
        self.v.dim()
    }
}

impl GroupElement for HeisenbergElement {
    fn mul(&self, rhs: &Self) -> Self {
        let half = Rational::new(1, 2);
        HeisenbergElement {
            v: &self.v + &rhs.v,
            t: self.t.clone() + rhs.t.clone() + half * omega(&self.v, &rhs.v),
        }
    }

    fn inverse(&self) -> Self {
        HeisenbergElement {
            v: -&self.v,
            t: -self.t.clone(),
        }
    }

    fn identity_like(&self) -> Self {
        HeisenbergElement::identity(self.dim())
    }
}

impl fmt::Debug for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.v, self.t)
    }
}

/// `g` with `gᵀ J g = μ J`, `μ ≠ 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GSpElement {
    g: Matrix<Rational>,
    mu: Rational,
}

impl GSpElement {
    pub fn new(g: Matrix<Rational>) -> Result<Self, SolvableError> {
        if !g.is_square() || !g.rows().is_multiple_of(2) || g.rows() == 0 {
            return Err(SolvableError::NotSimilitude("matrix must be square of even size".into()));
        }
        let m = g.rows() / 2;
        let j = symplectic_form(g.rows());
        let form = &(&g.transpose() * &j) * &g;
        let mu = form.get(0, m).clone();
        if mu.is_zero() || form != j.scale(&mu) {
            return Err(SolvableError::NotSimilitude(format!("gᵀJg = {form}")));
        }
        Ok(GSpElement { g, mu })
    }

    pub fn matrix(&self) -> &Matrix<Rational> {
        &self.g
    }

    /// The similitude factor.
    pub fn mu(&self) -> &Rational {
        &self.mu
    }

    pub fn dim(&self) -> usize {
        self.g.rows()
    }
}

impl GroupElement for GSpElement {
    fn mul(&self, rhs: &Self) -> Self {
        GSpElement {
            g: &self.g * &rhs.g,
            mu: self.mu.clone() * rhs.mu.clone(),
        }
    }

    fn inverse(&self) -> Self {
        GSpElement {
            g: self.g.inverse().expect("similitudes are invertible"),
            mu: self.mu.inv().expect("nonzero similitude factor"),
        }
    }

    fn identity_like(&self) -> Self {
        GSpElement {
            g: Matrix::identity(self.dim()),
            mu: Rational::one(),
        }
    }
}

impl fmt::Debug for GSpElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mu = {})", self.g, self.mu)
    }
}

/// `φ_g(v, t) = (g·v, μ(g)·t)`.
pub fn gsp_act(g: &GSpElement, h: &HeisenbergElement) -> HeisenbergElement {
    HeisenbergElement {
        v: g.g.mul_vec(&h.v),
        t: g.mu.clone() * h.t.clone(),
    }
}

impl Automorphism<HeisenbergElement> for GSpElement {
    fn act(&self, n: &HeisenbergElement) -> HeisenbergElement {
        gsp_act(self, n)
    }
}

/// `H ⊃ Z(H) ⊃ {e}`: level 0 is `v ∈ ℚ^{2m}` with action `g`, level 1 is
/// `t ∈ ℚ` with action `[μ(g)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HeisenbergPresentation {
    dim: usize,
}

impl HeisenbergPresentation {
    pub fn new(dim: usize) -> Self {
        assert!(dim.is_multiple_of(2) && dim > 0, "Heisenberg vector part needs positive even dimension");
        HeisenbergPresentation { dim }
    }
}

/// The five-dimensional Heisenberg group.
pub fn heisenberg_presentation() -> HeisenbergPresentation {
    HeisenbergPresentation::new(4)
}

impl CentralSeriesPresentation for HeisenbergPresentation {
    type Scalar = Rational;
    type Elem = HeisenbergElement;
    type Acting = GSpElement;

    fn levels(&self) -> usize {
        2
    }

    fn level_dim(&self, level: usize) -> usize {
        if level == 0 {
            self.dim
        } else {
            1
        }
    }

    fn identity(&self) -> HeisenbergElement {
        HeisenbergElement::identity(self.dim)
    }

    fn project(&self, level: usize, n: &HeisenbergElement) -> Vector<Rational> {
        if level == 0 {
            n.v.clone()
        } else {
            Vector::new(vec![n.t.clone()])
        }
    }

    fn section(&self, level: usize, v: &Vector<Rational>) -> HeisenbergElement {
        if level == 0 {
            HeisenbergElement::new(v.clone(), Rational::zero())
        } else {
            HeisenbergElement::central(self.dim, v[0].clone())
        }
    }

    fn level_action(&self, level: usize, x: &GSpElement) -> Matrix<Rational> {
        if level == 0 {
            x.g.clone()
        } else {
            Matrix::diagonal(std::slice::from_ref(&x.mu))
        }
    }
}

/// `P = [[0, 1], [−1, 0]]`.
fn quarter_turn() -> Matrix<Rational> {
    Matrix::from_i64s(&[&[0, 1], &[-1, 0]])
}

/// `x = diag(P, P⁻¹)`, with `μ(x) = −1`.
pub fn gsp_x() -> GSpElement {
    let p = quarter_turn();
    let p_inv = p.inverse().expect("P is invertible");
    GSpElement::new(p.direct_sum(&p_inv)).expect("diag(P, P^-1) is a similitude")
}

/// `y = [[0, I], [I, 0]]`, which conjugates `x` to `x⁻¹`.
pub fn gsp_y() -> GSpElement {
    let m = Matrix::from_i64s(&[&[0, 0, 1, 0], &[0, 0, 0, 1], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    GSpElement::new(m).expect("y is a similitude")
}

/// Reality certificate for `x·n` in `GSp(4) ⋉ H₅` for each sample, lifted
/// through both levels with inverting element `y`.
pub fn demo_gsp_heisenberg(
    samples: &[HeisenbergElement],
) -> Result<Vec<Certificate<LiftedElement<HeisenbergPresentation>>>, SolvableError> {
    let presentation = heisenberg_presentation();
    let (x, y) = (gsp_x(), gsp_y());
    samples
        .iter()
        .map(|n| Ok(real_witness_via_lift(&x, n, &presentation, &y)?))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semidirect::{check_fixed_point_free, check_presentation, SemidirectElement};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn x_has_similitude_minus_one() {
        let x = gsp_x();
        let j = symplectic_form(4);
        assert_eq!(&(&x.matrix().transpose() * &j) * x.matrix(), -&j);
        assert_eq!(x.mu(), &Rational::integer(-1));
    }

    #[test]
    fn y_inverts_x() {
        let (x, y) = (gsp_x(), gsp_y());
        assert_eq!(x.conjugate_by(&y), x.inverse());
    }

    #[test]
    fn non_similitude_rejected() {
        let g = Matrix::diagonal(&[Rational::integer(2), Rational::one(), Rational::one(), Rational::one()]);
        assert!(matches!(GSpElement::new(g), Err(SolvableError::NotSimilitude(_))));
    }

    #[test]
    fn heisenberg_axioms() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let a = HeisenbergElement::random(&mut rng, 4, 5);
            let b = HeisenbergElement::random(&mut rng, 4, 5);
            let c = HeisenbergElement::random(&mut rng, 4, 5);
            assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            assert!(a.mul(&a.inverse()).is_identity());
        }
    }

    #[test]
    fn action_is_automorphism() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let (x, y) = (gsp_x(), gsp_y());
        for _ in 0..20 {
            let a = HeisenbergElement::random(&mut rng, 4, 5);
            let b = HeisenbergElement::random(&mut rng, 4, 5);
            for g in [&x, &y] {
                assert_eq!(gsp_act(g, &a.mul(&b)), gsp_act(g, &a).mul(&gsp_act(g, &b)));
            }
            assert_eq!(gsp_act(&x.mul(&y), &a), gsp_act(&x, &gsp_act(&y, &a)));
        }
    }

    #[test]
    fn presentation_invariants() {
        let p = heisenberg_presentation();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let normal: Vec<_> = (0..3).map(|_| HeisenbergElement::random(&mut rng, 4, 4)).collect();
        let level0: Vec<_> = (0..3).map(|_| HeisenbergElement::random(&mut rng, 4, 4).v).collect();
        let level1 = vec![Vector::new(vec![Rational::new(3, 2)]), Vector::new(vec![Rational::integer(-2)])];
        check_presentation(&p, &[gsp_x(), gsp_y()], &normal, &[level0, level1]).unwrap();
    }

    #[test]
    fn x_is_fixed_point_free() {
        check_fixed_point_free(&gsp_x(), &heisenberg_presentation()).unwrap();
        assert_eq!(
            heisenberg_presentation().level_action(1, &gsp_x()),
            Matrix::diagonal(&[Rational::integer(-1)])
        );
    }

    #[test]
    fn demo_examples() {
        let samples = vec![
            HeisenbergElement::identity(4),
            HeisenbergElement::from_i64s(&[1, 0, 0, 0], 0),
            HeisenbergElement::from_i64s(&[1, 2, 3, 4], 5),
        ];
        let certs = demo_gsp_heisenberg(&samples).unwrap();
        assert_eq!(certs[0].witness(), &SemidirectElement::new(gsp_y(), HeisenbergElement::identity(4)));
        for c in &certs {
            assert!(c.reverify());
        }
    }
}
