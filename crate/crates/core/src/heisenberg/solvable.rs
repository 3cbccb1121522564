//! Checks for `A ⋉ N` with `A` abelian, phrased so that each one is
//! assertable from found witnesses alone.

use crate::arith::{Field, GaussianRational, Matrix, Rational, Vector};
use crate::group::{Certificate, GroupElement, Relation};
use crate::semidirect::{
    check_fixed_point_free, lift_central_series, real_witness_via_lift, Automorphism, CentralSeriesPresentation,
    LiftedElement, SemidirectElement,
};

use super::{complex_heisenberg_reality, CirclePoint, Heisenberg3, HeisenbergVerdict, LambdaCase, SolvableError, Torus};

/// A shipped `A ⋉ N` fixture: sample elements of both factors and a
/// bounded witness search.
pub trait SolvableInstance {
    type Acting: GroupElement + Automorphism<Self::Normal>;
    type Normal: GroupElement;

    fn name(&self) -> &'static str;
    fn acting_samples(&self) -> Vec<Self::Acting>;
    fn normal_samples(&self) -> Vec<Self::Normal>;
    /// Some `g` with `g·(x, n)·g⁻¹ = (x, n)⁻¹`, if the search finds one.
    fn find_reality_witness(
        &self,
        x: &Self::Acting,
        n: &Self::Normal,
    ) -> Option<SemidirectElement<Self::Acting, Self::Normal>>;
}

/// `g = (a, w)` with `g·(x, n)·g⁻¹ = (x, n)⁻¹` in `A ⋉ Fᵈ`, trying each
/// candidate `a` with `a·x·a⁻¹ = x⁻¹` and solving
/// `(X⁻¹ − I)·w = −A⁻¹·X·n − n` for the vector part.
pub fn vector_reality_witness<A, F>(
    x: &A,
    n: &Vector<F>,
    candidates: &[A],
    matrix: impl Fn(&A) -> Matrix<F>,
) -> Option<SemidirectElement<A, Vector<F>>>
where
    A: GroupElement + Automorphism<Vector<F>>,
    F: Field,
{
    let x_inv = x.inverse();
    let big_x = matrix(x);
    let big_x_inv = matrix(&x_inv);
    let lhs = &big_x_inv - &Matrix::identity(n.dim());
    candidates.iter().find_map(|a| {
        if x.conjugate_by(a) != x_inv {
            return None;
        }
        let a_inv = matrix(&a.inverse());
        let rhs = -&(&a_inv.mul_vec(&big_x.mul_vec(n)) + n);
        let w = lhs.solve(&rhs).ok()??;
        Some(SemidirectElement::new(a.clone(), w))
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareLawReport {
    pub instance: &'static str,
    pub pairs_checked: usize,
    pub witnesses_found: usize,
    /// Acting elements for which some `(x, n)` had a witness.
    pub real_acting: Vec<String>,
}

/// For every sampled `(x, n)` with a found reality witness, checks the
/// witness and asserts `x² = e`. Absence of a witness is never reported as
/// non-reality.
pub fn check_square_law<I: SolvableInstance>(instance: &I) -> Result<SquareLawReport, SolvableError> {
    let acting = instance.acting_samples();
    for a in &acting {
        for b in &acting {
            if a.mul(b) != b.mul(a) {
                return Err(SolvableError::Precondition(format!(
                    "{}: acting samples {a:?} and {b:?} do not commute",
                    instance.name()
                )));
            }
        }
    }
    let normal = instance.normal_samples();
    let mut report = SquareLawReport {
        instance: instance.name(),
        pairs_checked: 0,
        witnesses_found: 0,
        real_acting: Vec::new(),
    };
    for x in &acting {
        let mut any = false;
        for n in &normal {
            report.pairs_checked += 1;
            let Some(g) = instance.find_reality_witness(x, n) else {
                continue;
            };
            let subject = SemidirectElement::new(x.clone(), n.clone());
            Certificate::new(subject, g, Relation::Inverse)
                .map_err(|e| SolvableError::Internal(format!("{}: search returned a non-witness: {e}", instance.name())))?;
            report.witnesses_found += 1;
            any = true;
            if !x.mul(x).is_identity() {
                return Err(SolvableError::TheoremViolation(format!(
                    "{}: (x, n) is real but x^2 != e for x = {x:?}",
                    instance.name()
                )));
            }
        }
        if any {
            report.real_acting.push(format!("{x:?}"));
        }
    }
    Ok(report)
}

pub struct StrongRealityReport<P: CentralSeriesPresentation> {
    /// `u ∈ N` with `u·x·u⁻¹ = x·n`.
    pub conjugator: P::Elem,
    pub certificate: Certificate<LiftedElement<P>>,
}

/// For `x ∈ A` with `x² = e`, `h·x·h⁻¹ = x⁻¹` and no fixed vector on any
/// level: lifts `x·n` to a conjugate of `x` and asserts `(x·n)² = e`.
pub fn check_strong_reality<P: CentralSeriesPresentation>(
    x: &P::Acting,
    n: &P::Elem,
    presentation: &P,
    h: &P::Acting,
) -> Result<StrongRealityReport<P>, SolvableError> {
    if !x.mul(x).is_identity() {
        return Err(SolvableError::Precondition("x^2 != e".into()));
    }
    if x.conjugate_by(h) != x.inverse() {
        return Err(SolvableError::Precondition("h does not conjugate x to x^-1".into()));
    }
    check_fixed_point_free(x, presentation).map_err(|e| SolvableError::Precondition(e.to_string()))?;
    let conjugator = lift_central_series(x, n, presentation)?;
    let certificate = real_witness_via_lift(x, n, presentation, h)?;
    let s = SemidirectElement::new(x.clone(), n.clone());
    if !s.mul(&s).is_identity() {
        return Err(SolvableError::TheoremViolation(format!("(x n)^2 != e for n = {n:?}")));
    }
    Ok(StrongRealityReport { conjugator, certificate })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterRigidityReport<F> {
    /// `2·z`, which must vanish for `n = n⁻¹`.
    pub residual: Vector<F>,
    pub candidates_checked: usize,
}

/// With `A` acting trivially on `Z(N) ≅ Fᵈ` and `n ∈ Z(N)` nontrivial with
/// coordinates `central`, reality of `subject = x·n` in `A·Z(N)` reduces to
/// `2·central = 0`. Checks that this fails and that no candidate conjugates
/// `subject` to its inverse.
pub fn check_center_rigidity<G: GroupElement, F: Field>(
    center_actions: &[Matrix<F>],
    central: &Vector<F>,
    subject: &G,
    candidates: impl IntoIterator<Item = G>,
) -> Result<CenterRigidityReport<F>, SolvableError> {
    if F::characteristic() != 0 {
        return Err(SolvableError::Precondition(
            "needs characteristic zero: the center has torsion otherwise".into(),
        ));
    }
    if let Some(m) = center_actions.iter().find(|m| !m.is_identity()) {
        return Err(SolvableError::Precondition(format!("action on the center is not trivial: {m}")));
    }
    if central.is_zero() {
        return Err(SolvableError::Precondition("n must be a nontrivial central element".into()));
    }
    let residual = central.scale(&F::from_i64(2));
    if residual.is_zero() {
        return Err(SolvableError::TheoremViolation("2·z = 0 for nonzero z".into()));
    }
    let target = subject.inverse();
    let mut candidates_checked = 0;
    for g in candidates {
        candidates_checked += 1;
        if subject.conjugate_by(&g) == target {
            return Err(SolvableError::TheoremViolation(format!("{g:?} inverts a central element")));
        }
    }
    Ok(CenterRigidityReport {
        residual,
        candidates_checked,
    })
}

fn slopes() -> Vec<Rational> {
    [(0, 1), (1, 1), (1, 2), (2, 1), (-1, 3), (3, 4)]
        .iter()
        .map(|&(n, d)| Rational::new(n, d))
        .collect()
}

/// The circle acting on ℚ² by double-angle rotations.
#[derive(Debug, Clone, Copy, Default)]
pub struct RotationInstance;

impl SolvableInstance for RotationInstance {
    type Acting = CirclePoint;
    type Normal = Vector<Rational>;

    fn name(&self) -> &'static str {
        "circle on Q^2 by double-angle rotation"
    }

    fn acting_samples(&self) -> Vec<CirclePoint> {
        let mut out = vec![CirclePoint::half_turn(), CirclePoint::quarter_turn()];
        out.extend(slopes().iter().map(CirclePoint::from_slope));
        out
    }

    fn normal_samples(&self) -> Vec<Vector<Rational>> {
        vec![
            Vector::zeros(2),
            Vector::from_i64s(&[3, -7]),
            Vector::from_i64s(&[1, 0]),
            Vector::new(vec![Rational::new(2, 5), Rational::new(-1, 3)]),
        ]
    }

    fn find_reality_witness(&self, x: &CirclePoint, n: &Vector<Rational>) -> Option<SemidirectElement<CirclePoint, Vector<Rational>>> {
        vector_reality_witness(x, n, &self.acting_samples(), CirclePoint::action)
    }
}

/// Nonzero scalars acting on `F^d` by multiplication.
#[derive(Debug, Clone, Copy)]
pub struct ScalarInstance {
    pub dim: usize,
}

impl Default for ScalarInstance {
    fn default() -> Self {
        ScalarInstance { dim: 3 }
    }
}

impl SolvableInstance for ScalarInstance {
    type Acting = Matrix<Rational>;
    type Normal = Vector<Rational>;

    fn name(&self) -> &'static str {
        "scalars on Q^d"
    }

    fn acting_samples(&self) -> Vec<Matrix<Rational>> {
        [Rational::one(), Rational::integer(-1), Rational::integer(2), Rational::new(-1, 3)]
            .iter()
            .map(|s| Matrix::identity(self.dim).scale(s))
            .collect()
    }

    fn normal_samples(&self) -> Vec<Vector<Rational>> {
        vec![
            Vector::zeros(self.dim),
            Vector::from_i64s(&(1..=self.dim as i64).collect::<Vec<_>>()),
            Vector::basis(self.dim, 0).scale(&Rational::new(-5, 2)),
        ]
    }

    fn find_reality_witness(&self, x: &Matrix<Rational>, n: &Vector<Rational>) -> Option<SemidirectElement<Matrix<Rational>, Vector<Rational>>> {
        vector_reality_witness(x, n, &self.acting_samples(), Clone::clone)
    }
}

/// The torus on the three-dimensional Heisenberg group.
#[derive(Debug, Clone, Copy, Default)]
pub struct TorusHeisenbergInstance<F> {
    _field: std::marker::PhantomData<F>,
}

impl<F: Field> TorusHeisenbergInstance<F> {
    pub fn new() -> Self {
        TorusHeisenbergInstance {
            _field: std::marker::PhantomData,
        }
    }
}

fn torus_heisenberg_name<F: Field>() -> &'static str {
    if std::any::type_name::<F>() == std::any::type_name::<GaussianRational>() {
        "torus on the complex Heisenberg group"
    } else {
        "torus on the Heisenberg group"
    }
}

impl<F: Field> SolvableInstance for TorusHeisenbergInstance<F> {
    type Acting = Torus<F>;
    type Normal = Heisenberg3<F>;

    fn name(&self) -> &'static str {
        torus_heisenberg_name::<F>()
    }

    fn acting_samples(&self) -> Vec<Torus<F>> {
        [1, -1, 2, -3]
            .iter()
            .filter_map(|&k| Torus::from_i64(k).ok())
            .chain(F::from_i64(2).inv().and_then(|h| Torus::new(h).ok()))
            .collect()
    }

    fn normal_samples(&self) -> Vec<Heisenberg3<F>> {
        vec![
            Heisenberg3::identity(),
            Heisenberg3::from_i64s(2, 1, 1),
            Heisenberg3::from_i64s(1, 1, 1),
            Heisenberg3::from_i64s(0, 3, -2),
            Heisenberg3::from_i64s(0, 0, 4),
            Heisenberg3::from_i64s(4, -1, -2),
        ]
    }

    fn find_reality_witness(&self, x: &Torus<F>, n: &Heisenberg3<F>) -> Option<SemidirectElement<Torus<F>, Heisenberg3<F>>> {
        let case = if x.value().is_one() {
            LambdaCase::Identity
        } else if (-x.value().clone()).is_one() {
            LambdaCase::MinusOne { lambda: F::one() }
        } else {
            // Abelian A: nothing conjugates x to x⁻¹ ≠ x.
            return None;
        };
        match complex_heisenberg_reality(n, &case).ok()? {
            HeisenbergVerdict::Real(cert) => Some(cert.witness().clone()),
            HeisenbergVerdict::NotReal { .. } => None,
        }
    }
}
