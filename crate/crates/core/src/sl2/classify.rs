use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Field, Matrix, Rational, Vector};
use crate::group::{coprime_residues, element_order, Certificate, GroupElement, OrderResult, Relation};
use crate::semidirect::make_real_witness;

use super::{map, PolyVector, SL2Element, Sl2Error, Sl2VElement};

/// Why an element was proved not real.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotRealReason {
    /// Even `n ≡ 0 mod 4`, `r ≠ ±1`: every inverting linear part is
    /// antidiagonal and acts by `+1` on the middle monomial, so the middle
    /// translation equation reads `0 = −2·v_mid`.
    MiddleCoefficient { degree: usize, coefficient: Rational },
    /// `map(x) = I` and `v` is a nonzero semidefinite form; `v ∘ h` takes
    /// the same values as `v`, so it never equals `−v`.
    SemidefiniteForm { degree: usize, form: String },
}

impl fmt::Display for NotRealReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NotRealReason::MiddleCoefficient { degree, coefficient } => write!(
                f,
                "degree {degree}: middle coefficient {coefficient} must vanish for an antidiagonal conjugator"
            ),
            NotRealReason::SemidefiniteForm { degree, form } => {
                write!(f, "degree {degree}: {form} is a nonzero semidefinite form, so h·v = -v is impossible")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealityResult {
    RealWithWitness(Certificate<Sl2VElement>),
    NotReal(NotRealReason),
    /// No witness in the searched families and no obstruction applies.
    Unknown(Vec<String>),
}

impl RealityResult {
    pub fn is_real(&self) -> bool {
        matches!(self, RealityResult::RealWithWitness(_))
    }

    pub fn certificate(&self) -> Option<&Certificate<Sl2VElement>> {
        match self {
            RealityResult::RealWithWitness(c) => Some(c),
            _ => None,
        }
    }
}

/// Candidate families for `negation_witness_search`, tried in order:
/// `−I`, `[[0, t], [−1/t, 0]]` for `t` in `t_grid`, then those conjugated by
/// `[[1, s], [0, 1]]` and `[[1, 0], [s, 1]]` for `s` in `conjugation_grid`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchFamilies {
    pub t_grid: Vec<Rational>,
    pub conjugation_grid: Vec<Rational>,
}

fn signed_grid(values: &[(i64, i64)]) -> Vec<Rational> {
    values
        .iter()
        .flat_map(|&(n, d)| [Rational::new(n, d), Rational::new(-n, d)])
        .collect()
}

impl Default for SearchFamilies {
    fn default() -> Self {
        SearchFamilies {
            t_grid: signed_grid(&[(1, 1), (2, 1), (1, 2), (3, 1), (1, 3)]),
            conjugation_grid: signed_grid(&[(1, 1), (2, 1), (1, 2)]),
        }
    }
}

impl SearchFamilies {
    pub fn describe(&self) -> Vec<String> {
        let list = |g: &[Rational]| g.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(", ");
        vec![
            "-I".to_string(),
            format!("[[0, t], [-1/t, 0]] for t in {{{}}}", list(&self.t_grid)),
            format!(
                "unipotent conjugates of the above by s in {{{}}}",
                list(&self.conjugation_grid)
            ),
        ]
    }

    fn candidates(&self) -> impl Iterator<Item = SL2Element> + '_ {
        let antidiagonals: Vec<SL2Element> = self
            .t_grid
            .iter()
            .filter_map(|t| SL2Element::antidiagonal(t).ok())
            .collect();
        let conjugated: Vec<SL2Element> = self
            .conjugation_grid
            .iter()
            .flat_map(|s| [SL2Element::upper_unipotent(s), SL2Element::lower_unipotent(s)])
            .flat_map(|u| antidiagonals.iter().map(move |y| y.conjugate_by(&u)))
            .collect();
        std::iter::once(SL2Element::minus_identity())
            .chain(antidiagonals)
            .chain(conjugated)
    }
}

/// First `h` from `families` with `h·v = −v`.
pub fn negation_witness_search(v: &PolyVector, families: &SearchFamilies) -> Option<SL2Element> {
    let n = v.degree();
    let target = -v.coeffs();
    families.candidates().find(|h| map(h, n).mul_vec(v.coeffs()) == target)
}

/// Sound obstruction for `map(x) = I`: `v` nonzero and semidefinite, detected
/// for quadratic forms with discriminant `≤ 0` and for single monomials
/// with both exponents even.
fn semidefinite_obstruction(v: &PolyVector) -> Option<NotRealReason> {
    if v.is_zero() {
        return None;
    }
    let n = v.degree();
    let reason = || NotRealReason::SemidefiniteForm {
        degree: n,
        form: v.to_string(),
    };
    if n == 2 {
        let (a, b, c) = (v.coeff(0), v.coeff(1), v.coeff(2));
        let disc = b.clone() * b.clone() - Rational::integer(4) * a.clone() * c.clone();
        if !disc.is_positive() {
            return Some(reason());
        }
    }
    let support: Vec<usize> = (0..=n).filter(|&i| !v.coeff(i).is_zero()).collect();
    if let [i] = support[..] {
        if i % 2 == 0 && (n - i).is_multiple_of(2) {
            return Some(reason());
        }
    }
    None
}

/// Translation part of a conjugator `(y_t, w)` inverting `(x, v)` for
/// diagonal `x`, solving `(I − X⁻¹)·w = −X⁻¹·v − Y·v` coordinatewise with
/// `X = map(x)`, `Y = map(y_t)`. Coordinates where `X` is `1` take the
/// value `free`; `None` when such a coordinate's equation is inconsistent.
pub fn antidiagonal_witness(
    x: &SL2Element,
    v: &PolyVector,
    t: &Rational,
    free: &Rational,
) -> Result<Option<Sl2VElement>, Sl2Error> {
    if !x.is_diagonal() {
        return Err(Sl2Error::NotDiagonal);
    }
    let y = SL2Element::antidiagonal(t).map_err(|_| Sl2Error::ZeroT)?;
    let n = v.degree();
    let x_inv = map(&x.inverse(), n);
    let rhs = -&(&x_inv.mul_vec(v.coeffs()) + &map(&y, n).mul_vec(v.coeffs()));
    let mut w = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let coeff = Rational::one() - x_inv.get(i, i).clone();
        match coeff.inv() {
            Some(c) => w.push(rhs[i].clone() * c),
            None if rhs[i].is_zero() => w.push(free.clone()),
            None => return Ok(None),
        }
    }
    Ok(Some(Sl2VElement::new(y, PolyVector::new(Vector::new(w))?)))
}

/// Reality verdict for `(x, v)`, `x = diag(r, 1/r)`, with the default
/// search families. `t` selects the antidiagonal conjugator.
pub fn classify_real(x: &SL2Element, v: &PolyVector, t: &Rational) -> Result<RealityResult, Sl2Error> {
    classify_real_with(x, v, t, &SearchFamilies::default())
}

pub fn classify_real_with(
    x: &SL2Element,
    v: &PolyVector,
    t: &Rational,
    families: &SearchFamilies,
) -> Result<RealityResult, Sl2Error> {
    if t.is_zero() {
        return Err(Sl2Error::ZeroT);
    }
    if !x.is_diagonal() {
        return Err(Sl2Error::NotDiagonal);
    }
    let n = v.degree();
    let subject = Sl2VElement::new(x.clone(), v.clone());
    let big_x = map(x, n);
    let certify = |g: Sl2VElement| -> Result<RealityResult, Sl2Error> {
        Ok(RealityResult::RealWithWitness(Certificate::new(
            subject.clone(),
            g,
            Relation::Inverse,
        )?))
    };

    if big_x.is_identity() {
        if let Some(h) = negation_witness_search(v, families) {
            return certify(Sl2VElement::new(h, PolyVector::zeros(n)));
        }
        return Ok(match semidefinite_obstruction(v) {
            Some(reason) => RealityResult::NotReal(reason),
            None => RealityResult::Unknown(families.describe()),
        });
    }

    let shifted = &big_x - &Matrix::identity(n + 1);
    if shifted.is_invertible() {
        // No fixed vector: conjugate the inverting linear part by the
        // translation that clears v.
        let h = if x.inverse() == *x {
            SL2Element::identity()
        } else {
            SL2Element::antidiagonal(t)?
        };
        let affine = make_real_witness(&big_x, v.coeffs(), &map(&h, n))?;
        let w = PolyVector::new(affine.witness().translation().clone())?;
        return certify(Sl2VElement::new(h, w));
    }

    match antidiagonal_witness(x, v, t, &Rational::zero())? {
        Some(g) => certify(g),
        None => Ok(RealityResult::NotReal(NotRealReason::MiddleCoefficient {
            degree: n,
            coefficient: v.coeff(n / 2).clone(),
        })),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ElementOrder {
    Finite(u64),
    Infinite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RationalityVerdict {
    /// Certificates keyed by exponent: `{1, −1}` for infinite order, the
    /// residues coprime to the order otherwise.
    Rational {
        order: ElementOrder,
        certificates: BTreeMap<i64, Certificate<Sl2VElement>>,
    },
    NotRational { order: ElementOrder, reason: NotRealReason },
    Unknown(String),
}

/// Exact order of `(x, v)` for diagonal `x`, or `None` past `bound`.
pub fn sl2v_order(x: &SL2Element, v: &PolyVector, bound: u64) -> Result<Option<ElementOrder>, Sl2Error> {
    if !x.is_diagonal() {
        return Err(Sl2Error::NotDiagonal);
    }
    let s = Sl2VElement::new(x.clone(), v.clone());
    let r = x.a();
    if !(r.is_one() || (-r.clone()).is_one()) {
        return Ok(Some(ElementOrder::Infinite));
    }
    // x = ±I, so s² = (I, u); a nonzero translation has infinite order.
    let square = s.mul(&s);
    if !square.translation().is_zero() {
        return Ok(Some(ElementOrder::Infinite));
    }
    Ok(match element_order(&s, bound) {
        OrderResult::Finite(m) => Some(ElementOrder::Finite(m)),
        OrderResult::ExceedsBound(_) => None,
    })
}

/// Rationality verdict for `(x, v)`, `x` diagonal.
pub fn classify_rational_sl2v(x: &SL2Element, v: &PolyVector, bound: u64) -> Result<RationalityVerdict, Sl2Error> {
    let subject = Sl2VElement::new(x.clone(), v.clone());
    let Some(order) = sl2v_order(x, v, bound)? else {
        return Ok(RationalityVerdict::Unknown(format!("order exceeds bound {bound}")));
    };
    let identity = Certificate::new(subject.clone(), subject.identity_like(), Relation::Power(1))?;
    let mut certificates = BTreeMap::from([(1, identity)]);
    let exponents: Vec<i64> = match order {
        ElementOrder::Infinite => vec![-1],
        ElementOrder::Finite(m) => coprime_residues(m)
            .into_iter()
            .filter(|&k| k != 1)
            .map(|k| k as i64)
            .collect(),
    };
    if exponents.is_empty() {
        return Ok(RationalityVerdict::Rational { order, certificates });
    }
    let reality = classify_real(x, v, &Rational::one())?;
    let real_cert = match reality {
        RealityResult::RealWithWitness(c) => c,
        RealityResult::NotReal(reason) => return Ok(RationalityVerdict::NotRational { order, reason }),
        RealityResult::Unknown(families) => {
            return Ok(RationalityVerdict::Unknown(format!(
                "no inverting witness found in: {}",
                families.join("; ")
            )))
        }
    };
    for k in exponents {
        let is_inverse = match order {
            ElementOrder::Infinite => k == -1,
            ElementOrder::Finite(m) => (k + 1) % m as i64 == 0,
        };
        if !is_inverse {
            return Ok(RationalityVerdict::Unknown(format!("no construction for exponent {k}")));
        }
        certificates.insert(k, real_cert.with_relation(Relation::Power(k))?);
    }
    Ok(RationalityVerdict::Rational { order, certificates })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn diag(n: i64, d: i64) -> SL2Element {
        SL2Element::diagonal(&q(n, d)).unwrap()
    }

    fn poly(c: &[i64]) -> PolyVector {
        PolyVector::from_i64s(c).unwrap()
    }

    #[test]
    fn odd_identity_uses_minus_identity() {
        let v = poly(&[1, -2, 3, 5]);
        let res = classify_real(&SL2Element::identity(), &v, &q(1, 1)).unwrap();
        let cert = res.certificate().expect("real");
        assert_eq!(cert.witness().linear(), &SL2Element::minus_identity());
        assert!(cert.witness().translation().is_zero());
    }

    #[test]
    fn quadratic_diagonal_example() {
        // X = map(diag(2, 1/2)) = diag(1/4, 1, 4), Y = antidiag(1, -1, 1):
        // (1 - 4)·w₁ = -4 - 1, (1 - 1/4)·w₃ = -1/4 - 1.
        let res = classify_real(&diag(2, 1), &poly(&[1, 1, 1]), &q(1, 1)).unwrap();
        let cert = res.certificate().expect("real");
        let w = cert.witness().translation();
        assert_eq!(w.coeff(0), &q(5, 3));
        assert_eq!(w.coeff(1), &q(0, 1));
        assert_eq!(w.coeff(2), &q(-5, 3));
        assert!(cert.reverify());
    }

    #[test]
    fn middle_value_is_free() {
        let x = diag(3, 1);
        let v = poly(&[2, -1, 0, 4, 7, 1, -3]);
        for free in [q(0, 1), q(11, 4)] {
            let g = antidiagonal_witness(&x, &v, &q(2, 1), &free).unwrap().unwrap();
            let s = Sl2VElement::new(x.clone(), v.clone());
            assert_eq!(s.conjugate_by(&g), s.inverse());
        }
    }

    #[test]
    fn degree_four_middle_obstruction() {
        let res = classify_real(&diag(2, 1), &poly(&[0, 0, 1, 0, 0]), &q(1, 1)).unwrap();
        assert!(matches!(res, RealityResult::NotReal(NotRealReason::MiddleCoefficient { degree: 4, .. })));
        // Vanishing middle coefficient is real.
        let res = classify_real(&diag(2, 1), &poly(&[1, 2, 0, 3, 4]), &q(1, 1)).unwrap();
        assert!(res.is_real());
    }

    #[test]
    fn quadratic_identity_cases() {
        let res = classify_real(&SL2Element::identity(), &poly(&[1, 0, 0]), &q(1, 1)).unwrap();
        assert!(matches!(res, RealityResult::NotReal(NotRealReason::SemidefiniteForm { .. })));
        let res = classify_real(&SL2Element::identity(), &poly(&[0, 1, 0]), &q(1, 1)).unwrap();
        let cert = res.certificate().expect("real");
        assert_eq!(cert.witness().linear(), &SL2Element::from_i64s(0, 1, -1, 0).unwrap());
    }

    #[test]
    fn search_exhausts_on_square() {
        assert!(negation_witness_search(&poly(&[1, 0, 0]), &SearchFamilies::default()).is_none());
    }

    #[test]
    fn unknown_when_no_rule_applies() {
        // x⁴ + 2y⁴ is definite, but only quadratics and monomials are detected.
        let res = classify_real(&SL2Element::identity(), &poly(&[1, 0, 0, 0, 2]), &q(1, 1)).unwrap();
        assert!(matches!(res, RealityResult::Unknown(_)), "{res:?}");
    }

    #[test]
    fn odd_minus_identity_via_prop_route() {
        let v = poly(&[1, 2, 3, 4, 5, 6]);
        let res = classify_real(&SL2Element::minus_identity(), &v, &q(1, 1)).unwrap();
        assert_eq!(res.certificate().unwrap().witness().linear(), &SL2Element::identity());
    }

    #[test]
    fn usage_errors() {
        let v = poly(&[1, 1, 1]);
        assert_eq!(classify_real(&diag(2, 1), &v, &q(0, 1)), Err(Sl2Error::ZeroT));
        let x = SL2Element::from_i64s(1, 1, 0, 1).unwrap();
        assert_eq!(classify_real(&x, &v, &q(1, 1)), Err(Sl2Error::NotDiagonal));
    }

    #[test]
    fn rationality_examples() {
        match classify_rational_sl2v(&diag(2, 1), &poly(&[1, 1, 1]), 100).unwrap() {
            RationalityVerdict::Rational { order, certificates } => {
                assert_eq!(order, ElementOrder::Infinite);
                assert_eq!(certificates.keys().copied().collect::<Vec<_>>(), vec![-1, 1]);
            }
            other => panic!("{other:?}"),
        }
        match classify_rational_sl2v(&SL2Element::identity(), &poly(&[0, 0, 0]), 100).unwrap() {
            RationalityVerdict::Rational { order, .. } => assert_eq!(order, ElementOrder::Finite(1)),
            other => panic!("{other:?}"),
        }
        match classify_rational_sl2v(&SL2Element::minus_identity(), &poly(&[3, -1, 2, 5]), 100).unwrap() {
            RationalityVerdict::Rational { order, certificates } => {
                assert_eq!(order, ElementOrder::Finite(2));
                assert_eq!(certificates.len(), 1);
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            classify_rational_sl2v(&SL2Element::identity(), &poly(&[1, 0, 0]), 100).unwrap(),
            RationalityVerdict::NotRational { .. }
        ));
    }
}
