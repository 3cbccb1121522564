use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, Matrix, Vector};
use crate::group::{Certificate, GroupElement, Relation};
use crate::semidirect::{make_power_witness, AffineElement};

use super::linear::{check_linear_certificates, intertwiner_basis, select_invertible, SELECTION_SEED};
use super::{extract_block_certificate, split_at_eigenvalue_one, AffineRationalError, EigenOneSplitting};

/// Verified witnesses `g_k` with `g_k·s·g_k⁻¹ = s^k` for every `k` in
/// `[1, m)` coprime to the order `m` of `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalityCertificateSet<F> {
    pub order: u64,
    pub witnesses: BTreeMap<u64, Certificate<AffineElement<F>>>,
}

/// Outcome of the reality search for an infinite-order `(x, v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineReality<F> {
    Real(Certificate<AffineElement<F>>),
    /// No `h` with `h·x·h⁻¹ = x⁻¹` moves the kernel component to its
    /// negative, so no witness exists.
    NotReal,
    /// A linear part satisfying the conditions exists but none of the
    /// sampled ones is invertible.
    Inconclusive,
}

/// `(x, v)` with a nonzero component of `v` on `ker(x − I)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteOrderReport<F> {
    pub subject: AffineElement<F>,
    pub splitting: EigenOneSplitting<F>,
    pub kernel_component: Vector<F>,
    pub reality: AffineReality<F>,
}

impl<F: Field> InfiniteOrderReport<F> {
    /// Kernel coordinates of the translation of `(x, v)^l`.
    pub fn telescoped_kernel_coordinates(&self, l: u64) -> Vector<F> {
        self.splitting.project(&self.subject.telescoped_translation(l)).0
    }

    /// Rational exactly when real, since only `k = ±1` generate.
    pub fn is_rational(&self) -> Option<bool> {
        match self.reality {
            AffineReality::Real(_) => Some(true),
            AffineReality::NotReal => Some(false),
            AffineReality::Inconclusive => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AffineRationality<F> {
    Rational(RationalityCertificateSet<F>),
    InfiniteOrder(Box<InfiniteOrderReport<F>>),
}

/// Rationality of `(x, v) ≙ [[x, v], [0, 1]]` for `x` of finite order `m`
/// with linear certificates `certs[k]·x·certs[k]⁻¹ = x^k`.
///
/// - `ker(x − I) = 0`: the constructive conjugator for each `k`.
/// - `v` inside `im(x − I)`: conjugators on the image block, extended by
///   the identity on the kernel.
/// - otherwise the kernel coordinate grows linearly under powers, so the
///   order is infinite (characteristic zero only).
pub fn classify_affine_rational<F: Field>(
    x: &Matrix<F>,
    v: &Vector<F>,
    m: u64,
    certs: &BTreeMap<u64, Matrix<F>>,
) -> Result<AffineRationality<F>, AffineRationalError> {
    let splitting = split_at_eigenvalue_one(x, m)?;
    check_linear_certificates(x, certs)?;
    let subject = AffineElement::new(x.clone(), v.clone())?;
    let order = crate::group::element_order(x, m).finite().unwrap_or(m);
    let exponents: Vec<u64> = crate::group::coprime_residues(order);
    let cert_for = |k: u64| -> Result<&Matrix<F>, AffineRationalError> {
        certs
            .iter()
            .find(|(&j, _)| j % order == k % order)
            .map(|(_, g)| g)
            .ok_or(AffineRationalError::MissingCertificate { k })
    };

    if splitting.kernel_dim() == 0 {
        let mut witnesses = BTreeMap::new();
        for k in exponents {
            let cert = make_power_witness(x, v, cert_for(k)?, k as i64)?;
            witnesses.insert(k, cert);
        }
        return Ok(AffineRationality::Rational(RationalityCertificateSet { order, witnesses }));
    }

    let (kernel_component, image_component) = splitting.project(v);
    if kernel_component.is_zero() {
        let mut witnesses = BTreeMap::new();
        for k in exponents {
            let witness = block_lifted_witness(x, &image_component, cert_for(k)?, k, &splitting)?;
            witnesses.insert(k, Certificate::new(subject.clone(), witness, Relation::Power(k as i64))?);
        }
        return Ok(AffineRationality::Rational(RationalityCertificateSet { order, witnesses }));
    }

    if F::characteristic() != 0 {
        return Err(AffineRationalError::UnsupportedCharacteristic);
    }
    let reality = reality_witness(x, v, &splitting)?;
    Ok(AffineRationality::InfiniteOrder(Box::new(InfiniteOrderReport {
        subject,
        splitting,
        kernel_component,
        reality,
    })))
}

/// `diag(I, g')` with translation `(0, w')` in the adapted basis, where
/// `(g', w')` is the constructive conjugator for `(x_U, v_U)`.
fn block_lifted_witness<F: Field>(
    x: &Matrix<F>,
    image_component: &Vector<F>,
    g: &Matrix<F>,
    k: u64,
    splitting: &EigenOneSplitting<F>,
) -> Result<AffineElement<F>, AffineRationalError> {
    let kd = splitting.kernel_dim();
    let kernel_zero = Vector::zeros(kd);
    let (linear, translation) = if splitting.image_dim() == 0 {
        (Matrix::identity(0), Vector::zeros(0))
    } else {
        let block = extract_block_certificate(g, x, k, splitting)?;
        let restricted = make_power_witness(splitting.restricted(), image_component, &block, k as i64)?;
        let w = restricted.witness();
        (w.linear().clone(), w.translation().clone())
    };
    let full_linear = splitting.from_adapted(&Matrix::identity(kd).direct_sum(&linear));
    let full_translation = splitting.combine(&kernel_zero, &translation);
    Ok(AffineElement::new(full_linear, full_translation)?)
}

/// Searches `h` with `h·x = x⁻¹·h` and `π_K(h·v) = −v_K`; then
/// `(I − x⁻¹)·w = −x⁻¹·v − h·v` is solvable and `(h, w)` inverts `(x, v)`.
/// Both conditions are linear in `h`, so an inconsistent system proves the
/// element is not real.
fn reality_witness<F: Field>(
    x: &Matrix<F>,
    v: &Vector<F>,
    splitting: &EigenOneSplitting<F>,
) -> Result<AffineReality<F>, AffineRationalError> {
    let n = x.rows();
    let x_inv = x.inverse()?;
    let basis = intertwiner_basis(x, &x_inv);
    let kd = splitting.kernel_dim();
    let (v_kernel, _) = splitting.project(v);
    // Column i: π_K(B_i·v).
    let columns: Vec<Vector<F>> = basis.iter().map(|b| splitting.project(&b.mul_vec(v)).0).collect();
    if basis.is_empty() {
        return Ok(AffineReality::NotReal);
    }
    let system = Matrix::from_columns(kd, &columns);
    let Some(particular) = system.solve(&-&v_kernel)? else {
        return Ok(AffineReality::NotReal);
    };
    let combine = |coeffs: &Vector<F>| {
        basis
            .iter()
            .zip(coeffs.entries())
            .fold(Matrix::zeros(n, n), |acc, (b, c)| &acc + &b.scale(c))
    };
    let offset = combine(&particular);
    let homogeneous: Vec<Matrix<F>> = system.kernel_basis().iter().map(&combine).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SELECTION_SEED);
    let Some(h) = select_invertible(&offset, &homogeneous, &mut rng) else {
        return Ok(AffineReality::Inconclusive);
    };
    let rhs = -&(&x_inv.mul_vec(v) + &h.mul_vec(v));
    let w = (&Matrix::identity(n) - &x_inv)
        .solve(&rhs)?
        .ok_or_else(|| AffineRationalError::Internal("reality translation system inconsistent".into()))?;
    let subject = AffineElement::new(x.clone(), v.clone())?;
    let witness = AffineElement::new(h, w)?;
    debug_assert!(subject.conjugate_by(&witness) == subject.inverse());
    Ok(AffineReality::Real(Certificate::new(subject, witness, Relation::Inverse)?))
}
