use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, Matrix};
use crate::group::coprime_residues;

use super::AffineRationalError;

/// Seed for invertible-element selection.
pub const SELECTION_SEED: u64 = 0xc0ffee;
/// Random combinations tried per exponent.
pub const SELECTION_ATTEMPTS: usize = 200;

/// Basis of `{g : g·a = b·g}`.
pub fn intertwiner_basis<F: Field>(a: &Matrix<F>, b: &Matrix<F>) -> Vec<Matrix<F>> {
    let n = a.rows();
    // Unknown (i, j) of g is column i·n + j; equation (r, c) is row r·n + c.
    let mut system = Matrix::<F>::zeros(n * n, n * n);
    for i in 0..n {
        for j in 0..n {
            let unknown = i * n + j;
            // (E_ij·a)[i][c] = a[j][c]
            for c in 0..n {
                let row = i * n + c;
                let cur = system.get(row, unknown).clone();
                system.set(row, unknown, cur + a.get(j, c).clone());
            }
            // (b·E_ij)[r][j] = b[r][i]
            for r in 0..n {
                let row = r * n + j;
                let cur = system.get(row, unknown).clone();
                system.set(row, unknown, cur - b.get(r, i).clone());
            }
        }
    }
    system
        .kernel_basis()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
        .collect()
}

fn combine<F: Field>(basis: &[Matrix<F>], coeffs: &[F], n: usize) -> Matrix<F> {
    basis
        .iter()
        .zip(coeffs)
        .fold(Matrix::zeros(n, n), |acc, (m, c)| &acc + &m.scale(c))
}

/// An invertible element of `offset + span(basis)`: the offset alone,
/// each basis shift, then seeded random combinations.
pub(crate) fn select_invertible<F: Field>(
    offset: &Matrix<F>,
    basis: &[Matrix<F>],
    rng: &mut ChaCha8Rng,
) -> Option<Matrix<F>> {
    if offset.is_invertible() {
        return Some(offset.clone());
    }
    for m in basis {
        let candidate = offset + m;
        if candidate.is_invertible() {
            return Some(candidate);
        }
    }
    if basis.is_empty() {
        return None;
    }
    let n = offset.rows();
    (0..SELECTION_ATTEMPTS).find_map(|_| {
        let coeffs: Vec<F> = basis.iter().map(|_| F::from_i64(rng.gen_range(-9..=9))).collect();
        let candidate = offset + &combine(basis, &coeffs, n);
        candidate.is_invertible().then_some(candidate)
    })
}

/// Whether `x` and `x^k` have the same characteristic polynomial, via
/// traces of powers. Only conclusive in characteristic zero.
fn same_power_traces<F: Field>(x: &Matrix<F>, k: i64) -> Result<bool, AffineRationalError> {
    let xk = x.pow(k)?;
    let (mut p, mut q) = (Matrix::identity(x.rows()), Matrix::identity(x.rows()));
    for _ in 0..x.rows() {
        p = &p * x;
        q = &q * &xk;
        if p.trace() != q.trace() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For each `k` coprime to `m`, an invertible `g` with `g·x·g⁻¹ = x^k`.
///
/// Over characteristic zero a finite-order `x` is semisimple, so `x` and
/// `x^k` are conjugate exactly when their power traces agree; a mismatch
/// is reported as [`AffineRationalError::NotRational`]. Otherwise an
/// invertible element of the intertwiner space is selected, and failure to
/// find one is [`AffineRationalError::Inconclusive`].
pub fn rationality_certificates_linear<F: Field>(
    x: &Matrix<F>,
    m: u64,
) -> Result<BTreeMap<u64, Matrix<F>>, AffineRationalError> {
    if !x.is_square() || !x.pow(m as i64)?.is_identity() {
        return Err(AffineRationalError::NotFiniteOrder { m });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SELECTION_SEED);
    let n = x.rows();
    let mut out = BTreeMap::new();
    for k in coprime_residues(m) {
        if k == 1 {
            out.insert(1, Matrix::identity(n));
            continue;
        }
        let xk = x.pow(k as i64)?;
        if F::characteristic() == 0 && !same_power_traces(x, k as i64)? {
            return Err(AffineRationalError::NotRational { k });
        }
        let basis = intertwiner_basis(x, &xk);
        let g = select_invertible(&Matrix::zeros(n, n), &basis, &mut rng).ok_or(
            AffineRationalError::Inconclusive {
                k,
                attempts: SELECTION_ATTEMPTS,
            },
        )?;
        debug_assert_eq!(&(&g * x), &(&xk * &g));
        out.insert(k, g);
    }
    Ok(out)
}

/// Checks `g·x·g⁻¹ = x^k` for every entry.
pub(crate) fn check_linear_certificates<F: Field>(
    x: &Matrix<F>,
    certs: &BTreeMap<u64, Matrix<F>>,
) -> Result<(), AffineRationalError> {
    for (&k, g) in certs {
        let xk = x.pow(k as i64)?;
        if !g.is_invertible() || (g * x) != (&xk * g) {
            return Err(AffineRationalError::RejectedCertificate { k });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{GaussianRational, Rational, F3};

    fn three_cycle() -> Matrix<Rational> {
        Matrix::from_i64s(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]])
    }

    #[test]
    fn identity_has_trivial_certificate() {
        let certs = rationality_certificates_linear(&Matrix::<Rational>::identity(3), 1).unwrap();
        assert_eq!(certs.len(), 1);
        assert!(certs[&1].is_identity());
    }

    #[test]
    fn three_cycle_square() {
        let x = three_cycle();
        let certs = rationality_certificates_linear(&x, 3).unwrap();
        let g = &certs[&2];
        assert_eq!(&(g * &x) * &g.inverse().unwrap(), x.pow(2).unwrap());
        // A transposition is one valid choice.
        let swap = Matrix::from_i64s(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert_eq!(&(&swap * &x) * &swap.inverse().unwrap(), x.pow(2).unwrap());
    }

    #[test]
    fn involution_only_needs_k_one() {
        let x = Matrix::<Rational>::from_i64s(&[&[1, 0], &[0, -1]]);
        assert_eq!(rationality_certificates_linear(&x, 2).unwrap().len(), 1);
    }

    #[test]
    fn rotation_of_order_four_is_rational() {
        let x = Matrix::<Rational>::from_i64s(&[&[0, -1], &[1, 0]]);
        let certs = rationality_certificates_linear(&x, 4).unwrap();
        assert!(certs.contains_key(&3));
    }

    #[test]
    fn companion_of_fifth_cyclotomic() {
        let phi5 = Matrix::<Rational>::from_i64s(&[&[0, 0, 0, -1], &[1, 0, 0, -1], &[0, 1, 0, -1], &[0, 0, 1, -1]]);
        let certs = rationality_certificates_linear(&phi5, 5).unwrap();
        assert_eq!(certs.keys().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn gaussian_scalar_is_not_rational() {
        let x = Matrix::diagonal(&[GaussianRational::i()]);
        assert!(matches!(
            rationality_certificates_linear(&x, 4),
            Err(AffineRationalError::NotRational { k: 3 })
        ));
    }

    #[test]
    fn wrong_order_rejected() {
        assert!(matches!(
            rationality_certificates_linear(&three_cycle(), 2),
            Err(AffineRationalError::NotFiniteOrder { m: 2 })
        ));
    }

    #[test]
    fn prime_field_intertwiners() {
        let x = Matrix::<F3>::from_i64s(&[&[1, 1], &[0, 1]]);
        let certs = rationality_certificates_linear(&x, 3).unwrap();
        let g = &certs[&2];
        assert_eq!(&(g * &x), &(&x.pow(2).unwrap() * g));
    }
}
