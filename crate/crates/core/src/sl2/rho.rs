use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arith::{Field, Matrix, Rational};
use crate::group::GroupElement;

use super::SL2Element;

/// Coefficients of `(αx + βy)^m` in the basis `x^{m−j} yʲ`.
fn linear_power(alpha: &Rational, beta: &Rational, m: usize) -> Vec<Rational> {
    let mut coeffs = vec![Rational::one()];
    for _ in 0..m {
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j] = next[j].clone() + c.clone() * alpha.clone();
            next[j + 1] = next[j + 1].clone() + c.clone() * beta.clone();
        }
        coeffs = next;
    }
    coeffs
}

fn poly_mul(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    out
}

/// Matrix of `p(x, y) ↦ p(ax + by, cx + dy)` on degree-`n` forms, in the
/// monomial basis `xⁿ, xⁿ⁻¹y, …, yⁿ`. Column `i` is the expansion of
/// `(ax + by)^{n−i} (cx + dy)ⁱ`.
pub fn rho(g: &SL2Element, n: usize) -> Matrix<Rational> {
    let columns: Vec<Vec<Rational>> = (0..=n)
        .map(|i| poly_mul(&linear_power(g.a(), g.b(), n - i), &linear_power(g.c(), g.d(), i)))
        .collect();
    Matrix::from_fn(n + 1, n + 1, |r, c| columns[c][r].clone())
}

/// Which composition order of [`rho`] is a homomorphism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Handedness {
    /// `ρ(gh) = ρ(g)ρ(h)`; the semidirect product uses `ρ(g)`.
    Covariant,
    /// `ρ(gh) = ρ(h)ρ(g)`; the semidirect product uses `ρ(g⁻¹)`.
    Contravariant,
}

/// Tests both composition orders on seeded random pairs.
pub fn detect_handedness() -> Handedness {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let (mut covariant, mut contravariant) = (true, true);
    for _ in 0..8 {
        let g = SL2Element::random(&mut rng, 5);
        let h = SL2Element::random(&mut rng, 5);
        for n in [2, 3] {
            let gh = rho(&g.mul(&h), n);
            covariant &= gh == &rho(&g, n) * &rho(&h, n);
            contravariant &= gh == &rho(&h, n) * &rho(&g, n);
        }
    }
    match (covariant, contravariant) {
        (true, _) => Handedness::Covariant,
        (false, true) => Handedness::Contravariant,
        (false, false) => panic!("rho is neither a homomorphism nor an anti-homomorphism"),
    }
}

/// Detected once per process.
pub fn handedness() -> Handedness {
    static CELL: OnceLock<Handedness> = OnceLock::new();
    *CELL.get_or_init(detect_handedness)
}

/// The homomorphism `SL(2) → GL(n+1)` used by the semidirect product.
pub fn map(g: &SL2Element, n: usize) -> Matrix<Rational> {
    match handedness() {
        Handedness::Covariant => rho(g, n),
        Handedness::Contravariant => rho(&g.inverse(), n),
    }
}
