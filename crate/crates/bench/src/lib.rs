//! Fixtures shared by the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use semireal::heisenberg::HeisenbergElement;
use semireal::sl2::{PolyVector, SL2Element};
use semireal::{AffineElement, Matrix, Rational, Vector, F3};

pub fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(7)
}

/// Generators of `SL(2,3) ⋉ F₃²`.
pub fn sl2_f3_generators() -> Vec<AffineElement<F3>> {
    let mut gens: Vec<_> = [[[1, 1], [0, 1]], [[1, 0], [1, 1]]]
        .iter()
        .map(|m| AffineElement::linear_part(Matrix::from_i64s(&[&m[0], &m[1]])).unwrap())
        .collect();
    gens.extend((0..2).map(|i| AffineElement::translation_part(Vector::basis(2, i))));
    gens
}

pub fn sl2_samples(count: usize, height: i64) -> Vec<SL2Element> {
    let mut r = rng();
    (0..count).map(|_| SL2Element::random(&mut r, height)).collect()
}

pub fn poly_samples(count: usize, degree: usize) -> Vec<PolyVector> {
    let mut r = rng();
    (0..count).map(|_| PolyVector::random(&mut r, degree, 9)).collect()
}

pub fn heisenberg_samples(count: usize) -> Vec<HeisenbergElement> {
    let mut r = rng();
    (0..count).map(|_| HeisenbergElement::random(&mut r, 4, 9)).collect()
}

/// A dense invertible rational matrix with small entries.
pub fn dense_invertible(dim: usize) -> Matrix<Rational> {
    Matrix::from_fn(dim, dim, |i, j| {
        if i == j {
            Rational::integer(dim as i64 + 1)
        } else {
            Rational::new((i as i64 - j as i64) % 3, 1 + (i + j) as i64 % 4)
        }
    })
}
