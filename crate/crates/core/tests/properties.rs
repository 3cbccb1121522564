use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use semireal::group::{coprime_residues, gcd};
use semireal::heisenberg::{gsp_x, gsp_y, Heisenberg3, HeisenbergElement, Torus};
use semireal::semidirect::{make_power_witness, make_real_witness, reduce_translation, Automorphism};
use semireal::sl2::{map, rho, SL2Element};
use semireal::{
    AffineElement, Certificate, Field, Fp, GaussianRational, GroupElement, Matrix, Rational, Relation,
    SemidirectElement, Vector,
};

type F7 = Fp<7>;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| Rational::new(n, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(a, b)| GaussianRational::new(a, b))
}

fn vector(dim: usize) -> impl Strategy<Value = Vector<Rational>> {
    prop::collection::vec(rational(), dim).prop_map(Vector::new)
}

fn invertible(dim: usize) -> impl Strategy<Value = Matrix<Rational>> {
    prop::collection::vec(-4i64..=4, dim * dim)
        .prop_map(move |e| Matrix::from_fn(dim, dim, |i, j| Rational::integer(e[i * dim + j])))
        .prop_filter("singular", Matrix::is_invertible)
}

fn affine(dim: usize) -> impl Strategy<Value = AffineElement<Rational>> {
    (invertible(dim), vector(dim)).prop_map(|(a, b)| AffineElement::new(a, b).unwrap())
}

fn affine_f7() -> impl Strategy<Value = AffineElement<F7>> {
    (prop::collection::vec(0i64..7, 6))
        .prop_map(|e| {
            AffineElement::new(
                Matrix::from_fn(2, 2, |i, j| F7::new(e[2 * i + j])),
                Vector::new(vec![F7::new(e[4]), F7::new(e[5])]),
            )
        })
        .prop_filter_map("singular", Result::ok)
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) * c.clone(), a.clone() * c.clone() + b.clone() * c.clone());
        prop_assert_eq!(a.clone() - a.clone(), Rational::zero());
        if let Some(inv) = a.inv() {
            prop_assert!((a * inv).is_one());
        } else {
            prop_assert!(a.is_zero());
        }
    }

    #[test]
    fn prime_field_inverse(v in 1i64..7) {
        let x = F7::new(v);
        let inv = x.inv().unwrap();
        prop_assert!((x * inv).is_one());
        prop_assert_eq!(x.pow(6).unwrap(), F7::one());
    }

    #[test]
    fn gaussian_multiplication_respects_norm(a in gaussian(), b in gaussian()) {
        prop_assert_eq!((a.clone() * b.clone()).norm(), a.norm() * b.norm());
        prop_assert_eq!(a.clone() * a.conj(), GaussianRational::real(a.norm()));
    }

    #[test]
    fn matrix_inverse_and_det(m in invertible(3), n in invertible(3)) {
        let inv = m.inverse().unwrap();
        prop_assert!((&m * &inv).is_identity());
        prop_assert_eq!((&m * &n).det().unwrap(), m.det().unwrap() * n.det().unwrap());
    }

    #[test]
    fn affine_group_axioms(a in affine(2), b in affine(2), c in affine(2)) {
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        // Block matrices are the oracle for the product law.
        prop_assert_eq!(a.mul(&b).to_block_matrix(), &a.to_block_matrix() * &b.to_block_matrix());
        prop_assert_eq!(AffineElement::from_block_matrix(&a.to_block_matrix()).unwrap(), a);
    }

    #[test]
    fn affine_over_f7_matches_blocks(a in affine_f7(), b in affine_f7()) {
        prop_assert_eq!(a.mul(&b).to_block_matrix(), &a.to_block_matrix() * &b.to_block_matrix());
        prop_assert!(a.pow(7 * 48).is_identity());
    }

    #[test]
    fn semidirect_is_isomorphic_to_affine(a in affine(2), b in affine(2)) {
        let (sa, sb) = (SemidirectElement::from_affine(&a), SemidirectElement::from_affine(&b));
        prop_assert_eq!(sa.mul(&sb).to_affine(), a.mul(&b));
        prop_assert_eq!(sa.inverse().to_affine(), a.inverse());
    }

    #[test]
    fn telescoped_translation_matches_powers(a in affine(2), l in 0u64..12) {
        let power = a.pow(l as i64);
        prop_assert_eq!(&a.telescoped_translation(l), power.translation());
    }

    #[test]
    fn rho_is_a_contravariant_homomorphism(seed in any::<u64>(), n in 0usize..=6) {
        let mut r = rng(seed);
        let (g, h) = (SL2Element::random(&mut r, 5), SL2Element::random(&mut r, 5));
        prop_assert_eq!(rho(&g.mul(&h), n), &rho(&h, n) * &rho(&g, n));
        prop_assert_eq!(map(&g.mul(&h), n), &map(&g, n) * &map(&h, n));
        prop_assert!(rho(&g, n).det().unwrap().is_one());
    }

    #[test]
    fn heisenberg_group_axioms(seed in any::<u64>()) {
        let mut r = rng(seed);
        let (a, b, c) = (
            HeisenbergElement::random(&mut r, 4, 6),
            HeisenbergElement::random(&mut r, 4, 6),
            HeisenbergElement::random(&mut r, 4, 6),
        );
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert!(a.mul(&a.inverse()).is_identity());
        // Similitudes act by automorphisms.
        let x = gsp_x();
        prop_assert_eq!(x.act(&a.mul(&b)), x.act(&a).mul(&x.act(&b)));
        prop_assert_eq!(gsp_y().act(&x.act(&a)), gsp_y().mul(&x).act(&a));
    }

    #[test]
    fn torus_acts_by_automorphisms(l in 1i64..6, a in rational(), b in rational(), c in rational(), d in rational()) {
        let t = Torus::<Rational>::from_i64(l).unwrap();
        let n = Heisenberg3::new(a, b, c);
        let m = Heisenberg3::new(d.clone(), -d.clone(), d);
        prop_assert_eq!(t.act(&n.mul(&m)), t.act(&n).mul(&t.act(&m)));
        prop_assert_eq!(n.mul(&m).to_matrix(), &n.to_matrix() * &m.to_matrix());
    }

    #[test]
    fn certificates_reject_wrong_witnesses(a in affine(2), w in affine(2)) {
        let conjugated = a.conjugate_by(&w);
        match Certificate::new(a.clone(), w.clone(), Relation::Inverse) {
            Ok(c) => {
                prop_assert_eq!(&conjugated, &a.inverse());
                prop_assert!(c.reverify());
            }
            Err(_) => prop_assert_ne!(conjugated, a.inverse()),
        }
    }

    #[test]
    fn negation_certificates_for_every_translation(b in vector(3)) {
        let x = -&Matrix::<Rational>::identity(3);
        let w = reduce_translation(&x, &b).unwrap();
        prop_assert_eq!((&x - &Matrix::identity(3)).mul_vec(&w), b.clone());
        prop_assert!(make_real_witness(&x, &b, &Matrix::identity(3)).unwrap().reverify());
    }

    #[test]
    fn rotation_power_certificates(b in vector(2)) {
        // Order 4 rotation; its power k = 3 is conjugate to it by a reflection.
        let x = Matrix::<Rational>::from_i64s(&[&[0, -1], &[1, 0]]);
        let h = Matrix::<Rational>::from_i64s(&[&[1, 0], &[0, -1]]);
        for k in coprime_residues(4) {
            let h_k = if k == 1 { Matrix::identity(2) } else { h.clone() };
            let cert = make_power_witness(&x, &b, &h_k, k as i64).unwrap();
            prop_assert!(cert.reverify());
        }
    }

    #[test]
    fn coprime_residues_are_units(m in 1u64..60) {
        let units = coprime_residues(m);
        prop_assert!(units.iter().all(|&k| gcd(k, m) == 1 && k < m.max(2)));
        prop_assert_eq!(units.len() as u64, (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64);
    }
}
