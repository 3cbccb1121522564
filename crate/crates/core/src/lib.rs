//! Exact conjugation certificates for real and rational elements of
//! semidirect products `H ⋉ N`.
//!
//! An element `g` is *real* when it is conjugate to `g⁻¹`, and *rational*
//! when it is conjugate to every `g^k` generating the same cyclic subgroup.
//! When `x ∈ H` acts on every central-series quotient of `N` without a
//! nonzero fixed vector, a witness for `x` in `H` lifts to a witness for
//! every `x·n` in `H ⋉ N`. This crate builds those lifted witnesses with
//! exact arithmetic and re-checks each one by multiplication.
//!
//! Modules:
//! - [`arith`]: ℚ, ℚ(i), 𝔽_p and dense exact linear algebra.
//! - [`group`]: group-element contract, certificates, brute-force oracle.
//! - [`semidirect`]: affine groups, semidirect products, the lifting algorithm.
//! - [`sl2`]: symmetric powers of SL(2) and the classifier for SL(2) ⋉ Vₙ.
//! - [`affine_rational`]: rationality certificates in GL(n) ⋉ ℚⁿ.
//! - [`heisenberg`]: GSp(4) ⋉ H₅ and the solvable-group checks.

pub mod affine_rational;
pub mod arith;
pub mod group;
pub mod heisenberg;
pub mod semidirect;
pub mod sl2;

pub use arith::{Field, Fp, GaussianRational, Matrix, Rational, Vector, F2, F3};
pub use group::{Certificate, GroupElement, OrderResult, Relation};
pub use semidirect::{AffineElement, SemidirectElement};
