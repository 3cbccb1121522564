//! Group-element contract, certificates, finite-group enumeration and the
//! brute-force reality/rationality oracle.

mod certificate;
mod finite;

use std::fmt::Debug;
use std::hash::Hash;

use crate::arith::{Field, Matrix, Vector};

pub use certificate::{Certificate, CertificateError, Relation};
pub use finite::{
    conjugacy_classes, generate_closure, is_rational_bruteforce, is_real_bruteforce,
    rational_classes, search_witness, FiniteGroup, GroupError,
};

/// Default iteration bound for [`element_order`].
pub const DEFAULT_ORDER_BOUND: u64 = 10_000;

/// An element of some group. `identity_like` returns the identity of the
/// group `self` lives in, so groups whose identity depends on a dimension
/// need no extra context.
pub trait GroupElement: Clone + Eq + Hash + Debug + Send + Sync {
    fn mul(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
    fn identity_like(&self) -> Self;

    fn is_identity(&self) -> bool {
        *self == self.identity_like()
    }

    /// `self^k` by repeated squaring; negative `k` uses the inverse.
    fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity_like();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        acc
    }

    /// `g · self · g⁻¹`.
    fn conjugate_by(&self, g: &Self) -> Self {
        g.mul(self).mul(&g.inverse())
    }
}

/// Order of an element as found by iterated multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrderResult {
    Finite(u64),
    /// No `k ≤ bound` had `g^k = e`.
    ExceedsBound(u64),
}

impl OrderResult {
    pub fn finite(self) -> Option<u64> {
        match self {
            OrderResult::Finite(m) => Some(m),
            OrderResult::ExceedsBound(_) => None,
        }
    }
}

/// Smallest `m ≤ bound` with `g^m = e`. Plain iterated multiplication, no
/// eigenvalue shortcuts.
pub fn element_order<G: GroupElement>(g: &G, bound: u64) -> OrderResult {
    assert!(bound >= 1, "order bound must be at least 1");
    let mut acc = g.clone();
    for m in 1..=bound {
        if acc.is_identity() {
            return OrderResult::Finite(m);
        }
        acc = acc.mul(g);
    }
    OrderResult::ExceedsBound(bound)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

/// Exponents `k ∈ [1, m)` coprime to `m`; `{1}` when `m = 1`.
pub fn coprime_residues(m: u64) -> Vec<u64> {
    if m <= 1 {
        return vec![1];
    }
    (1..m).filter(|&k| gcd(k, m) == 1).collect()
}

/// Invertible matrices under multiplication. Inverting a singular matrix
/// panics: callers only put invertible matrices into groups.
impl<F: Field> GroupElement for Matrix<F> {
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }

    fn inverse(&self) -> Self {
        Matrix::inverse(self).expect("group element must be an invertible matrix")
    }

    fn identity_like(&self) -> Self {
        Matrix::identity(self.rows())
    }

    fn is_identity(&self) -> bool {
        Matrix::is_identity(self)
    }
}

/// Vectors under addition.
impl<F: Field> GroupElement for Vector<F> {
    fn mul(&self, rhs: &Self) -> Self {
        self + rhs
    }

    fn inverse(&self) -> Self {
        -self
    }

    fn identity_like(&self) -> Self {
        Vector::zeros(self.dim())
    }

    fn is_identity(&self) -> bool {
        self.is_zero()
    }
}
