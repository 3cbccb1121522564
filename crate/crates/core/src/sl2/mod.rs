//! The symmetric-power representation of SL(2, ℚ) on binary forms of
//! degree `n` and the reality classifier for `SL(2) ⋉ Vₙ`.
//!
//! `rho` is the substitution `p(x, y) ↦ p(ax + by, cx + dy)`, which reverses
//! products. The semidirect product uses [`map`], the homomorphism obtained
//! by precomposing with inversion when needed.

mod classify;
mod element;
mod rho;

use thiserror::Error;

use crate::group::CertificateError;
use crate::semidirect::SemidirectError;

pub use classify::{
    antidiagonal_witness, classify_rational_sl2v, classify_real, classify_real_with, negation_witness_search,
    sl2v_order, ElementOrder, NotRealReason, RationalityVerdict, RealityResult, SearchFamilies,
};
pub use element::{PolyVector, SL2Element, Sl2VElement};
pub use rho::{detect_handedness, handedness, map, rho, Handedness};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Sl2Error {
    #[error("determinant is {0}, expected 1")]
    NotSpecialLinear(String),
    #[error("scalar must be nonzero")]
    ZeroScalar,
    #[error("t must be nonzero")]
    ZeroT,
    #[error("x must be diagonal; conjugate it to diag(r, 1/r) first")]
    NotDiagonal,
    #[error("a form needs at least one coefficient")]
    EmptyForm,
    #[error(transparent)]
    Semidirect(#[from] SemidirectError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}
