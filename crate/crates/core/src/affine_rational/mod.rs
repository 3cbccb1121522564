//! Rationality of affine elements `(x, v) ∈ GL(n) ⋉ Fⁿ` for `x` of finite
//! order, via the splitting `Fⁿ = ker(x − I) ⊕ im(x − I)`.

mod classify;
mod linear;
mod splitting;

use thiserror::Error;

use crate::arith::ArithError;
use crate::group::CertificateError;
use crate::semidirect::SemidirectError;

pub use classify::{
    classify_affine_rational, AffineRationality, AffineReality, InfiniteOrderReport, RationalityCertificateSet,
};
pub use linear::{intertwiner_basis, rationality_certificates_linear, SELECTION_ATTEMPTS, SELECTION_SEED};
pub use splitting::{extract_block_certificate, split_at_eigenvalue_one, EigenOneSplitting};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AffineRationalError {
    #[error("x^{m} is not the identity")]
    NotFiniteOrder { m: u64 },
    #[error("x is not conjugate to x^{k}")]
    NotRational { k: u64 },
    #[error("no invertible conjugator to x^{k} found in {attempts} attempts")]
    Inconclusive { k: u64, attempts: usize },
    #[error("splitting at eigenvalue one failed: {0}")]
    Splitting(String),
    #[error("mixing blocks of the conjugator are nonzero at {entries:?}")]
    BlockStructure { entries: Vec<(usize, usize, String)> },
    #[error("supplied conjugator for k = {k} does not satisfy g x g^-1 = x^k")]
    RejectedCertificate { k: u64 },
    #[error("no linear certificate supplied for k = {k}")]
    MissingCertificate { k: u64 },
    #[error("a nonzero fixed-vector component only forces infinite order in characteristic zero")]
    UnsupportedCharacteristic,
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Semidirect(#[from] SemidirectError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
}
