//! Semidirect products `H ⋉ V` and `H ⋉ N`: affine elements, the
//! fixed-point-free conjugator for vector groups, and its lift down a
//! central series.

mod affine;
mod lift;
mod presentation;
mod product;
mod prop;

use thiserror::Error;

use crate::arith::ArithError;
use crate::group::{CertificateError, Relation};

pub use affine::AffineElement;
pub use lift::{
    check_fixed_point_free, lift_central_series, rational_witness_via_lift, real_witness_via_lift,
    LiftedElement,
};
pub use presentation::{
    check_presentation, CentralSeriesPresentation, GradedVectorPresentation, VectorPresentation,
};
pub use product::{Automorphism, SemidirectElement, VectorSemidirect};
pub use prop::{make_power_witness, make_real_witness, reduce_translation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemidirectError {
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("action has a nonzero fixed point on level {level}; kernel basis {kernel:?}")]
    FixedPoint { level: usize, kernel: Vec<String> },
    #[error("supplied element does not satisfy {0} in the acting group")]
    NotAWitness(Relation),
    #[error("residual failed to descend below level {level}")]
    DescentFailed { level: usize },
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl SemidirectError {
    pub(crate) fn at_level(self, level: usize) -> Self {
        match self {
            SemidirectError::FixedPoint { kernel, .. } => SemidirectError::FixedPoint { level, kernel },
            other => other,
        }
    }
}
