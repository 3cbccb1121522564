//! Abelian-by-nilpotent examples: GSp(4) acting on the five-dimensional
//! Heisenberg group, the torus on the three-dimensional Heisenberg group,
//! the circle acting on ℚ², and checks that hold in any `A ⋉ N` with `A`
//! abelian.

mod h3;
mod h5;
mod rotation;
mod solvable;

use thiserror::Error;

use crate::arith::ArithError;
use crate::group::CertificateError;
use crate::semidirect::SemidirectError;

pub use h3::{
    complex_heisenberg_reality, lambda_grid, random_complex_heisenberg, ComplexHeisenbergElement,
    Heisenberg3, Heisenberg3Presentation, HeisenbergVerdict, LambdaCase, Torus, TorusHeisenberg,
};
pub use h5::{
    demo_gsp_heisenberg, gsp_act, gsp_x, gsp_y, heisenberg_presentation, omega, symplectic_form, GSpElement,
    HeisenbergElement, HeisenbergPresentation,
};
pub use rotation::{five_by_five, CircleAffine, CirclePoint};
pub use solvable::{
    check_center_rigidity, check_square_law, check_strong_reality, vector_reality_witness, CenterRigidityReport,
    RotationInstance, ScalarInstance, SolvableInstance, SquareLawReport, StrongRealityReport, TorusHeisenbergInstance,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolvableError {
    #[error("not a symplectic similitude: {0}")]
    NotSimilitude(String),
    #[error("hypothesis not met: {0}")]
    Precondition(String),
    #[error("theorem violated: {0}")]
    TheoremViolation(String),
    #[error("internal consistency error: {0}")]
    Internal(String),
    #[error(transparent)]
    Semidirect(#[from] SemidirectError),
    #[error(transparent)]
    Certificate(#[from] CertificateError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
