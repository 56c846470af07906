//! Exact univariate real-root isolation and bivariate real singular points.

mod resultant;
mod singular;
mod sturm;
mod unipoly;

pub use resultant::{bareiss_det, resultant, sylvester_resultant};
pub use singular::{
    real_singular_points, real_singular_points_with, Chart, SingularConfig, SingularPoint,
};
pub use sturm::{roots_all_real, sturm_isolate, IsolatedRoot, SturmChain};
pub use unipoly::UniPoly;

use crate::mpoly::PolyError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealRootsError {
    #[error("input polynomial is zero")]
    ZeroInput,
    #[error("inputs involve more than two variables")]
    NotBivariate,
    #[error("curve polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("curve polynomial is not squarefree")]
    NotSquarefree,
    #[error("degenerate system: {0}")]
    Degenerate(String),
    #[error("precision exhausted; unresolved box {0}")]
    PrecisionExhausted(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
