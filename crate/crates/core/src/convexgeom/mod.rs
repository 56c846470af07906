//! Convex geometry around a numerical range W: pole/polar duality, support
//! and membership queries through oracles, Kippenhahn-curve sampling, hulls,
//! and complex tangency certificates.

mod cbox;
mod hyperbolic;
mod kippenhahn;
mod lemma;
mod oracle;
mod projective;
mod report;
mod tangency;

pub use cbox::CBox;
pub use hyperbolic::{line_curve_real_check, line_poly_real_check, LineIntersection};
pub use kippenhahn::{convex_hull, hausdorff, sample_kippenhahn_curve, CloudPoint, PointCloud};
pub use lemma::{
    check_lemma_ws, lemma_ws_tally, line_meets_interior_dual, point_outside_w, DualLine, LemmaConfig, LemmaTally,
    Membership,
};
pub use oracle::{ConvexOracle, FermatOracle, PencilOracle};
pub use projective::{ProjLine, ProjPoint};
pub use report::{Check, CheckStatus, VerificationReport};
pub use tangency::{eval_cbox, tangency_check, tangency_check_with, TangencyConfig, TangencyWitness};

use crate::matrixpencil::PencilError;
use crate::mpoly::PolyError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GeomError {
    #[error("all three homogeneous coordinates are zero")]
    ZeroTriple,
    #[error("direction is zero")]
    ZeroDirection,
    #[error("empty point set")]
    EmptyInput,
    #[error("origin is not interior to W (h = {0})")]
    OriginNotInterior(f64),
    #[error("point is not strictly inside the spectrahedron (λ_min = {0})")]
    NotInterior(f64),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("could not certify: {0}")]
    Uncertified(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Pencil(#[from] PencilError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[cfg(test)]
mod tests;
