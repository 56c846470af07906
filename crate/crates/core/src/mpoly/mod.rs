//! Sparse multivariate polynomials over the rationals.

mod gcd;
mod monomial;
mod poly;
mod text;

pub use gcd::{content_in, poly_gcd, squarefree_part};
pub use monomial::{Monomial, MonomialOrder, OrderKey, MAX_VARS};
pub use poly::{MultiPoly, Ring};
pub use text::{parse_auto, parse_poly, ParseError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("variable lists differ: [{left}] vs [{right}]")]
    RingMismatch { left: String, right: String },
    #[error("unsupported variable count {0}")]
    VariableCount(usize),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("restriction direction is zero")]
    ZeroDirection,
    #[error("polynomial involves variables other than {0}")]
    NotUnivariate(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}
