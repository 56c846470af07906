//! Exact scalars: rationals, Gaussian rationals, rational intervals and
//! real algebraic numbers given by an isolating interval.

mod algebraic;
mod gaussian;
mod interval;
mod rational;

pub use algebraic::AlgebraicReal;
pub use gaussian::GaussianRational;
pub use interval::RationalInterval;
pub use rational::{
    algebraic_refine, format_rational, parse_rational, rat, rational_arith, simplest_between,
    ArithOp, BigRational,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
    #[error("interval lower bound {lo} exceeds upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("interval contains {0} roots of the polynomial, expected exactly one")]
    RootCount(usize),
}
