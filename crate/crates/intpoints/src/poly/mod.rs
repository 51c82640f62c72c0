//! Exact polynomial arithmetic: dense univariate polynomials over the
//! rationals and a sparse multivariate ring used by the symbolic coefficient
//! systems.

mod dense;
mod multi;
mod parse;

pub use dense::RationalPoly;
pub use multi::{
    pseudo_remainder_symbolic, symbolic_remainder, Monomial, MultiPoly, SymbolicCoeff, Var,
};
pub use parse::{parse_multi_poly, parse_rational_poly};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("not divisible; remainder {remainder}")]
    NotDivisible { remainder: Box<RationalPoly> },
    #[error("no value assigned to variable {0}")]
    MissingVariable(Var),
    #[error("unsupported divisor: {0}")]
    UnsupportedDivisor(String),
    #[error("expected a univariate polynomial in t, found {0}")]
    NotUnivariate(Var),
    #[error("parse error at byte {at}: {msg}")]
    Parse { msg: String, at: usize },
}
