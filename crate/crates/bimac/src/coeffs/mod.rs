//! Exact coefficient arithmetic: integer polynomials in the parameters
//! `q, t, a` (the Jack parameter α) and `u`, and their reduced quotients.

mod gcd;
mod parse;
mod poly;
mod ratfunc;

pub use gcd::gcd;
pub use poly::{Mono, Poly, Var, NVARS};
pub use ratfunc::{one_minus, RatFunc};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole: {0}")]
    Pole(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Shorthand used throughout the crate and its tests.
pub fn rf(s: &str) -> RatFunc {
    RatFunc::parse(s).unwrap_or_else(|e| panic!("invalid rational function {:?}: {}", s, e))
}
