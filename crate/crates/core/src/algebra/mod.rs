//! Exact scalars, ε-complex numbers, multivariate polynomials and
//! polynomial matrices.

mod eps;
mod matrix;
mod parse;
mod poly;
mod rational;

pub use eps::{EpsComplex, Epsilon};
pub use matrix::PolyMatrix;
pub(crate) use parse::{is_ident_char, is_ident_start};
pub use poly::{Monomial, Poly, Vars};
pub use rational::{format_rational, int, parse_rational, rat, Rational};
