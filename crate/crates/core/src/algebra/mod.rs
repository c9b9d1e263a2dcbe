//! Exact arithmetic: monomials, integer polynomials, sparse polynomial
//! matrices and their determinants.

mod matrix;
mod monomial;
mod parse;
mod polynomial;
mod rank;

pub use matrix::PolyMatrix;
pub use monomial::Monomial;
pub use parse::{parse_monomial, parse_polynomial};
pub use polynomial::Polynomial;
pub use rank::{det_i64, is_nonsingular_i64, rational_rank, small_rank};
