//! Fitting ideals of monomial ideals.
//!
//! The crate computes `Fitt_j(I)` exactly for monomial ideals of polynomial
//! rings and of numerical semigroup rings, and cross-checks the structural
//! statements about them (containments, radicals, the Hilbert-Burch
//! converse, edge-ideal formulas) against brute-force minor enumeration.

pub mod algebra;
mod error;
pub mod fitting;
pub mod format;
pub mod graph;
pub mod ideal;
pub mod semigroup;
pub mod suites;

pub use algebra::{Monomial, PolyMatrix, Polynomial};
pub use error::{binomial, Budget, Error, Result};
pub use fitting::{fitting_ideal, FittingReport};
pub use ideal::{MonomialIdeal, PolynomialRing};
