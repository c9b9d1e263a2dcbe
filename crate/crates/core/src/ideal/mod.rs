//! Monomial ideals of a polynomial ring over the rationals.

mod betti;
mod monomial_ideal;
mod ring;

pub use betti::{betti_table, BettiTable};
pub use monomial_ideal::{minimal_transversals, MonomialIdeal};
pub use ring::PolynomialRing;
