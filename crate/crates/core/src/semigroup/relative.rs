use std::fmt;

use itertools::Itertools;

use super::numerical::NumericalSemigroup;
use crate::error::{Error, Result};

/// A relative ideal `E = ∪ (g + S)` of a numerical semigroup, i.e. a monomial
/// fractional ideal of `K[[t^S]]`, stored by its minimal generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RelativeIdeal {
    semigroup: NumericalSemigroup,
    gens: Vec<i64>,
}

impl RelativeIdeal {
    /// The relative ideal generated by `gens`, minimalized. Must be nonempty.
    pub fn new(
        semigroup: &NumericalSemigroup,
        gens: impl IntoIterator<Item = i64>,
    ) -> Result<Self> {
        let mut gens: Vec<i64> = gens.into_iter().collect();
        if gens.is_empty() {
            return Err(Error::Invalid(
                "a relative ideal needs at least one generator".into(),
            ));
        }
        gens.sort_unstable();
        gens.dedup();
        let minimal: Vec<i64> = gens
            .iter()
            .copied()
            .filter(|&g| !gens.iter().any(|&h| h < g && semigroup.contains(g - h)))
            .collect();
        Ok(RelativeIdeal {
            semigroup: semigroup.clone(),
            gens: minimal,
        })
    }

    /// The principal relative ideal `a + S`.
    pub fn principal(semigroup: &NumericalSemigroup, a: i64) -> Self {
        RelativeIdeal {
            semigroup: semigroup.clone(),
            gens: vec![a],
        }
    }

    /// The maximal ideal `S \ {0}`.
    pub fn maximal(semigroup: &NumericalSemigroup) -> Self {
        RelativeIdeal {
            semigroup: semigroup.clone(),
            gens: semigroup.generators().to_vec(),
        }
    }

    /// The relative ideal of the integers in `[lo, ∞)` satisfying `member`.
    /// `member` must describe a set closed under adding elements of `S` that
    /// contains every integer `>= full_from`.
    pub fn from_predicate(
        semigroup: &NumericalSemigroup,
        lo: i64,
        full_from: i64,
        member: impl Fn(i64) -> bool,
    ) -> Result<Self> {
        let max_gen = *semigroup.generators().last().expect("nonempty");
        let hi = full_from.max(lo) + max_gen;
        let gens = (lo..=hi).filter(|&x| {
            member(x)
                && semigroup
                    .generators()
                    .iter()
                    .all(|&n| x - n < lo || !member(x - n))
        });
        RelativeIdeal::new(semigroup, gens)
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn gens(&self) -> &[i64] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn min(&self) -> i64 {
        self.gens[0]
    }

    pub fn contains(&self, x: i64) -> bool {
        self.gens.iter().any(|&g| self.semigroup.contains(x - g))
    }

    /// Smallest `t` with `[t, ∞) ⊆ E`.
    pub fn tail_start(&self) -> i64 {
        let mut t = self.min() + self.semigroup.conductor();
        while t > self.min() && self.contains(t - 1) {
            t -= 1;
        }
        t
    }

    pub fn is_principal(&self) -> bool {
        self.gens.len() == 1
    }

    /// `E ⊆ S`, so that `E` is an honest ideal of the ring.
    pub fn is_integral(&self) -> bool {
        self.gens.iter().all(|&g| self.semigroup.contains(g))
    }

    /// `E = S`, the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.gens == [0]
    }

    pub fn is_subset_of(&self, other: &RelativeIdeal) -> bool {
        self.gens.iter().all(|&g| other.contains(g))
    }

    fn same_semigroup(&self, other: &RelativeIdeal) -> Result<()> {
        if self.semigroup != other.semigroup {
            return Err(Error::PreconditionViolated(format!(
                "relative ideals over {} and {}",
                self.semigroup, other.semigroup
            )));
        }
        Ok(())
    }

    pub fn shift(&self, a: i64) -> RelativeIdeal {
        RelativeIdeal {
            semigroup: self.semigroup.clone(),
            gens: self.gens.iter().map(|g| g + a).collect(),
        }
    }

    pub fn product(&self, other: &RelativeIdeal) -> Result<RelativeIdeal> {
        self.same_semigroup(other)?;
        RelativeIdeal::new(
            &self.semigroup,
            self.gens
                .iter()
                .cartesian_product(&other.gens)
                .map(|(a, b)| a + b),
        )
    }

    pub fn power(&self, k: u32) -> RelativeIdeal {
        (0..k).fold(RelativeIdeal::principal(&self.semigroup, 0), |acc, _| {
            acc.product(self).expect("same semigroup")
        })
    }

    pub fn sum(&self, other: &RelativeIdeal) -> Result<RelativeIdeal> {
        self.same_semigroup(other)?;
        RelativeIdeal::new(
            &self.semigroup,
            self.gens.iter().chain(&other.gens).copied(),
        )
    }

    pub fn intersection(&self, other: &RelativeIdeal) -> Result<RelativeIdeal> {
        self.same_semigroup(other)?;
        RelativeIdeal::from_predicate(
            &self.semigroup,
            self.min().max(other.min()),
            self.tail_start().max(other.tail_start()),
            |x| self.contains(x) && other.contains(x),
        )
    }

    /// `(E : F) = {z : z + F ⊆ E}`.
    pub fn colon(&self, other: &RelativeIdeal) -> Result<RelativeIdeal> {
        self.same_semigroup(other)?;
        let lo = self.min() - other.min();
        let full = self.tail_start() - other.min();
        RelativeIdeal::from_predicate(&self.semigroup, lo, full, |z| {
            other.gens.iter().all(|&f| self.contains(z + f))
        })
    }

    /// `E^{-1} = (S : E)`.
    pub fn inverse(&self) -> RelativeIdeal {
        RelativeIdeal::principal(&self.semigroup, 0)
            .colon(self)
            .expect("same semigroup")
    }

    /// `tr(E) = E^{-1} E`.
    pub fn trace(&self) -> RelativeIdeal {
        self.inverse().product(self).expect("same semigroup")
    }

    /// `a` with `self = a + other`, if there is one.
    pub fn equal_up_to_shift(&self, other: &RelativeIdeal) -> Option<i64> {
        if self.semigroup != other.semigroup || self.gens.len() != other.gens.len() {
            return None;
        }
        let a = self.min() - other.min();
        self.gens
            .iter()
            .zip(&other.gens)
            .all(|(x, y)| x - y == a)
            .then_some(a)
    }

    /// The smallest shift `a >= 0` with `a + E ⊆ S`.
    pub fn integral_shift(&self) -> i64 {
        (0..)
            .find(|&a| self.gens.iter().all(|&g| self.semigroup.contains(g + a)))
            .expect("shifting past the conductor always works")
    }
}

/// The canonical ideal `{z : F - z ∉ S}`; its minimal generator is `0`.
pub fn canonical_ideal(s: &NumericalSemigroup) -> RelativeIdeal {
    let f = s.frobenius();
    RelativeIdeal::from_predicate(s, 0, f + 1, |z| !s.contains(f - z)).expect("nonempty")
}

impl fmt::Display for RelativeIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.gens.iter().join(", "))
    }
}
