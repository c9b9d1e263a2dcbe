use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Monomial;

/// Multivariate polynomial with arbitrary-precision integer coefficients.
///
/// Terms are kept in a map keyed by monomial (graded-lex order), and a zero
/// coefficient is never stored, so the zero polynomial is the empty map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::term(BigInt::one(), Monomial::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Polynomial::term(c.into(), Monomial::one())
    }

    pub fn term(coeff: impl Into<BigInt>, mono: Monomial) -> Self {
        let coeff = coeff.into();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        Polynomial { terms }
    }

    pub fn monomial(mono: Monomial) -> Self {
        Polynomial::term(BigInt::one(), mono)
    }

    /// Collects like monomials and drops zero coefficients.
    pub fn normalize<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (C, Monomial)>,
        C: Into<BigInt>,
    {
        let mut out = Polynomial::zero();
        for (c, m) in terms {
            out.add_term(c.into(), m);
        }
        out
    }

    fn add_term(&mut self, c: BigInt, m: Monomial) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys().rev()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.iter().next_back()
    }

    /// The single term of a one-term polynomial.
    pub fn as_term(&self) -> Option<(&Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn scale_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.leading_term()?;
        let mut rem = self.clone();
        let mut quot = Polynomial::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let qm = rm.checked_div(lm)?;
            let (qc, r) = rc.div_rem(lc);
            if !r.is_zero() {
                return None;
            }
            let step = Polynomial::term(qc, qm);
            rem = &rem - &(&step * divisor);
            quot = &quot + &step;
        }
        Some(quot)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&abs.to_string());
                    out.push('*');
                }
                out.push_str(&m.format_with(names));
            }
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ca * cb, ma.mul(mb));
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(&[]))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn normalize_cancels_and_collects() {
        let xy = m(&[1, 1]);
        assert!(Polynomial::normalize([(1, xy.clone()), (-1, xy)]).is_zero());
        let p = Polynomial::normalize([(2, m(&[1])), (3, m(&[1]))]);
        assert_eq!(p, Polynomial::term(5, m(&[1])));
    }

    #[test]
    fn canonical_term_order() {
        let p = Polynomial::normalize([(1, m(&[0, 0, 1])), (1, m(&[2, 1]))]);
        assert_eq!(p.to_string(), "x1^2*x2 + x3");
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let q = Polynomial::normalize([(-3, m(&[0, 0, 1])), (2, m(&[2, 1]))]);
        assert_eq!(q.format_with(&names), "2*x^2*y - 3*z");
    }

    #[test]
    fn ring_laws_on_a_sample() {
        let a = Polynomial::normalize([(1, m(&[1])), (-2, m(&[0, 1]))]);
        let b = Polynomial::normalize([(3, m(&[1, 1])), (1, Monomial::one())]);
        let c = Polynomial::normalize([(1, m(&[0, 0, 2])), (5, m(&[1]))]);
        assert_eq!(&a * &b, &b * &a);
        assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        assert!((&a - &a).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = Polynomial::normalize([(1, m(&[1])), (-2, m(&[0, 1]))]);
        let b = Polynomial::normalize([(3, m(&[1, 1])), (1, Monomial::one())]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a));
        assert_eq!(b.div_exact(&Polynomial::monomial(m(&[1]))), None);
    }
}
