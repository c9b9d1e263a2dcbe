use std::collections::HashSet;
use std::fmt;

use super::PolynomialRing;
use crate::algebra::Monomial;

/// A monomial ideal, held as its canonical minimal generating set.
///
/// No generator divides another, generators are sorted by
/// [`Monomial::generator_cmp`], the unit ideal is `(1)` and the zero ideal has
/// no generators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    ring: PolynomialRing,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes an arbitrary family of monomials into a canonical ideal.
    pub fn new<I: IntoIterator<Item = Monomial>>(ring: &PolynomialRing, monomials: I) -> Self {
        let mut all: Vec<Monomial> = monomials.into_iter().collect();
        for m in &all {
            assert!(
                m.num_vars_used() <= ring.nvars(),
                "monomial {m} uses variables outside {ring:?}"
            );
        }
        all.sort_by(Monomial::generator_cmp);
        all.dedup();
        let mut gens: Vec<Monomial> = Vec::with_capacity(all.len());
        // Sorted by degree, so only earlier monomials can divide later ones.
        for m in all {
            if !gens.iter().any(|g| g.divides(&m)) {
                gens.push(m);
            }
        }
        MonomialIdeal {
            ring: ring.clone(),
            gens,
        }
    }

    pub fn zero(ring: &PolynomialRing) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: Vec::new(),
        }
    }

    pub fn unit(ring: &PolynomialRing) -> Self {
        MonomialIdeal {
            ring: ring.clone(),
            gens: vec![Monomial::one()],
        }
    }

    /// The ideal generated by all variables.
    pub fn maximal(ring: &PolynomialRing) -> Self {
        MonomialIdeal::new(ring, (0..ring.nvars()).map(Monomial::var))
    }

    /// The prime `(x_i : i in mask)`.
    pub fn prime(ring: &PolynomialRing, mask: u64) -> Self {
        MonomialIdeal::new(
            ring,
            (0..ring.nvars())
                .filter(|&i| mask & (1u64 << i) != 0)
                .map(Monomial::var),
        )
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    /// Minimal number of generators, `μ(I)`.
    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn same_ring(&self, other: &MonomialIdeal) {
        assert_eq!(self.ring, other.ring, "ideals live in different rings");
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// `self ⊆ other`.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> bool {
        self.same_ring(other);
        self.gens.iter().all(|g| other.contains(g))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_ring(other);
        MonomialIdeal::new(&self.ring, self.gens.iter().chain(&other.gens).cloned())
    }

    pub fn product(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_ring(other);
        MonomialIdeal::new(
            &self.ring,
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| a.mul(b))),
        )
    }

    pub fn power(&self, k: u32) -> MonomialIdeal {
        let mut acc = MonomialIdeal::unit(&self.ring);
        for _ in 0..k {
            acc = acc.product(self);
        }
        acc
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_ring(other);
        MonomialIdeal::new(
            &self.ring,
            self.gens
                .iter()
                .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b))),
        )
    }

    /// `(self : other)`.
    pub fn colon(&self, other: &MonomialIdeal) -> MonomialIdeal {
        self.same_ring(other);
        let mut acc = MonomialIdeal::unit(&self.ring);
        for v in &other.gens {
            let quotient = MonomialIdeal::new(
                &self.ring,
                self.gens
                    .iter()
                    .map(|u| u.checked_div(&u.gcd(v)).expect("gcd divides")),
            );
            acc = acc.intersection(&quotient);
        }
        acc
    }

    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::new(&self.ring, self.gens.iter().map(Monomial::squarefree_part))
    }

    pub fn is_squarefree(&self) -> bool {
        self.gens.iter().all(Monomial::is_squarefree)
    }

    /// Minimal primes, each given as the bitmask of the variables generating
    /// it: the minimal transversals of the generator supports.
    ///
    /// The unit ideal has none; the zero ideal has the zero prime (mask 0).
    pub fn minimal_primes(&self) -> Vec<u64> {
        if self.is_unit() {
            return Vec::new();
        }
        let edges: Vec<u64> = self
            .radical()
            .gens
            .iter()
            .map(Monomial::support_mask)
            .collect();
        minimal_transversals(&edges)
    }

    /// Height, or `None` for the unit ideal.
    pub fn height(&self) -> Option<usize> {
        self.minimal_primes()
            .iter()
            .map(|p| p.count_ones() as usize)
            .min()
    }

    /// Grade equals height in a Cohen-Macaulay ambient ring.
    pub fn grade(&self) -> Option<usize> {
        self.height()
    }

    pub fn height_and_grade(&self) -> Option<(usize, usize)> {
        self.height().map(|h| (h, h))
    }

    /// All minimal primes have the same height. Meaningful for radical
    /// ideals, where associated and minimal primes coincide.
    pub fn is_unmixed(&self) -> bool {
        let primes = self.minimal_primes();
        primes
            .first()
            .is_none_or(|p| primes.iter().all(|q| q.count_ones() == p.count_ones()))
    }

    /// Sets every variable outside `keep` to 1.
    pub fn localize(&self, keep: u64) -> MonomialIdeal {
        MonomialIdeal::new(
            &self.ring,
            self.gens
                .iter()
                .map(|g| g.restrict(|v| keep & (1u64 << v) != 0)),
        )
    }

    /// Minimal generators with pairwise disjoint supports.
    pub fn is_regular_sequence(&self) -> bool {
        if self.is_unit() {
            return false;
        }
        let mut seen = 0u64;
        for g in &self.gens {
            let s = g.support_mask();
            if s & seen != 0 {
                return false;
            }
            seen |= s;
        }
        true
    }

    /// Least common multiples of all nonempty subsets of generators, plus `1`.
    pub fn lcm_lattice(&self, limit: u64) -> Option<Vec<Monomial>> {
        let mut seen: HashSet<Monomial> = HashSet::new();
        seen.insert(Monomial::one());
        let mut order = vec![Monomial::one()];
        for g in &self.gens {
            let current = order.clone();
            for l in current {
                let next = l.lcm(g);
                if seen.insert(next.clone()) {
                    order.push(next);
                    if order.len() as u64 > limit {
                        return None;
                    }
                }
            }
        }
        order.sort();
        Some(order)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        m.format_with(self.ring.names())
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens.iter().map(|g| self.format_monomial(g)).collect()
    }
}

/// Minimal transversals of a hypergraph whose edges are variable bitmasks.
pub fn minimal_transversals(edges: &[u64]) -> Vec<u64> {
    let mut trs: Vec<u64> = vec![0];
    for &e in edges {
        let mut next = Vec::with_capacity(trs.len() * 2);
        for &t in &trs {
            if t & e != 0 {
                next.push(t);
            } else {
                let mut bits = e;
                while bits != 0 {
                    let v = bits.trailing_zeros();
                    next.push(t | (1u64 << v));
                    bits &= bits - 1;
                }
            }
        }
        trs = minimize_sets(next);
    }
    trs.sort_unstable_by_key(|&t| (t.count_ones(), std::cmp::Reverse(t.reverse_bits())));
    trs
}

/// Drops every set that contains another.
fn minimize_sets(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|&s| (s.count_ones(), s));
    sets.dedup();
    let mut out: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !out.iter().any(|&k| k & s == k) {
            out.push(s);
        }
    }
    out
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("(0)");
        }
        write!(f, "({})", self.generator_strings().join(", "))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
