use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};

/// Multiplicities above this are rejected; the Apéry table has one entry per residue.
pub const MAX_MULTIPLICITY: i64 = 100_000;

#[derive(Debug, PartialEq, Eq, Hash)]
struct Inner {
    gens: Vec<i64>,
    apery: Vec<i64>,
}

/// A numerical semigroup `S ⊆ N`, stored by its minimal generators and its
/// Apéry set with respect to the multiplicity.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup(Arc<Inner>);

/// The standard invariants of a numerical semigroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemigroupInvariants {
    pub generators: Vec<i64>,
    pub multiplicity: i64,
    pub frobenius: i64,
    pub conductor: i64,
    pub genus: usize,
    pub gaps: Vec<i64>,
    pub apery: Vec<i64>,
    pub pseudo_frobenius: Vec<i64>,
    pub type_: usize,
    pub symmetric: bool,
}

impl NumericalSemigroup {
    /// The semigroup generated by `gens`, which must be positive with gcd 1.
    pub fn new(gens: &[i64]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::Invalid(
                "a numerical semigroup needs generators".into(),
            ));
        }
        if let Some(g) = gens.iter().find(|&&g| g <= 0) {
            return Err(Error::Invalid(format!("generator {g} is not positive")));
        }
        let g = gens.iter().fold(0i64, |a, &b| a.gcd(&b));
        if g != 1 {
            return Err(Error::Invalid(format!("generators have gcd {g}, not 1")));
        }
        let m = *gens.iter().min().expect("nonempty");
        if m > MAX_MULTIPLICITY {
            return Err(Error::Invalid(format!(
                "multiplicity {m} exceeds the supported maximum {MAX_MULTIPLICITY}"
            )));
        }
        let apery = apery_set(m, gens);
        let mut s = NumericalSemigroup(Arc::new(Inner {
            gens: Vec::new(),
            apery,
        }));
        let minimal = s.compute_minimal_generators();
        Arc::get_mut(&mut s.0).expect("unique").gens = minimal;
        Ok(s)
    }

    /// The semigroup `N = <1>`.
    pub fn naturals() -> Self {
        NumericalSemigroup::new(&[1]).expect("valid")
    }

    fn compute_minimal_generators(&self) -> Vec<i64> {
        let m = self.multiplicity();
        // Minimal generators other than m are Apéry elements that are not a
        // sum of a smaller nonzero Apéry element and an element of S.
        let ap: Vec<i64> = self.0.apery.iter().copied().filter(|&w| w != 0).collect();
        let mut out = vec![m];
        for &w in &ap {
            if !ap.iter().any(|&v| v < w && self.contains(w - v)) {
                out.push(w);
            }
        }
        out.sort_unstable();
        out
    }

    pub fn generators(&self) -> &[i64] {
        &self.0.gens
    }

    pub fn multiplicity(&self) -> i64 {
        self.0.apery.len() as i64
    }

    /// `Ap(S, m)`, indexed by residue modulo the multiplicity.
    pub fn apery(&self) -> &[i64] {
        &self.0.apery
    }

    pub fn contains(&self, x: i64) -> bool {
        x >= 0 && x >= self.0.apery[x.rem_euclid(self.multiplicity()) as usize]
    }

    /// Largest integer not in `S`; `-1` for `N`.
    pub fn frobenius(&self) -> i64 {
        self.0.apery.iter().max().expect("nonempty") - self.multiplicity()
    }

    pub fn conductor(&self) -> i64 {
        self.frobenius() + 1
    }

    pub fn gaps(&self) -> Vec<i64> {
        (1..=self.frobenius())
            .filter(|&x| !self.contains(x))
            .collect()
    }

    pub fn genus(&self) -> usize {
        let m = self.multiplicity();
        self.0
            .apery
            .iter()
            .enumerate()
            .map(|(r, &w)| ((w - r as i64) / m) as usize)
            .sum()
    }

    /// Integers `x ∉ S` with `x + s ∈ S` for every nonzero `s ∈ S`; `{-1}` for `N`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.frobenius() < 0 {
            return vec![-1];
        }
        self.gaps()
            .into_iter()
            .filter(|&x| self.generators().iter().all(|&g| self.contains(x + g)))
            .collect()
    }

    pub fn type_(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    /// `x ∈ S ⇔ F - x ∉ S` for all integers `x`.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        (0..=f).all(|x| self.contains(x) != self.contains(f - x))
    }

    /// Minimal generators larger than the Frobenius number; removing one of
    /// them gives a semigroup of genus one more.
    pub fn effective_generators(&self) -> Vec<i64> {
        let f = self.frobenius();
        self.generators()
            .iter()
            .copied()
            .filter(|&g| g > f)
            .collect()
    }

    /// `S \ {g}` for a minimal generator `g`.
    pub fn remove_generator(&self, g: i64) -> Result<Self> {
        if !self.generators().contains(&g) {
            return Err(Error::PreconditionViolated(format!(
                "{g} is not a minimal generator of {self}"
            )));
        }
        if g == 1 {
            return NumericalSemigroup::new(&[2, 3]);
        }
        let member = |x: i64| x != g && self.contains(x);
        let m = if g == self.multiplicity() {
            (g + 1..).find(|&x| member(x)).expect("cofinite")
        } else {
            self.multiplicity()
        };
        // Every element >= g + m + 1 is m plus an element > g, so not minimal.
        let gens: Vec<i64> = (1..=g + m)
            .filter(|&x| member(x) && !(1..x).any(|a| member(a) && member(x - a)))
            .collect();
        NumericalSemigroup::new(&gens)
    }

    /// Elements of `S` in `[lo, hi)`.
    pub fn elements_in(&self, lo: i64, hi: i64) -> impl Iterator<Item = i64> + '_ {
        (lo.max(0)..hi).filter(|&x| self.contains(x))
    }

    pub fn invariants(&self) -> SemigroupInvariants {
        let mut apery = self.0.apery.clone();
        apery.sort_unstable();
        let pf = self.pseudo_frobenius();
        SemigroupInvariants {
            generators: self.generators().to_vec(),
            multiplicity: self.multiplicity(),
            frobenius: self.frobenius(),
            conductor: self.conductor(),
            genus: self.genus(),
            gaps: self.gaps(),
            apery,
            type_: pf.len(),
            pseudo_frobenius: pf,
            symmetric: self.is_symmetric(),
        }
    }
}

/// Shortest-path Apéry set: `w[r]` is the least element of `S` congruent to `r`.
fn apery_set(m: i64, gens: &[i64]) -> Vec<i64> {
    let m_us = m as usize;
    let mut dist = vec![i64::MAX; m_us];
    dist[0] = 0;
    let mut heap = BinaryHeap::from([Reverse((0i64, 0usize))]);
    while let Some(Reverse((d, r))) = heap.pop() {
        if d > dist[r] {
            continue;
        }
        for &g in gens {
            let nr = (r + (g % m) as usize) % m_us;
            let nd = d + g;
            if nd < dist[nr] {
                dist[nr] = nd;
                heap.push(Reverse((nd, nr)));
            }
        }
    }
    dist
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators().iter().map(|g| g.to_string()).collect();
        write!(f, "<{}>", gens.join(","))
    }
}

/// Every numerical semigroup of genus at most `max_genus`, ordered by genus
/// and then by generator list.
pub fn semigroups_up_to_genus(max_genus: usize) -> Vec<NumericalSemigroup> {
    let mut levels: Vec<Vec<NumericalSemigroup>> = vec![vec![NumericalSemigroup::naturals()]];
    let mut queue = VecDeque::new();
    for _ in 0..max_genus {
        let prev = levels.last().expect("nonempty");
        queue.clear();
        for s in prev {
            for g in s.effective_generators() {
                queue.push_back(s.remove_generator(g).expect("effective generator"));
            }
        }
        let mut next: Vec<_> = queue.drain(..).collect();
        next.sort_by(|a, b| a.generators().cmp(b.generators()));
        levels.push(next);
    }
    levels.into_iter().flatten().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_invariants() {
        let s = NumericalSemigroup::new(&[2, 5]).unwrap();
        assert_eq!(
            (s.frobenius(), s.gaps(), s.type_(), s.multiplicity()),
            (3, vec![1, 3], 1, 2)
        );
        let s = NumericalSemigroup::new(&[4, 5]).unwrap();
        assert_eq!(s.gaps(), vec![1, 2, 3, 6, 7, 11]);
        assert_eq!((s.frobenius(), s.conductor(), s.genus()), (11, 12, 6));
        assert!(s.is_symmetric());
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        assert_eq!(s.pseudo_frobenius(), vec![1, 2]);
        assert_eq!(s.type_(), 2);
        assert!(!s.is_symmetric());
    }

    #[test]
    fn minimal_generators_and_membership() {
        let s = NumericalSemigroup::new(&[6, 4, 9, 10, 12]).unwrap();
        assert_eq!(s.generators(), &[4, 6, 9]);
        assert!(s.contains(0) && !s.contains(-4) && !s.contains(5) && s.contains(13));
        assert!(NumericalSemigroup::new(&[4, 6]).is_err());
        assert!(NumericalSemigroup::new(&[0, 1]).is_err());
        assert_eq!(NumericalSemigroup::naturals().frobenius(), -1);
        assert_eq!(NumericalSemigroup::naturals().type_(), 1);
    }

    #[test]
    fn remove_generator_raises_genus() {
        let s = NumericalSemigroup::new(&[3, 4, 5]).unwrap();
        let t = s.remove_generator(5).unwrap();
        assert_eq!(t.generators(), &[3, 4]);
        let t = s.remove_generator(3).unwrap();
        assert_eq!(t.generators(), &[4, 5, 6, 7]);
        assert_eq!(t.genus(), s.genus() + 1);
        assert!(s.remove_generator(6).is_err());
    }

    #[test]
    fn counts_by_genus() {
        let all = semigroups_up_to_genus(10);
        let mut counts = vec![0; 11];
        for s in &all {
            counts[s.genus()] += 1;
        }
        assert_eq!(counts, [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204]);
    }
}
