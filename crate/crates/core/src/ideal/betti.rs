use std::collections::BTreeMap;

use super::MonomialIdeal;
use crate::algebra::{small_rank, Monomial};
use crate::error::{Budget, Error, Result};

/// Multigraded Betti numbers of `S/I` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable {
    /// `(i, a) -> β_{i,a}(S/I)`, nonzero entries only.
    pub entries: BTreeMap<(usize, Monomial), usize>,
}

impl BettiTable {
    /// Projective dimension of `S/I`.
    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Total Betti number `β_i = Σ_a β_{i,a}`.
    pub fn total(&self, i: usize) -> usize {
        self.entries
            .iter()
            .filter(|((k, _), _)| *k == i)
            .map(|(_, &b)| b)
            .sum()
    }
}

/// Computes the multigraded Betti table of `S/I` from the Koszul complex
/// strands `K(x; S/I)_a`, one strand for each `a` in the lcm lattice of the
/// generators.
pub fn betti_table(ideal: &MonomialIdeal, budget: &Budget) -> Result<BettiTable> {
    if ideal.is_zero() || ideal.is_unit() {
        return Err(Error::PreconditionViolated(
            "Betti numbers need a proper nonzero ideal".into(),
        ));
    }
    let degrees = ideal
        .lcm_lattice(budget.max_search)
        .ok_or_else(|| Error::BudgetExceeded {
            what: "lcm-lattice multidegrees".into(),
            needed: budget.max_search.saturating_add(1),
            budget: budget.max_search,
        })?;
    let mut entries = BTreeMap::new();
    for a in degrees {
        for (i, b) in strand_homology(ideal, &a).into_iter().enumerate() {
            if b > 0 {
                entries.insert((i, a.clone()), b);
            }
        }
    }
    Ok(BettiTable { entries })
}

/// Ranks of `H_i(K(x; S/I)_a)` for `i = 0..=|supp a|`.
fn strand_homology(ideal: &MonomialIdeal, a: &Monomial) -> Vec<usize> {
    let vars: Vec<usize> = a.support().collect();
    let k = vars.len();
    // Basis of C_i: subsets F of supp(a) (bitmask over `vars`) with
    // x^{a - e_F} not in I.
    let mut basis: Vec<Vec<u32>> = vec![Vec::new(); k + 1];
    for f in 0u32..(1u32 << k) {
        let shifted = a
            .checked_div(&Monomial::from_pairs(
                (0..k).filter(|&b| f & (1 << b) != 0).map(|b| (vars[b], 1)),
            ))
            .expect("F lies in the support of a");
        if !ideal.contains(&shifted) {
            basis[f.count_ones() as usize].push(f);
        }
    }
    // rank of ∂_i : C_i -> C_{i-1}
    let mut ranks = vec![0usize; k + 2];
    for i in 1..=k {
        if basis[i].is_empty() || basis[i - 1].is_empty() {
            continue;
        }
        let index: BTreeMap<u32, usize> = basis[i - 1]
            .iter()
            .enumerate()
            .map(|(n, &f)| (f, n))
            .collect();
        let rows: Vec<Vec<i64>> = basis[i]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; basis[i - 1].len()];
                let mut pos = 0;
                for b in 0..k {
                    if f & (1 << b) == 0 {
                        continue;
                    }
                    if let Some(&col) = index.get(&(f & !(1 << b))) {
                        row[col] = if pos % 2 == 0 { 1 } else { -1 };
                    }
                    pos += 1;
                }
                row
            })
            .collect();
        ranks[i] = small_rank(&rows);
    }
    (0..=k)
        .map(|i| basis[i].len() - ranks[i] - ranks[i + 1])
        .collect()
}

impl MonomialIdeal {
    pub fn betti_table(&self, budget: &Budget) -> Result<BettiTable> {
        betti_table(self, budget)
    }

    /// Projective dimension of `S/I`.
    pub fn projective_dimension(&self, budget: &Budget) -> Result<usize> {
        Ok(self.betti_table(budget)?.projective_dimension())
    }

    /// `S/I` is Cohen-Macaulay: `pd(S/I) = height(I)`.
    pub fn is_cohen_macaulay(&self, budget: &Budget) -> Result<bool> {
        let h = self.height().expect("proper ideal");
        Ok(self.projective_dimension(budget)? == h)
    }

    /// Perfect of grade two: height 2 and `pd(S/I) = 2`.
    pub fn is_perfect_grade2(&self, budget: &Budget) -> Result<bool> {
        if self.height() != Some(2) {
            return Ok(false);
        }
        Ok(self.projective_dimension(budget)? == 2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::PolynomialRing;

    fn sq(r: &PolynomialRing, sets: &[&[usize]]) -> MonomialIdeal {
        MonomialIdeal::new(
            r,
            sets.iter()
                .map(|s| Monomial::from_pairs(s.iter().map(|&v| (v, 1)))),
        )
    }

    #[test]
    fn regular_sequence_has_koszul_resolution() {
        let r = PolynomialRing::standard(2);
        let i = sq(&r, &[&[0], &[1]]);
        let t = i.betti_table(&Budget::default()).unwrap();
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!((t.total(0), t.total(1), t.total(2)), (1, 2, 1));
    }

    #[test]
    fn triangle_is_perfect_of_grade_two() {
        let r = PolynomialRing::standard(3);
        let i = sq(&r, &[&[0, 1], &[0, 2], &[1, 2]]);
        let t = i.betti_table(&Budget::default()).unwrap();
        assert_eq!(t.projective_dimension(), 2);
        assert_eq!((t.total(0), t.total(1), t.total(2)), (1, 3, 2));
        assert!(i.is_perfect_grade2(&Budget::default()).unwrap());
    }

    #[test]
    fn four_cycle_edge_ideal_is_not_cohen_macaulay() {
        // (x1,x3) ∩ (x2,x4): two planes meeting in a point, resolution 1,4,4,1.
        let r = PolynomialRing::standard(4);
        let i = sq(&r, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]);
        let t = i.betti_table(&Budget::default()).unwrap();
        assert_eq!(t.projective_dimension(), 3);
        assert_eq!((t.total(1), t.total(2), t.total(3)), (4, 4, 1));
        assert!(!i.is_perfect_grade2(&Budget::default()).unwrap());
    }

    #[test]
    fn non_cohen_macaulay_example() {
        // (x*y, x*z) = x*(y,z): height 1, pd 2.
        let r = PolynomialRing::standard(3);
        let i = sq(&r, &[&[0, 1], &[0, 2]]);
        assert_eq!(i.projective_dimension(&Budget::default()).unwrap(), 2);
        assert!(!i.is_cohen_macaulay(&Budget::default()).unwrap());
        // Two disjoint edges form a regular sequence.
        let r4 = PolynomialRing::standard(4);
        let j = sq(&r4, &[&[0, 1], &[2, 3]]);
        assert_eq!(j.projective_dimension(&Budget::default()).unwrap(), 2);
        let k = sq(&r4, &[&[0, 1], &[1, 2], &[2, 3]]);
        // The path on four vertices is a Cohen-Macaulay graph.
        assert_eq!(k.projective_dimension(&Budget::default()).unwrap(), 2);
    }
}
