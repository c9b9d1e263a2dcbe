use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::numerical::NumericalSemigroup;
use super::relative::RelativeIdeal;
use crate::algebra::{Monomial, PolyMatrix, Polynomial};
use crate::error::{binomial, Budget, Error, Result};

/// A relation `t^{d - e_i} E_i - t^{d - e_j} E_j` between two generators of a
/// monomial ideal of `K[[t^S]]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairRelation {
    pub i: usize,
    pub j: usize,
    pub degree: i64,
}

/// One relation per pair `i < j` and per minimal generator `d` of
/// `(e_i + S) ∩ (e_j + S)`.
pub fn presentation_semigroup(ideal: &RelativeIdeal) -> Result<Vec<PairRelation>> {
    if !ideal.is_integral() {
        return Err(Error::PreconditionViolated(format!(
            "{ideal} is not contained in S"
        )));
    }
    let s = ideal.semigroup();
    let e = ideal.gens();
    let mut out = Vec::new();
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            let meet = RelativeIdeal::principal(s, e[i])
                .intersection(&RelativeIdeal::principal(s, e[j]))?;
            out.extend(
                meet.gens()
                    .iter()
                    .map(|&d| PairRelation { i, j, degree: d }),
            );
        }
    }
    Ok(out)
}

/// The relation matrix as polynomials in the single variable `t`.
pub fn relation_matrix(ideal: &RelativeIdeal, relations: &[PairRelation]) -> PolyMatrix {
    let e = ideal.gens();
    let mut m = PolyMatrix::zeros(e.len(), relations.len());
    let t = |k: i64| Monomial::from_pairs([(0, k as u32)]);
    for (c, r) in relations.iter().enumerate() {
        m.set(r.i, c, Polynomial::term(1, t(r.degree - e[r.i])));
        m.set(r.j, c, Polynomial::term(-1, t(r.degree - e[r.j])));
    }
    m
}

/// A power series truncated below `t^N`, as `(exponent, coefficient)` pairs.
pub type Series = Vec<(i64, BigInt)>;

fn series_of(p: &Polynomial) -> Series {
    p.terms()
        .map(|(m, c)| (m.exponent(0) as i64, c.clone()))
        .collect()
}

/// The image modulo `t^N` of the ideal generated by some series in `K[[t^S]]`:
/// a subspace of `span{t^k : k < N}` kept in reduced row echelon form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedIdeal {
    bound: i64,
    /// Rows sorted by pivot exponent, each with leading coefficient 1.
    rows: Vec<(i64, Vec<BigRational>)>,
}

impl TruncatedIdeal {
    /// Span of `p * t^s mod t^N` for every generator `p` and `s ∈ S`.
    pub fn from_series(s: &NumericalSemigroup, gens: &[Series], bound: i64) -> Self {
        let width = bound.max(0) as usize;
        let mut seen: BTreeSet<Vec<(i64, BigInt)>> = BTreeSet::new();
        for g in gens {
            for shift in s.elements_in(0, bound) {
                let mut v: Vec<(i64, BigInt)> = g
                    .iter()
                    .filter(|(k, c)| k + shift < bound && !c.is_zero())
                    .map(|(k, c)| (k + shift, c.clone()))
                    .collect();
                if v.is_empty() {
                    continue;
                }
                v.sort();
                seen.insert(v);
            }
        }
        let mut t = TruncatedIdeal {
            bound,
            rows: Vec::new(),
        };
        for v in seen {
            let mut dense = vec![BigRational::zero(); width];
            for (k, c) in v {
                dense[k as usize] = BigRational::from_integer(c);
            }
            t.insert(dense);
        }
        t
    }

    /// The monomial ideal generated by `t^g`, `g ∈ gens`, modulo `t^N`.
    pub fn from_monomials(s: &NumericalSemigroup, gens: &[i64], bound: i64) -> Self {
        let series: Vec<Series> = gens.iter().map(|&g| vec![(g, BigInt::one())]).collect();
        TruncatedIdeal::from_series(s, &series, bound)
    }

    fn reduce(&self, v: &mut [BigRational]) {
        for (p, row) in &self.rows {
            let c = v[*p as usize].clone();
            if !c.is_zero() {
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
    }

    fn insert(&mut self, mut v: Vec<BigRational>) {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return;
        };
        let lead = v[p].clone();
        v.iter_mut().for_each(|x| *x /= &lead);
        for (_, row) in self.rows.iter_mut() {
            let c = row[p].clone();
            if !c.is_zero() {
                for (x, r) in row.iter_mut().zip(&v) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        let at = self.rows.partition_point(|(q, _)| *q < p as i64);
        self.rows.insert(at, (p as i64, v));
    }

    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Whether `t^d` lies in the truncated span; `d >= N` is out of range.
    pub fn contains_monomial(&self, d: i64) -> Option<bool> {
        if d < 0 || d >= self.bound {
            return None;
        }
        let mut v = vec![BigRational::zero(); self.bound as usize];
        v[d as usize] = BigRational::one();
        self.reduce(&mut v);
        Some(v.iter().all(Zero::is_zero))
    }

    /// When the span is spanned by monomials, their exponents.
    pub fn monomial_exponents(&self) -> Option<Vec<i64>> {
        self.rows
            .iter()
            .map(|(p, row)| (row.iter().filter(|x| !x.is_zero()).count() == 1).then_some(*p))
            .collect()
    }
}

/// How the `(m-1)`-minors of the relation matrix are produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum MinorRoute {
    /// Every `(m-1)`-minor, expanded as a polynomial in `t`.
    Enumerate,
    /// Weighted matrix-tree count. Minors are single terms `±t^a`; the nonzero
    /// ones are indexed by the spanning trees of the multigraph of relations
    /// and a deleted row, so the exponents are read off one determinant.
    MatrixTree,
    /// `Enumerate` within the minor budget, `MatrixTree` beyond it.
    #[default]
    Auto,
}

/// `Fitt_1` of a monomial ideal of `K[[t^S]]`.
#[derive(Clone, Debug)]
pub struct FittingSeries {
    pub ideal: RelativeIdeal,
    /// Nonzero `(m-1)`-minors, deduplicated.
    pub minors: Vec<Series>,
    pub route: MinorRoute,
    pub num_relations: usize,
    source_gens: usize,
    source_min: i64,
}

pub fn fitting1_series(
    ideal: &RelativeIdeal,
    route: MinorRoute,
    budget: &Budget,
) -> Result<FittingSeries> {
    let m = ideal.num_gens();
    let s = ideal.semigroup();
    let relations = presentation_semigroup(ideal)?;
    let n = relations.len();
    if m < 2 {
        return Ok(FittingSeries {
            ideal: RelativeIdeal::principal(s, 0),
            minors: vec![vec![(0, BigInt::one())]],
            route: MinorRoute::Enumerate,
            num_relations: n,
            source_gens: m,
            source_min: ideal.min(),
        });
    }
    let count = (m as u64).saturating_mul(binomial(n, m - 1));
    let route = match route {
        MinorRoute::Auto if count <= budget.max_minors => MinorRoute::Enumerate,
        MinorRoute::Auto => MinorRoute::MatrixTree,
        r => r,
    };
    let minors: Vec<Series> = match route {
        MinorRoute::Enumerate => {
            let matrix = relation_matrix(ideal, &relations);
            let polys = matrix.minors((m - 1) as i64, budget)?;
            let set: BTreeSet<Series> = polys
                .iter()
                .filter(|p| !p.is_zero())
                .map(series_of)
                .collect();
            set.into_iter().collect()
        }
        _ => tree_minor_exponents(ideal, &relations)?
            .into_iter()
            .map(|a| vec![(a, BigInt::one())])
            .collect(),
    };
    let mut exps = Vec::with_capacity(minors.len());
    for p in &minors {
        match p.as_slice() {
            [(a, _)] => exps.push(*a),
            _ => {
                return Err(Error::Invalid(format!(
                    "a minor of the relation matrix of {ideal} has {} terms",
                    p.len()
                )))
            }
        }
    }
    if exps.is_empty() {
        return Err(Error::Invalid(format!(
            "the relations of {ideal} have rank below m - 1"
        )));
    }
    Ok(FittingSeries {
        ideal: RelativeIdeal::new(s, exps)?,
        minors,
        route,
        num_relations: n,
        source_gens: m,
        source_min: ideal.min(),
    })
}

/// Exponents `w(T) - Σ e + e_r` over spanning trees `T` of the relation
/// multigraph and rows `r`, from the reduced weighted Laplacian.
fn tree_minor_exponents(
    ideal: &RelativeIdeal,
    relations: &[PairRelation],
) -> Result<BTreeSet<i64>> {
    let e = ideal.gens();
    let m = e.len();
    let base = relations.iter().map(|r| r.degree).min().unwrap_or(0);
    let y = |k: i64| Polynomial::term(1, Monomial::from_pairs([(0, (k - base) as u32)]));
    // Drop row 0; rows/cols 1..m of the Laplacian.
    let mut lap = PolyMatrix::zeros(m - 1, m - 1);
    let mut add = |a: usize, b: usize, p: &Polynomial| {
        let cur = lap.get(a, b).cloned().unwrap_or_else(Polynomial::zero);
        lap.set(a, b, &cur + p);
    };
    for r in relations {
        let w = y(r.degree);
        let neg = -&w;
        for v in [r.i, r.j] {
            if v > 0 {
                add(v - 1, v - 1, &w);
            }
        }
        if r.i > 0 && r.j > 0 {
            add(r.i - 1, r.j - 1, &neg);
            add(r.j - 1, r.i - 1, &neg);
        }
    }
    let det = lap.determinant_bareiss();
    let total: i64 = e.iter().sum();
    let shift = base * (m as i64 - 1) - total;
    let mut out = BTreeSet::new();
    for (mono, c) in det.terms() {
        if !c.is_positive() {
            return Err(Error::Invalid(
                "tree polynomial has a non-positive coefficient".into(),
            ));
        }
        let w = mono.exponent(0) as i64;
        out.extend(e.iter().map(|&er| w + shift + er));
    }
    Ok(out)
}

impl FittingSeries {
    /// Decides `Fitt_1(I) = target` by comparing spans modulo `t^N` with
    /// `N = max((m-1) e_min + c, min(target) + c) + 1`, where `e_min` and `m`
    /// belong to `I`. Both sides contain every `t^d` with `d >= N`: the target
    /// by construction, `Fitt_1(I)` once some minor `t^a` has `a + c <= N`.
    pub fn equals(&self, target: &RelativeIdeal) -> Result<bool> {
        let s = self.ideal.semigroup();
        let c = s.conductor();
        let m = self.source_gens as i64;
        let bound = ((m - 1).max(0) * self.source_min + c).max(target.min() + c) + 1;
        let certified = self
            .minors
            .iter()
            .any(|p| matches!(p.as_slice(), [(a, _)] if a + c <= bound));
        if !certified {
            return Err(Error::InsufficientBound {
                bound,
                reason: "no single-term minor t^a with a + c(S) <= N".into(),
            });
        }
        Ok(self.truncated(bound) == TruncatedIdeal::from_monomials(s, target.gens(), bound))
    }

    pub fn truncated(&self, bound: i64) -> TruncatedIdeal {
        TruncatedIdeal::from_series(self.ideal.semigroup(), &self.minors, bound)
    }
}

/// `Fitt_1(I) = I`, decided on truncated spans.
pub fn fitting1_equals_ideal(
    ideal: &RelativeIdeal,
    route: MinorRoute,
    budget: &Budget,
) -> Result<bool> {
    fitting1_series(ideal, route, budget)?.equals(ideal)
}
