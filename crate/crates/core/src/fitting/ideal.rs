use itertools::Itertools;

use super::presentation::GradedPresentation;
use crate::algebra::{is_nonsingular_i64, small_rank, Monomial, PolyMatrix, Polynomial};
use crate::error::{binomial, Budget, Result};
use crate::ideal::{MonomialIdeal, PolynomialRing};

/// Which syzygy matrix the minors are taken from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PresentationKind {
    /// All `C(m, 2)` Taylor relations.
    Taylor,
    /// Taylor relations pruned to a minimal generating set of the syzygies.
    #[default]
    Minimal,
}

/// `Fitt_j(I)`, computed from the minimal generators of `I`.
pub fn fitting_ideal(ideal: &MonomialIdeal, j: usize, budget: &Budget) -> Result<MonomialIdeal> {
    fitting_ideal_of_generators(
        ideal.ring(),
        ideal.gens(),
        j,
        PresentationKind::Minimal,
        budget,
    )
}

/// `Fitt_j` of the ideal generated by `gens`, presented on exactly those
/// generators (redundant ones included).
pub fn fitting_ideal_of_generators(
    ring: &PolynomialRing,
    gens: &[Monomial],
    j: usize,
    kind: PresentationKind,
    budget: &Budget,
) -> Result<MonomialIdeal> {
    let m = gens.len();
    if j >= m {
        return Ok(MonomialIdeal::unit(ring));
    }
    let taylor = GradedPresentation::taylor(ring, gens);
    let gp = match kind {
        PresentationKind::Taylor => taylor,
        PresentationKind::Minimal => taylor.minimalized(),
    };
    graded_minor_ideal(&gp, m - j, budget)
}

/// `Fitt_0(I), ..., Fitt_m(I)` for `m = μ(I)`.
pub fn fitting_ideals(ideal: &MonomialIdeal, budget: &Budget) -> Result<Vec<MonomialIdeal>> {
    let gp = GradedPresentation::taylor(ideal.ring(), ideal.gens()).minimalized();
    let m = ideal.num_gens();
    (0..=m)
        .map(|j| {
            if j == m {
                Ok(MonomialIdeal::unit(ideal.ring()))
            } else {
                graded_minor_ideal(&gp, m - j, budget)
            }
        })
        .collect()
}

/// The ideal of `t`-minors of a homogeneous presentation.
///
/// Every entry is `c * x^{deg(col) - u_row}`, so a `t`-minor on rows `R` and
/// columns `C` equals `det(c_{R,C}) * x^{Σ_C deg - Σ_R u}`: a single term. The
/// ideal they generate is monomial and is collected term by term, skipping
/// the integer determinant whenever the candidate monomial is already in the
/// ideal found so far, and skipping whole column sets of deficient rank.
pub fn graded_minor_ideal(
    gp: &GradedPresentation,
    t: usize,
    budget: &Budget,
) -> Result<MonomialIdeal> {
    let ring = &gp.ring;
    let (m, n) = (gp.rows.len(), gp.cols.len());
    if t == 0 {
        return Ok(MonomialIdeal::unit(ring));
    }
    if t > m || t > n {
        return Ok(MonomialIdeal::zero(ring));
    }
    budget.check_minors(
        || format!("{t}-minors of a {m}x{n} presentation"),
        binomial(m, t).saturating_mul(binomial(n, t)),
    )?;
    let nv = ring.nvars();
    let row_deg: Vec<Vec<i64>> = gp
        .rows
        .iter()
        .map(|u| u.to_dense(nv).into_iter().map(i64::from).collect())
        .collect();
    let col_deg: Vec<Vec<i64>> = gp
        .cols
        .iter()
        .map(|c| c.degree.to_dense(nv).into_iter().map(i64::from).collect())
        .collect();
    let coeff: Vec<Vec<i64>> = (0..m)
        .map(|r| (0..n).map(|c| gp.entry(r, c)).collect())
        .collect();

    let mut found: Vec<Vec<i64>> = Vec::new();
    let mut colsum = vec![0i64; nv];
    let mut mono = vec![0i64; nv];
    let mut block = vec![0i64; t * t];
    let row_sets: Vec<Vec<usize>> = (0..m).combinations(t).collect();
    for cols in (0..n).combinations(t) {
        let sub: Vec<Vec<i64>> = (0..m)
            .map(|r| cols.iter().map(|&c| coeff[r][c]).collect())
            .collect();
        if small_rank(&sub) < t {
            continue;
        }
        colsum.iter_mut().for_each(|x| *x = 0);
        for &c in &cols {
            for (acc, d) in colsum.iter_mut().zip(&col_deg[c]) {
                *acc += d;
            }
        }
        'rows: for rows in &row_sets {
            mono.copy_from_slice(&colsum);
            for &r in rows {
                for (acc, d) in mono.iter_mut().zip(&row_deg[r]) {
                    *acc -= d;
                }
            }
            if mono.iter().any(|&e| e < 0) {
                continue;
            }
            if found
                .iter()
                .any(|g| g.iter().zip(&mono).all(|(a, b)| a <= b))
            {
                continue 'rows;
            }
            for (i, &r) in rows.iter().enumerate() {
                for (k, &c) in cols.iter().enumerate() {
                    block[i * t + k] = coeff[r][c];
                }
            }
            if is_nonsingular_i64(&block, t) {
                found.retain(|g| !mono.iter().zip(g).all(|(a, b)| a <= b));
                found.push(mono.clone());
            }
        }
    }
    Ok(MonomialIdeal::new(
        ring,
        found
            .into_iter()
            .map(|e| Monomial::from_exponents(&e.iter().map(|&x| x as u32).collect::<Vec<_>>())),
    ))
}

/// Raw `(m - j)`-minors of a user-supplied presentation with `m` rows.
/// No monomial collection is done; `j >= m` gives `{1}`.
pub fn fitting_of_presentation(
    matrix: &PolyMatrix,
    j: usize,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    matrix.minors(matrix.rows() as i64 - j as i64, budget)
}

/// The monomial ideal generated by every term of every `(m - j)`-minor of the
/// polynomial matrix. Only meaningful when the minors generate a monomial
/// ideal, as they do for a presentation of a monomial ideal.
pub fn monomial_minor_ideal(
    ring: &PolynomialRing,
    matrix: &PolyMatrix,
    j: usize,
    budget: &Budget,
) -> Result<MonomialIdeal> {
    let minors = fitting_of_presentation(matrix, j, budget)?;
    Ok(MonomialIdeal::new(
        ring,
        minors
            .iter()
            .flat_map(|p| p.monomials().cloned().collect::<Vec<_>>()),
    ))
}
