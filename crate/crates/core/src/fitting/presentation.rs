use itertools::Itertools;

use crate::algebra::{small_rank, Monomial, PolyMatrix, Polynomial};
use crate::ideal::{MonomialIdeal, PolynomialRing};

/// A free presentation `S^n -> S^m -> I -> 0` of a monomial ideal: one row per
/// chosen generator, one column per syzygy.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub ideal: MonomialIdeal,
    pub matrix: PolyMatrix,
    pub generator_order: Vec<Monomial>,
}

impl Presentation {
    /// Checks `Σ_i A[i][c] * u_i = 0` for every column `c`.
    pub fn columns_are_syzygies(&self) -> bool {
        (0..self.matrix.cols()).all(|c| {
            let mut acc = Polynomial::zero();
            for (r, u) in self.generator_order.iter().enumerate() {
                if let Some(p) = self.matrix.get(r, c) {
                    acc = &acc + &p.scale_monomial(u);
                }
            }
            acc.is_zero()
        })
    }
}

/// One syzygy column of a multigraded presentation: entry `coeff * x^{degree - u_row}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedColumn {
    pub degree: Monomial,
    pub entries: Vec<(usize, i64)>,
}

/// A presentation whose columns are homogeneous in the fine grading, so every
/// entry is an integer multiple of a monomial fixed by its row and column.
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub ring: PolynomialRing,
    pub rows: Vec<Monomial>,
    pub cols: Vec<GradedColumn>,
}

impl GradedPresentation {
    /// Taylor relations `(lcm/u_i) e_i - (lcm/u_j) e_j` for every pair `i < j`
    /// of the given generators, in lexicographic pair order.
    pub fn taylor(ring: &PolynomialRing, gens: &[Monomial]) -> Self {
        let cols = (0..gens.len())
            .tuple_combinations()
            .map(|(i, j)| GradedColumn {
                degree: gens[i].lcm(&gens[j]),
                entries: vec![(i, 1), (j, -1)],
            })
            .collect();
        GradedPresentation {
            ring: ring.clone(),
            rows: gens.to_vec(),
            cols,
        }
    }

    /// Drops every column lying in the span of lower-degree multiples and of
    /// already selected columns of the same degree. What remains is a minimal
    /// generating set of the same syzygy module.
    pub fn minimalized(&self) -> Self {
        let mut order: Vec<usize> = (0..self.cols.len()).collect();
        order.sort_by(|&a, &b| {
            self.cols[a]
                .degree
                .cmp(&self.cols[b].degree)
                .then(a.cmp(&b))
        });
        let mut selected: Vec<GradedColumn> = Vec::new();
        for idx in order {
            let cand = &self.cols[idx];
            let mut span: Vec<Vec<i64>> = selected
                .iter()
                .filter(|s| s.degree.divides(&cand.degree))
                .map(|s| self.dense(s))
                .collect();
            let before = small_rank(&span);
            span.push(self.dense(cand));
            if small_rank(&span) > before {
                selected.push(cand.clone());
            }
        }
        GradedPresentation {
            ring: self.ring.clone(),
            rows: self.rows.clone(),
            cols: selected,
        }
    }

    fn dense(&self, col: &GradedColumn) -> Vec<i64> {
        let mut v = vec![0; self.rows.len()];
        for &(r, c) in &col.entries {
            v[r] = c;
        }
        v
    }

    pub fn entry(&self, row: usize, col: usize) -> i64 {
        self.cols[col]
            .entries
            .iter()
            .find(|&&(r, _)| r == row)
            .map_or(0, |&(_, c)| c)
    }

    pub fn to_poly_matrix(&self) -> PolyMatrix {
        let mut m = PolyMatrix::zeros(self.rows.len(), self.cols.len());
        for (c, col) in self.cols.iter().enumerate() {
            for &(r, coeff) in &col.entries {
                let mono = col
                    .degree
                    .checked_div(&self.rows[r])
                    .expect("homogeneous entry");
                m.set(r, c, Polynomial::term(coeff, mono));
            }
        }
        m
    }
}

/// The Taylor presentation on the minimal generators of `ideal`:
/// `C(μ, 2)` columns.
pub fn taylor_presentation(ideal: &MonomialIdeal) -> Presentation {
    let gp = GradedPresentation::taylor(ideal.ring(), ideal.gens());
    Presentation {
        ideal: ideal.clone(),
        matrix: gp.to_poly_matrix(),
        generator_order: ideal.gens().to_vec(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_monomial;

    fn ideal(vars: &[&str], gens: &[&str]) -> MonomialIdeal {
        let r = PolynomialRing::new(vars.iter().copied()).unwrap();
        let g: Vec<_> = gens
            .iter()
            .map(|s| parse_monomial(s, r.names()).unwrap())
            .collect();
        MonomialIdeal::new(&r, g)
    }

    fn col(p: &Presentation, c: usize) -> Vec<String> {
        p.matrix
            .column(c)
            .iter()
            .map(|q| q.format_with(p.ideal.ring().names()))
            .collect()
    }

    #[test]
    fn two_variables() {
        let p = taylor_presentation(&ideal(&["x", "y"], &["x", "y"]));
        assert_eq!(p.matrix.cols(), 1);
        assert_eq!(col(&p, 0), ["y", "-x"]);
        assert!(p.columns_are_syzygies());
    }

    #[test]
    fn triangle() {
        let p = taylor_presentation(&ideal(&["x", "y", "z"], &["x*y", "x*z", "y*z"]));
        assert_eq!(p.matrix.cols(), 3);
        assert_eq!(col(&p, 0), ["z", "-y", "0"]);
        assert_eq!(col(&p, 1), ["z", "0", "-x"]);
        assert_eq!(col(&p, 2), ["0", "y", "-x"]);
        assert!(p.columns_are_syzygies());
    }

    #[test]
    fn star_example() {
        let p = taylor_presentation(&ideal(&["x1", "x2", "x3"], &["x1*x2", "x1*x3"]));
        assert_eq!(col(&p, 0), ["x3", "-x2"]);
    }

    #[test]
    fn minimalization_drops_dependent_relations() {
        // Triangle: the three linear syzygies span a 2-dimensional space in
        // degree xyz.
        let i = ideal(&["x", "y", "z"], &["x*y", "x*z", "y*z"]);
        let gp = GradedPresentation::taylor(i.ring(), i.gens()).minimalized();
        assert_eq!(gp.cols.len(), 2);
        // (x, y, z): the Koszul relations are already minimal.
        let m = ideal(&["x", "y", "z"], &["x", "y", "z"]);
        assert_eq!(
            GradedPresentation::taylor(m.ring(), m.gens())
                .minimalized()
                .cols
                .len(),
            3
        );
        // Path x-y-z-w: x*y, z*w has lcm divisible by y*z.
        let p = ideal(&["x", "y", "z", "w"], &["x*y", "y*z", "z*w"]);
        assert_eq!(
            GradedPresentation::taylor(p.ring(), p.gens())
                .minimalized()
                .cols
                .len(),
            2
        );
    }
}
