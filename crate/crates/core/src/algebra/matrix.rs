use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use super::Polynomial;
use crate::error::{binomial, Budget, Result};

/// Sparse matrix over the integer polynomial ring. Absent entries are zero.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Polynomial>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::one());
        }
        m
    }

    /// Dense constructor; every row must have the same length.
    pub fn from_rows(rows: Vec<Vec<Polynomial>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = PolyMatrix::zeros(nrows, ncols);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), ncols, "ragged matrix");
            for (j, p) in row.into_iter().enumerate() {
                m.set(i, j, p);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn set(&mut self, row: usize, col: usize, p: Polynomial) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        if p.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), p);
        }
    }

    pub fn get(&self, row: usize, col: usize) -> Option<&Polynomial> {
        self.entries.get(&(row, col))
    }

    /// Nonzero entries in row-major order.
    pub fn nonzeros(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial)> {
        self.entries.iter().map(|(&k, v)| (k, v))
    }

    pub fn column(&self, col: usize) -> Vec<Polynomial> {
        (0..self.rows)
            .map(|r| self.get(r, col).cloned().unwrap_or_default())
            .collect()
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), p)| ((c, r), p.clone()))
                .collect(),
        }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let mut out = PolyMatrix::zeros(rows.len(), cols.len());
        for (i, &r) in rows.iter().enumerate() {
            for (j, &c) in cols.iter().enumerate() {
                if let Some(p) = self.get(r, c) {
                    out.set(i, j, p.clone());
                }
            }
        }
        out
    }

    /// Determinant by cofactor expansion, always along the row with the fewest
    /// nonzero entries among the remaining columns.
    pub fn determinant(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let rows: Vec<usize> = (0..self.rows).collect();
        let cols: Vec<usize> = (0..self.cols).collect();
        self.cofactor(&rows, &cols)
    }

    fn cofactor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        if rows.is_empty() {
            return Polynomial::one();
        }
        let (pos, row, hits) = rows
            .iter()
            .enumerate()
            .map(|(pos, &r)| {
                let hits: Vec<usize> = (0..cols.len())
                    .filter(|&k| self.get(r, cols[k]).is_some())
                    .collect();
                (pos, r, hits)
            })
            .min_by_key(|(_, _, hits)| hits.len())
            .expect("nonempty");
        if hits.is_empty() {
            return Polynomial::zero();
        }
        let rest_rows: Vec<usize> = rows.iter().copied().filter(|&r| r != row).collect();
        let mut acc = Polynomial::zero();
        for k in hits {
            let rest_cols: Vec<usize> = cols
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != k)
                .map(|(_, &c)| c)
                .collect();
            let minor = self.cofactor(&rest_rows, &rest_cols);
            if minor.is_zero() {
                continue;
            }
            let term = self.get(row, cols[k]).expect("hit") * &minor;
            acc = if (pos + k) % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    /// Laplace expansion along a fixed row (first level only).
    pub fn determinant_along_row(&self, row: usize) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let rest_rows: Vec<usize> = (0..self.rows).filter(|&r| r != row).collect();
        let mut acc = Polynomial::zero();
        for c in 0..self.cols {
            let Some(entry) = self.get(row, c) else {
                continue;
            };
            let rest_cols: Vec<usize> = (0..self.cols).filter(|&k| k != c).collect();
            let term = entry * &self.cofactor(&rest_rows, &rest_cols);
            acc = if (row + c) % 2 == 0 {
                &acc + &term
            } else {
                &acc - &term
            };
        }
        acc
    }

    /// Fraction-free (Bareiss) elimination with exact polynomial division.
    pub fn determinant_bareiss(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Polynomial::one();
        }
        let mut a: Vec<Vec<Polynomial>> = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| self.get(r, c).cloned().unwrap_or_default())
                    .collect()
            })
            .collect();
        let mut negate = false;
        let mut prev = Polynomial::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                    return Polynomial::zero();
                };
                a.swap(k, swap);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.div_exact(&prev).expect("Bareiss step divides exactly");
                }
                a[i][k] = Polynomial::zero();
            }
            prev = a[k][k].clone();
        }
        let det = a[n - 1][n - 1].clone();
        if negate {
            -&det
        } else {
            det
        }
    }

    /// All `t`-minors, rows and columns enumerated in lexicographic order.
    ///
    /// `t <= 0` yields the single minor `1`; `t` larger than either dimension
    /// yields none.
    pub fn minors(&self, t: i64, budget: &Budget) -> Result<Vec<Polynomial>> {
        if t <= 0 {
            return Ok(vec![Polynomial::one()]);
        }
        let t = t as usize;
        if t > self.rows || t > self.cols {
            return Ok(Vec::new());
        }
        let count = binomial(self.rows, t).saturating_mul(binomial(self.cols, t));
        budget.check_minors(
            || format!("{t}-minors of a {}x{} matrix", self.rows, self.cols),
            count,
        )?;
        let mut out = Vec::with_capacity(count as usize);
        for rows in (0..self.rows).combinations(t) {
            for cols in (0..self.cols).combinations(t) {
                out.push(self.cofactor(&rows, &cols));
            }
        }
        Ok(out)
    }

    pub fn format_with(&self, names: &[String]) -> String {
        let mut lines = Vec::with_capacity(self.rows);
        for r in 0..self.rows {
            let cells: Vec<String> = (0..self.cols)
                .map(|c| {
                    self.get(r, c)
                        .map_or_else(|| "0".to_string(), |p| p.format_with(names))
                })
                .collect();
            lines.push(format!("[{}]", cells.join(", ")));
        }
        lines.join("\n")
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Monomial;

    fn v(i: usize) -> Polynomial {
        Polynomial::monomial(Monomial::var(i))
    }

    #[test]
    fn two_by_two() {
        let m = PolyMatrix::from_rows(vec![vec![v(0), v(1)], vec![v(2), v(3)]]);
        let expected = &(&v(0) * &v(3)) - &(&v(1) * &v(2));
        assert_eq!(m.determinant(), expected);
        assert_eq!(m.determinant_bareiss(), expected);
    }

    #[test]
    fn identity_has_unit_determinant() {
        assert!(PolyMatrix::identity(3).determinant().is_one());
        assert!(PolyMatrix::identity(3).determinant_bareiss().is_one());
    }

    #[test]
    fn taylor_submatrix_of_three_variables() {
        // rows {2,3}, cols {1,2} of the Taylor matrix of (x,y,z)
        let m = PolyMatrix::from_rows(vec![
            vec![-&v(0), Polynomial::zero()],
            vec![Polynomial::zero(), v(2)],
        ]);
        let expected = -&(&v(0) * &v(2));
        assert_eq!(m.determinant(), expected);
        assert_eq!(m.determinant_bareiss(), expected);
    }

    #[test]
    fn minors_conventions() {
        let col = PolyMatrix::from_rows(vec![vec![v(1)], vec![-&v(0)]]);
        let b = Budget::default();
        assert_eq!(col.minors(1, &b).unwrap(), vec![v(1), -&v(0)]);
        assert_eq!(col.minors(0, &b).unwrap(), vec![Polynomial::one()]);
        assert_eq!(col.minors(-3, &b).unwrap(), vec![Polynomial::one()]);
        assert!(col.minors(2, &b).unwrap().is_empty());
    }

    #[test]
    fn minors_respect_budget() {
        let m = PolyMatrix::identity(6);
        let err = m.minors(3, &Budget::with_minors(10)).unwrap_err();
        assert!(matches!(
            err,
            crate::Error::BudgetExceeded { needed: 400, .. }
        ));
    }

    #[test]
    fn singular_needs_no_pivot() {
        let m = PolyMatrix::from_rows(vec![
            vec![Polynomial::zero(), v(0)],
            vec![Polynomial::zero(), v(1)],
        ]);
        assert!(m.determinant().is_zero());
        assert!(m.determinant_bareiss().is_zero());
    }
}
