//! Dense matrices over the Laurent ring and their exact determinants.

use std::ops::{Index, IndexMut};

use super::laurent::LaurentPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<LaurentPoly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix { rows, cols, entries: vec![LaurentPoly::constant(0); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = LaurentPoly::one();
        }
        m
    }

    /// Rows must all have length `cols` (needed when there are no rows).
    pub fn from_rows_with_cols(rows: Vec<Vec<LaurentPoly>>, cols: usize) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix");
            entries.extend(r);
        }
        PolyMatrix { rows: nrows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[LaurentPoly] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn without_col(&self, j: usize) -> PolyMatrix {
        assert!(j < self.cols);
        let rows = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        Self::from_rows_with_cols(rows, self.cols - 1)
    }

    pub fn without_row(&self, i: usize) -> PolyMatrix {
        assert!(i < self.rows);
        let rows = (0..self.rows).filter(|&r| r != i).map(|r| self.row(r).to_vec()).collect();
        Self::from_rows_with_cols(rows, self.cols)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.cols {
                self.entries.swap(a * self.cols + k, b * self.cols + k);
            }
        }
    }

    /// All variables used by any entry, in first-seen order.
    fn union_vars(&self) -> Vec<String> {
        let mut vars: Vec<String> = Vec::new();
        for e in &self.entries {
            for v in e.vars() {
                if !vars.contains(v) {
                    vars.push(v.clone());
                }
            }
        }
        vars
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = LaurentPoly;
    fn index(&self, (i, j): (usize, usize)) -> &LaurentPoly {
        assert!(i < self.rows && j < self.cols);
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut LaurentPoly {
        assert!(i < self.rows && j < self.cols);
        &mut self.entries[i * self.cols + j]
    }
}

/// Exact determinant by fraction-free (Bareiss) elimination.
///
/// Each row is first multiplied by a monomial so that all entries are
/// honest polynomials; those monomials are divided back out at the end.
/// Every intermediate division is exact, so no fractions ever appear.
/// The empty matrix has determinant 1.
pub fn exact_determinant(m: &PolyMatrix) -> Result<LaurentPoly> {
    if m.rows != m.cols {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let vars = m.union_vars();
    if n == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a = PolyMatrix {
        rows: n,
        cols: n,
        entries: m.entries.iter().map(|e| e.over_vars(&vars).expect("union")).collect(),
    };

    // clear negative exponents row by row
    let mut row_shift = vec![0i64; vars.len()];
    for i in 0..n {
        let mins = a.row(i).iter().filter_map(LaurentPoly::min_exponents).fold(None, |acc: Option<Vec<i64>>, e| {
            Some(match acc {
                None => e,
                Some(a) => a.iter().zip(&e).map(|(x, y)| *x.min(y)).collect(),
            })
        });
        let Some(mins) = mins else {
            return Ok(LaurentPoly::constant(0).over_vars(&vars).expect("union"));
        };
        let shift: Vec<i64> = mins.iter().map(|k| -k).collect();
        for (s, k) in row_shift.iter_mut().zip(&shift) {
            *s += k;
        }
        for k in 0..n {
            a[(i, k)] = a[(i, k)].shift(&shift);
        }
    }

    let mut negate = false;
    let mut prev = LaurentPoly::one().over_vars(&vars).expect("constant");
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[(r, k)].is_zero()) else {
            return Ok(LaurentPoly::constant(0).over_vars(&vars).expect("union"));
        };
        if p != k {
            a.swap_rows(p, k);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[(k, k)] * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                a[(i, j)] = num
                    .div_exact(&prev)
                    .ok_or_else(|| Error::NotDivisible("Bareiss step was not exact".into()))?;
            }
            a[(i, k)] = LaurentPoly::constant(0).over_vars(&vars).expect("union");
        }
        prev = a[(k, k)].clone();
    }
    let unshift: Vec<i64> = row_shift.iter().map(|k| -k).collect();
    let det = a[(n - 1, n - 1)].shift(&unshift);
    Ok(if negate { -det } else { det })
}

/// Determinant by Laplace expansion along the first row.
///
/// Exponential time; kept as an independent reference for small matrices.
pub fn cofactor_determinant(m: &PolyMatrix) -> Result<LaurentPoly> {
    if m.rows != m.cols {
        return Err(Error::NonSquare { rows: m.rows, cols: m.cols });
    }
    if m.rows == 0 {
        return Ok(LaurentPoly::one());
    }
    let minor_base = m.without_row(0);
    let mut total = LaurentPoly::constant(0);
    for j in 0..m.cols {
        if m[(0, j)].is_zero() {
            continue;
        }
        let term = &m[(0, j)] * &cofactor_determinant(&minor_base.without_col(j))?;
        total = if j % 2 == 0 { &total + &term } else { &total - &term };
    }
    Ok(total)
}
