//! Abelianized Fox derivatives and the Alexander matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::laurent::LaurentPoly;
use super::matrix::PolyMatrix;
use crate::error::{Error, Result};
use crate::linkpresent::{FreeWord, GroupPresentation};

/// Abelianization `φ` sending each generator to one variable.
#[derive(Debug, Clone, Copy)]
pub struct Abelianization<'a> {
    pub vars: &'a [String],
    /// `map[g]` is the variable index of generator `g`, if any.
    pub map: &'a [usize],
}

impl<'a> Abelianization<'a> {
    pub fn of(p: &'a GroupPresentation) -> Self {
        Abelianization { vars: &p.vars, map: &p.abelianization }
    }

    fn var_of(&self, g: usize) -> Result<usize> {
        match self.map.get(g) {
            Some(&v) if v < self.vars.len() => Ok(v),
            _ => Err(Error::UnmappedGenerator(g)),
        }
    }
}

/// `φ(∂w/∂x)` by a left-to-right fold of the product rule:
/// `∂(uv) = ∂u + φ(u)∂v`, `∂x/∂x = 1`, `∂x⁻¹/∂x = -x⁻¹`.
pub fn fox_derivative(w: &FreeWord, x: usize, phi: Abelianization<'_>) -> Result<LaurentPoly> {
    let nv = phi.vars.len();
    let mut prefix = vec![0i64; nv];
    let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for l in w.letters() {
        let v = phi.var_of(l.generator)?;
        if l.exponent > 0 {
            if l.generator == x {
                *acc.entry(prefix.clone()).or_default() += 1;
            }
            prefix[v] += 1;
        } else {
            prefix[v] -= 1;
            if l.generator == x {
                *acc.entry(prefix.clone()).or_default() -= 1;
            }
        }
    }
    LaurentPoly::from_terms(phi.vars, acc)
}

/// Entry `(j, k)` is `φ(∂r_j/∂x_k)`.
pub fn alexander_matrix(p: &GroupPresentation) -> Result<PolyMatrix> {
    let phi = Abelianization::of(p);
    let rows = p
        .relators
        .iter()
        .map(|r| {
            (0..p.generators.len())
                .map(|k| fox_derivative(r, k, phi))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PolyMatrix::from_rows_with_cols(rows, p.generators.len()))
}
