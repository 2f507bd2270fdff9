//! Alexander and Hosokawa polynomials of meridional presentations.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::fox::alexander_matrix;
use super::laurent::LaurentPoly;
use super::matrix::exact_determinant;
use crate::error::{Error, Result};
use crate::linkpresent::GroupPresentation;

/// A Laurent polynomial up to multiplication by `±monomial`.
///
/// Stored in normalized form; equality is associate equality.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AssociateClass {
    poly: LaurentPoly,
}

impl AssociateClass {
    pub fn new(p: LaurentPoly) -> Self {
        AssociateClass { poly: p.normalize_units() }
    }

    /// The normalized representative.
    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn vars(&self) -> &[String] {
        self.poly.vars()
    }

    pub fn symmetrized(&self) -> Result<LaurentPoly> {
        self.poly.symmetrize()
    }
}

/// Associate equality of two polynomials, after aligning their variables.
pub fn associates(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    let (a, b) = LaurentPoly::align(a, b);
    a.normalize_units() == b.normalize_units()
}

impl PartialEq for AssociateClass {
    fn eq(&self, other: &Self) -> bool {
        associates(&self.poly, &other.poly)
    }
}

impl Eq for AssociateClass {}

impl From<LaurentPoly> for AssociateClass {
    fn from(p: LaurentPoly) -> Self {
        AssociateClass::new(p)
    }
}

impl fmt::Display for AssociateClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt(f)
    }
}

/// Alexander polynomial from the deleted-column determinant, deleting the
/// last generator's column.
pub fn alexander_polynomial(p: &GroupPresentation) -> Result<AssociateClass> {
    let last = p.generators.len().saturating_sub(1);
    alexander_polynomial_deleting(p, last)
}

/// Alexander polynomial deleting column `j`.
///
/// For a deficiency-one meridional presentation the determinant `D_j` of
/// the Alexander matrix with column `j` removed satisfies
/// `D_j ≐ Δ` for a knot and `D_j ≐ Δ·(v_j − 1)` for a link of two or more
/// components, `v_j` being the variable of generator `j`. The division in
/// the link case must be exact.
pub fn alexander_polynomial_deleting(p: &GroupPresentation, j: usize) -> Result<AssociateClass> {
    let gens = p.generators.len();
    if p.relators.len() + 1 != gens {
        return Err(Error::DegenerateMatrix { relators: p.relators.len(), generators: gens });
    }
    if j >= gens {
        return Err(Error::UnmappedGenerator(j));
    }
    if p.relators.is_empty() {
        return Ok(AssociateClass::new(LaurentPoly::one().over_vars(&p.vars)?));
    }
    let m = alexander_matrix(p)?;
    let det = exact_determinant(&m.without_col(j))?.over_vars(&p.vars)?;
    if p.num_components() < 2 {
        return Ok(AssociateClass::new(det));
    }
    let v = &p.vars[p.abelianization[j]];
    let divisor = &LaurentPoly::var(v) - &LaurentPoly::one();
    let quot = det
        .div_exact(&divisor)
        .ok_or_else(|| Error::NotDivisible(format!("deleted-column determinant by ({v} - 1)")))?;
    Ok(AssociateClass::new(quot.over_vars(&p.vars)?))
}

/// Hosokawa polynomial `Δ(t,…,t) / (t − 1)^(k−2)` of a `k`-component link.
///
/// `delta` may be given in several variables, in which case all of them are
/// collapsed to `t` first.
pub fn hosokawa(delta: &LaurentPoly, k: usize) -> Result<AssociateClass> {
    if k < 2 {
        return Err(Error::Precondition(format!("Hosokawa polynomial needs at least 2 components, got {k}")));
    }
    let used = delta.used_vars();
    let var = if used.len() == 1 { used[0].to_owned() } else { "t".to_owned() };
    let collapsed = delta.collapse_to(&var);
    let divisor = (&LaurentPoly::var(&var) - &LaurentPoly::one()).pow((k - 2) as u32);
    let quot = collapsed
        .div_exact(&divisor)
        .ok_or_else(|| Error::NotDivisible(format!("Δ(t,…,t) by (t − 1)^{}", k - 2)))?;
    Ok(AssociateClass::new(quot))
}
