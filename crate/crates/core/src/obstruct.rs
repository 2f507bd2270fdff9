//! One-sided obstructions to isotopy of braided tori.
//!
//! Both tests only ever conclude `NOT_ISOTOPIC`; agreement of the invariants
//! is reported as `NOT_DISTINGUISHED` and proves nothing.

use serde::{Deserialize, Serialize};

use crate::alexpoly::{associates, hosokawa, AssociateClass, LaurentPoly};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::swring::{axis_link_symmetric, RIM_CLASS};

/// Name of the torus class in obstruction evidence.
pub const TORUS_CLASS: &str = "t";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    NotIsotopic,
    NotDistinguished,
}

/// The compared polynomials: `first` against `second` and against
/// `second_inverted` (the rim variable replaced by its inverse).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    pub first: LaurentPoly,
    pub second: LaurentPoly,
    pub second_inverted: LaurentPoly,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionVerdict {
    pub status: Status,
    pub evidence: Evidence,
}

impl ObstructionVerdict {
    fn compare(first: LaurentPoly, second: LaurentPoly, second_inverted: LaurentPoly) -> Self {
        let status = if associates(&first, &second) || associates(&first, &second_inverted) {
            Status::NotDistinguished
        } else {
            Status::NotIsotopic
        };
        ObstructionVerdict { status, evidence: Evidence { first, second, second_inverted } }
    }

    pub fn is_not_isotopic(&self) -> bool {
        self.status == Status::NotIsotopic
    }
}

/// Compare `Δ^sym_{L_B}(t², τ²)` with `Δ^sym_{L_B′}(t², τ′^{±2})`.
///
/// Both braids need the same strand count and knotted closures.
pub fn braided_torus_obstruction(b1: &BraidWord, b2: &BraidWord) -> Result<ObstructionVerdict> {
    if b1.strands() != b2.strands() {
        return Err(Error::StrandMismatch(b1.strands(), b2.strands()));
    }
    let p1 = axis_link_symmetric(b1, TORUS_CLASS, RIM_CLASS)?;
    let p2 = axis_link_symmetric(b2, TORUS_CLASS, RIM_CLASS)?;
    let p2_inv = p2.invert_vars(&[RIM_CLASS])?;
    Ok(ObstructionVerdict::compare(p1, p2, p2_inv))
}

/// Compare Hosokawa polynomials of two three-component links at the squared
/// variable. Multivariable inputs are collapsed first.
pub fn simple_cover_obstruction(
    d1: &AssociateClass,
    d2: &AssociateClass,
    k1: usize,
    k2: usize,
) -> Result<ObstructionVerdict> {
    for k in [k1, k2] {
        if k != 3 {
            return Err(Error::ArityMismatch { expected: 3, found: k });
        }
    }
    let squared = |d: &AssociateClass, k| -> Result<LaurentPoly> {
        let nabla = hosokawa(d.poly(), k)?;
        let p = nabla.poly();
        let p = match p.used_vars().first() {
            Some(&v) if v != TORUS_CLASS => p.rename_var(v, TORUS_CLASS)?,
            _ => p.clone(),
        };
        Ok(p.over_vars(&[TORUS_CLASS])?.dilate(2))
    };
    let n1 = squared(d1, k1)?;
    let n2 = squared(d2, k2)?;
    let n2_inv = n2.invert_all();
    Ok(ObstructionVerdict::compare(n1, n2, n2_inv))
}

/// Strand count `m = 2g + 4` of the braid realizing a genus-`g` fibered link
/// as a threefold simple cover.
pub fn strands_from_genus(g: u64) -> u64 {
    2 * g + 4
}
