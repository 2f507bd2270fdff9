//! Exact Laurent-polynomial arithmetic, Fox calculus, and Alexander-type
//! invariants.

mod alexander;
mod fox;
mod laurent;
mod matrix;

pub use alexander::{alexander_polynomial, alexander_polynomial_deleting, associates, hosokawa, AssociateClass};
pub use fox::{alexander_matrix, fox_derivative, Abelianization};
pub use laurent::{Exponent, LaurentPoly, Specialization};
pub use matrix::{cofactor_determinant, exact_determinant, PolyMatrix};

use crate::braid::BraidWord;
use crate::error::Result;
use crate::linkpresent::{braid_axis_presentation, closed_braid_presentation};

/// Alexander polynomial of the closure of `b`.
pub fn closure_alexander(b: &BraidWord) -> Result<AssociateClass> {
    alexander_polynomial(&closed_braid_presentation(b))
}

/// Alexander polynomial of the closure of `b` together with its axis.
pub fn axis_alexander(b: &BraidWord) -> Result<AssociateClass> {
    alexander_polynomial(&braid_axis_presentation(b))
}
