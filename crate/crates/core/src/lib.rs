//! Exact invariants of braided tori and their surgeries in 4-manifolds.
//!
//! The pipeline runs from braid words through free-group presentations and
//! Fox calculus to multivariable Alexander polynomials, then into
//! Seiberg–Witten group-ring elements of surgered manifolds, torus-surgery
//! families, and the isotopy obstructions built on them.

pub mod alexpoly;
pub mod braid;
pub mod error;
pub mod linkpresent;
pub mod obstruct;
pub mod surgeryfam;
pub mod swring;

pub use alexpoly::{AssociateClass, LaurentPoly};
pub use braid::{parse_braid, BraidWord};
pub use error::{Error, Result};
