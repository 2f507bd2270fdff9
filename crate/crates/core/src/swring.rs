//! Seiberg–Witten invariants as elements of an integral group ring, and the
//! product formulas for knot surgery, link surgery, fiber sums along braided
//! tori and threefold branched-cover pushforwards.
//!
//! A group-ring element is a [`LaurentPoly`] whose variables are homology
//! class names. The rational elliptic surface never appears as a rational
//! function: its blocks carry a relative invariant of 1 and the flag
//! `e1_relative`, which suppresses the `(t − t⁻¹)` factor the formulas would
//! otherwise multiply in.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use crate::alexpoly::{axis_alexander, AssociateClass, Exponent, LaurentPoly, Specialization};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::linkpresent::AXIS_VAR;

/// Class name given to the rim torus `S¹ × μ_B` by [`fibersum_relative`].
pub const RIM_CLASS: &str = "tau";

/// A named 4-manifold (or pair) together with its Seiberg–Witten element.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawBlock", into = "RawBlock")]
pub struct ManifoldBlock {
    name: String,
    classes: Vec<String>,
    sw: LaurentPoly,
    parity: u8,
    closed: bool,
    torus: Option<String>,
    e1_relative: bool,
    pairings: BTreeMap<String, i64>,
    psc_split: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBlock {
    name: String,
    classes: Vec<String>,
    parity: u8,
    closed: bool,
    sw: LaurentPoly,
    /// Class of the torus operated on; defaults to the first class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    torus: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    e1_relative: bool,
    /// Declared intersection numbers `class · T` with the torus.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pairings: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    psc_split: bool,
}

impl TryFrom<RawBlock> for ManifoldBlock {
    type Error = Error;
    fn try_from(r: RawBlock) -> Result<Self> {
        let mut b = ManifoldBlock::new(&r.name, &r.classes, r.sw, r.parity, r.closed)?;
        if let Some(t) = r.torus {
            b = b.with_torus(&t)?;
        }
        b = b.with_pairings(r.pairings)?;
        b.e1_relative = r.e1_relative;
        b.psc_split = r.psc_split;
        Ok(b)
    }
}

impl From<ManifoldBlock> for RawBlock {
    fn from(b: ManifoldBlock) -> Self {
        RawBlock {
            name: b.name,
            classes: b.classes,
            parity: b.parity,
            closed: b.closed,
            sw: b.sw,
            torus: b.torus,
            e1_relative: b.e1_relative,
            pairings: b.pairings,
            psc_split: b.psc_split,
        }
    }
}

impl ManifoldBlock {
    /// `sw` may mention any subset of `classes`; it is re-expressed over all
    /// of them.
    pub fn new<S: AsRef<str>>(name: &str, classes: &[S], sw: LaurentPoly, parity: u8, closed: bool) -> Result<Self> {
        if parity > 1 {
            return Err(Error::MalformedInput(format!("parity must be 0 or 1, got {parity}")));
        }
        let classes: Vec<String> = classes.iter().map(|c| c.as_ref().to_owned()).collect();
        if classes.is_empty() {
            return Err(Error::MalformedInput("a block needs at least one class".into()));
        }
        let sw = sw.over_vars(&classes)?;
        Ok(ManifoldBlock {
            name: name.to_owned(),
            classes,
            sw,
            parity,
            closed,
            torus: None,
            e1_relative: false,
            pairings: BTreeMap::new(),
            psc_split: false,
        })
    }

    /// The relative block of the rational elliptic surface along a fiber
    /// with class `fiber`.
    pub fn e1(fiber: &str) -> Self {
        let mut b = ManifoldBlock::new("E(1)", &[fiber], LaurentPoly::one(), 1, false).expect("valid block");
        b.e1_relative = true;
        b
    }

    pub fn with_torus(mut self, class: &str) -> Result<Self> {
        if !self.classes.iter().any(|c| c == class) {
            return Err(Error::UnknownClass(class.to_owned()));
        }
        self.torus = Some(class.to_owned());
        Ok(self)
    }

    pub fn with_pairings(mut self, pairings: BTreeMap<String, i64>) -> Result<Self> {
        if let Some(c) = pairings.keys().find(|c| !self.classes.contains(c)) {
            return Err(Error::UnknownClass(c.clone()));
        }
        self.pairings = pairings;
        Ok(self)
    }

    pub fn with_e1_relative(mut self, flag: bool) -> Self {
        self.e1_relative = flag;
        self
    }

    pub fn with_psc_split(mut self, flag: bool) -> Self {
        self.psc_split = flag;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn classes(&self) -> &[String] {
        &self.classes
    }

    pub fn sw(&self) -> &LaurentPoly {
        &self.sw
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }

    pub fn closed(&self) -> bool {
        self.closed
    }

    pub fn e1_relative(&self) -> bool {
        self.e1_relative
    }

    pub fn psc_split(&self) -> bool {
        self.psc_split
    }

    pub fn pairings(&self) -> &BTreeMap<String, i64> {
        &self.pairings
    }

    /// The torus class: the declared one, else the first class.
    pub fn torus(&self) -> &str {
        self.torus.as_deref().unwrap_or(&self.classes[0])
    }

    fn torus_factor(&self, class: &str) -> LaurentPoly {
        if self.e1_relative {
            LaurentPoly::one()
        } else {
            t_minus_t_inv(class)
        }
    }
}

/// `t − t⁻¹` in the variable `var`.
pub fn t_minus_t_inv(var: &str) -> LaurentPoly {
    LaurentPoly::univariate(var, &[(1, 1), (-1, -1)])
}

/// Support of the SW element with its coefficients, in canonical order.
///
/// The zero class is included when its coefficient is nonzero.
pub fn basic_classes(m: &ManifoldBlock) -> Vec<(Exponent, BigInt)> {
    m.sw.terms().map(|(e, c)| (e.clone(), c.clone())).collect()
}

/// Conjugation symmetry: `coef(−β) = (−1)^ε · coef(β)` for every `β`.
///
/// Only meaningful for closed blocks; callers check `closed` themselves.
pub fn check_symmetry(m: &ManifoldBlock) -> bool {
    let mirrored = m.sw.invert_all();
    if m.parity == 0 {
        mirrored == m.sw
    } else {
        mirrored == -&m.sw
    }
}

/// Symmetrized Alexander polynomial at squared variables, with the sign of a
/// knot polynomial fixed by `Δ(1) = 1`.
pub fn squared_symmetric(delta: &AssociateClass) -> Result<LaurentPoly> {
    let q = delta.symmetrized()?;
    Ok(if q.eval_at_one().is_negative() { -q } else { q })
}

/// `SW_{X_K} = Δ^sym_K(t²)·SW_X` with `t` the class `class`.
pub fn knot_surgery(x: &ManifoldBlock, delta: &AssociateClass, class: &str) -> Result<ManifoldBlock> {
    if !x.classes.iter().any(|c| c == class) {
        return Err(Error::UnknownClass(class.to_owned()));
    }
    let used = delta.poly().used_vars();
    if used.len() > 1 {
        return Err(Error::ArityMismatch { expected: 1, found: used.len() });
    }
    let sym = squared_symmetric(delta)?;
    let mut sigma = Specialization::new(&x.classes)?;
    for v in sym.vars() {
        sigma = sigma.map_to(v, class, 1)?;
    }
    let factor = sym.specialize(&sigma)?;
    Ok(ManifoldBlock {
        name: format!("{}_K", x.name),
        sw: &factor * &x.sw,
        e1_relative: false,
        ..x.clone()
    })
}

/// Link surgery on one block per component.
///
/// Block `j`'s torus class becomes the `j`-th variable of `delta`. Non-torus
/// class names used by more than one block are suffixed with `_j`
/// (1-based) to keep the alphabets disjoint.
pub fn link_surgery(blocks: &[ManifoldBlock], delta: &AssociateClass) -> Result<ManifoldBlock> {
    let n = blocks.len();
    if delta.vars().len() != n {
        return Err(Error::ArityMismatch { expected: delta.vars().len(), found: n });
    }
    let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
    for b in blocks {
        for c in b.classes.iter().filter(|c| c.as_str() != b.torus()) {
            *seen.entry(c.as_str()).or_default() += 1;
        }
    }
    let torus_names: Vec<String> = blocks.iter().map(|b| b.torus().to_owned()).collect();
    let torus_shared = torus_names.iter().collect::<BTreeSet<_>>().len() < n;

    let mut classes: Vec<String> = Vec::new();
    let mut renamed: Vec<LaurentPoly> = Vec::with_capacity(n);
    let mut tori: Vec<String> = Vec::with_capacity(n);
    let mut pairings = BTreeMap::new();
    for (j, b) in blocks.iter().enumerate() {
        let qualify = |c: &str, shared: bool| if shared { format!("{c}_{}", j + 1) } else { c.to_owned() };
        let names: Vec<String> = b
            .classes
            .iter()
            .map(|c| {
                if c == b.torus() {
                    qualify(c, torus_shared)
                } else {
                    qualify(c, seen[c.as_str()] > 1)
                }
            })
            .collect();
        for name in &names {
            if classes.contains(name) {
                return Err(Error::Precondition(format!("class `{name}` occurs in two blocks")));
            }
            classes.push(name.clone());
        }
        let torus = names[b.classes.iter().position(|c| c == b.torus()).unwrap()].clone();
        let mut sigma = Specialization::new(&names)?;
        for (k, c) in b.classes.iter().enumerate() {
            sigma = sigma.map_to(c, &names[k], 1)?;
        }
        let sw = b.sw.specialize(&sigma)?;
        renamed.push(&sw * &b.torus_factor(&torus));
        for (c, v) in &b.pairings {
            pairings.insert(names[b.classes.iter().position(|x| x == c).unwrap()].clone(), *v);
        }
        tori.push(torus);
    }

    let sym = squared_symmetric(delta)?;
    let mut sigma = Specialization::new(&classes)?;
    for (v, torus) in delta.vars().iter().zip(&tori) {
        sigma = sigma.map_to(v, torus, 1)?;
    }
    let mut sw = sym.specialize(&sigma)?;
    for f in &renamed {
        sw = &sw * f;
    }
    sw = sw.over_vars(&classes)?;

    let names: Vec<&str> = blocks.iter().map(|b| b.name.as_str()).collect();
    ManifoldBlock {
        name: format!("X({};L)", names.join(",")),
        classes,
        sw,
        parity: (blocks.iter().map(|b| b.parity as u32).sum::<u32>() % 2) as u8,
        closed: n >= 2 && blocks.iter().all(|b| b.closed || b.e1_relative),
        torus: None,
        e1_relative: false,
        pairings: BTreeMap::new(),
        psc_split: false,
    }
    .with_pairings(pairings)
}

/// Symmetrized axis-link polynomial `Δ^sym_{L_B}(t², τ²)` for a braid whose
/// closure is a knot, over `[torus, rim]`.
///
/// The axis meridian carries the torus class and the braid meridian the rim
/// class.
pub fn axis_link_symmetric(b: &BraidWord, torus: &str, rim: &str) -> Result<LaurentPoly> {
    let closure = b.closure();
    if !closure.is_knot() {
        return Err(Error::NotAKnot(closure.count));
    }
    let sym = squared_symmetric(&axis_alexander(b)?)?;
    let sigma = Specialization::new(&[torus, rim])?
        .map_to(AXIS_VAR, torus, 1)?
        .map_to("t", rim, 1)?;
    sym.specialize(&sigma)
}

/// Relative invariant of the pair `(X, T_B)`:
/// `Δ^sym_{L_B}(t², τ²)·SW_X·(t − t⁻¹)`, with `t` the torus class of `x`
/// and `τ` the new rim class [`RIM_CLASS`].
///
/// Every basic class of `x` must be orthogonal to the torus according to the
/// declared pairings.
pub fn fibersum_relative(x: &ManifoldBlock, b: &BraidWord, m: usize) -> Result<ManifoldBlock> {
    if b.strands() != m {
        return Err(Error::StrandMismatch(b.strands(), m));
    }
    if x.classes.iter().any(|c| c == RIM_CLASS) {
        return Err(Error::VariableMismatch(format!("block already has a class `{RIM_CLASS}`")));
    }
    for (e, _) in x.sw.terms() {
        let dot: i64 = x.classes.iter().zip(e).map(|(c, k)| k * x.pairings.get(c).copied().unwrap_or(0)).sum();
        if dot != 0 {
            return Err(Error::Precondition(format!(
                "basic class {e:?} pairs to {dot} with the torus `{}`",
                x.torus()
            )));
        }
    }
    let torus = x.torus().to_owned();
    let mut classes = x.classes.clone();
    classes.push(RIM_CLASS.to_owned());
    let link = axis_link_symmetric(b, &torus, RIM_CLASS)?.over_vars(&classes)?;
    let sw = &(&link * &x.sw) * &x.torus_factor(&torus);
    let mut pairings = x.pairings.clone();
    pairings.insert(RIM_CLASS.to_owned(), 0);
    Ok(ManifoldBlock {
        name: format!("({},T_B)", x.name),
        sw: sw.over_vars(&classes)?,
        classes,
        parity: (x.parity + 1) % 2,
        closed: x.closed,
        torus: Some(torus),
        e1_relative: false,
        pairings,
        psc_split: false,
    })
}

/// Rewrite the fiber class as a power of the torus class: `t_F ↦ t^m`.
pub fn fiber_to_torus(p: &LaurentPoly, fiber: &str, torus: &str, m: i64) -> Result<LaurentPoly> {
    let mut target: Vec<String> = p.vars().iter().filter(|v| v.as_str() != fiber).cloned().collect();
    if !target.iter().any(|v| v == torus) {
        target.push(torus.to_owned());
    }
    let mut sigma = Specialization::new(&target)?;
    for v in p.vars() {
        sigma = if v == fiber { sigma.map_to(v, torus, m)? } else { sigma.map_to(v, v, 1)? };
    }
    p.specialize(&sigma)
}

/// Pushforward to the base of a threefold simple cover:
/// `Δ^sym_L(t², t², t²)·SW_X³·(t − t⁻¹)³` with `t` the torus class of `x`.
pub fn cover_pushforward(delta: &AssociateClass, x: &ManifoldBlock) -> Result<LaurentPoly> {
    if delta.vars().len() != 3 {
        return Err(Error::ArityMismatch { expected: 3, found: delta.vars().len() });
    }
    let torus = x.torus();
    let sym = squared_symmetric(delta)?;
    let mut sigma = Specialization::new(&x.classes)?;
    for v in sym.vars() {
        sigma = sigma.map_to(v, torus, 1)?;
    }
    let base = sym.specialize(&sigma)?;
    let factor = &x.sw * &x.torus_factor(torus);
    Ok(&base * &factor.pow(3))
}

/// Adjunction inequality `2g − 2 ≥ Σ² + β·Σ` against every listed `β·Σ`.
pub fn adjunction_check(genus: u64, self_intersection: i64, pairings: &[i64]) -> Result<bool> {
    if genus < 1 {
        return Err(Error::Precondition("adjunction inequality needs genus at least 1".into()));
    }
    let lhs = 2 * genus as i128 - 2;
    Ok(pairings.iter().all(|&p| lhs >= self_intersection as i128 + p as i128))
}

/// The block with its SW element zeroed when it is declared to split along
/// a positive-scalar-curvature 3-manifold; unchanged otherwise.
pub fn vanishing_flag(m: &ManifoldBlock) -> ManifoldBlock {
    if !m.psc_split {
        return m.clone();
    }
    ManifoldBlock { sw: LaurentPoly::zero(&m.classes).expect("valid classes"), ..m.clone() }
}

/// One of the product formulas with its inputs.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SurgeryRecipe {
    Knot { block: ManifoldBlock, delta: AssociateClass, class: String },
    Link { blocks: Vec<ManifoldBlock>, delta: AssociateClass },
    Fibersum { block: ManifoldBlock, braid: BraidWord },
    CoverPushforward { block: ManifoldBlock, delta: AssociateClass },
}

/// What a recipe produces.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum RecipeOutput {
    Block(ManifoldBlock),
    Element(LaurentPoly),
}

impl SurgeryRecipe {
    pub fn apply(&self) -> Result<RecipeOutput> {
        Ok(match self {
            SurgeryRecipe::Knot { block, delta, class } => RecipeOutput::Block(knot_surgery(block, delta, class)?),
            SurgeryRecipe::Link { blocks, delta } => RecipeOutput::Block(link_surgery(blocks, delta)?),
            SurgeryRecipe::Fibersum { block, braid } => {
                RecipeOutput::Block(fibersum_relative(block, braid, braid.strands())?)
            }
            SurgeryRecipe::CoverPushforward { block, delta } => {
                RecipeOutput::Element(cover_pushforward(delta, block)?)
            }
        })
    }
}
