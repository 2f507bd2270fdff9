//! Integer Laurent polynomials in named variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub type Exponent = Vec<i64>;

/// A finitely supported map from exponent vectors to nonzero integers.
///
/// Terms iterate in lexicographically descending exponent order, which is
/// also the serialization order. Arithmetic between polynomials over
/// different variable lists first extends both to the union of their
/// variables; equality does the same, so `t` over `[t]` equals `t` over
/// `[t, tau]`.
#[derive(Debug, Clone)]
pub struct LaurentPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponent, BigInt>,
}

fn check_vars(vars: &[String]) -> Result<()> {
    for (i, v) in vars.iter().enumerate() {
        if v.is_empty() {
            return Err(Error::VariableMismatch("empty variable name".into()));
        }
        if vars[..i].contains(v) {
            return Err(Error::VariableMismatch(format!("duplicate variable `{v}`")));
        }
    }
    Ok(())
}

fn add_term(terms: &mut BTreeMap<Exponent, BigInt>, exp: Exponent, coef: BigInt) {
    if coef.is_zero() {
        return;
    }
    match terms.entry(exp) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(coef);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += coef;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl LaurentPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_owned()).collect();
        check_vars(&vars)?;
        Ok(LaurentPoly { vars, terms: BTreeMap::new() })
    }

    /// Build from `(exponent, coefficient)` pairs; like terms are collected.
    pub fn from_terms<S, I, C>(vars: &[S], terms: I) -> Result<Self>
    where
        S: AsRef<str>,
        I: IntoIterator<Item = (Exponent, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero(vars)?;
        for (exp, coef) in terms {
            if exp.len() != p.vars.len() {
                return Err(Error::MalformedInput(format!(
                    "exponent {exp:?} has length {}, expected {}",
                    exp.len(),
                    p.vars.len()
                )));
            }
            add_term(&mut p.terms, exp, coef.into());
        }
        Ok(p)
    }

    /// One-variable polynomial from `(exponent, coefficient)` pairs.
    pub fn univariate(var: &str, terms: &[(i64, i64)]) -> Self {
        Self::from_terms(&[var], terms.iter().map(|&(e, c)| (vec![e], c)))
            .expect("single nonempty variable")
    }

    /// The integer constant `c` with no variables.
    pub fn constant(c: impl Into<BigInt>) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, Vec::new(), c.into());
        LaurentPoly { vars: Vec::new(), terms }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn monomial<S: AsRef<str>>(vars: &[S], exp: Exponent, coef: impl Into<BigInt>) -> Result<Self> {
        Self::from_terms(vars, [(exp, coef.into())])
    }

    /// The variable `name` itself.
    pub fn var(name: &str) -> Self {
        Self::univariate(name, &[(1, 1)])
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (lexicographically descending) order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exp: &[i64]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Coefficient at an exponent given by variable name; absent names count as 0.
    pub fn coeff_named(&self, exp: &[(&str, i64)]) -> BigInt {
        let mut e = vec![0; self.vars.len()];
        for &(name, k) in exp {
            match self.var_index(name) {
                Some(i) => e[i] = k,
                None if k == 0 => {}
                None => return BigInt::zero(),
            }
        }
        self.coeff(&e)
    }

    /// Lexicographically largest term.
    pub fn leading_term(&self) -> Option<(&Exponent, &BigInt)> {
        self.terms.iter().next_back()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True if the only term is a constant (or the polynomial is zero).
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&k| k == 0))
    }

    /// Variables with a nonzero exponent in some term.
    pub fn used_vars(&self) -> Vec<&str> {
        (0..self.vars.len())
            .filter(|&i| self.terms.keys().any(|e| e[i] != 0))
            .map(|i| self.vars[i].as_str())
            .collect()
    }

    /// Re-express over `vars`, which must contain every variable in use.
    /// Unused variables may be dropped.
    pub fn over_vars<S: AsRef<str>>(&self, vars: &[S]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_owned()).collect();
        check_vars(&vars)?;
        let mut idx = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            match vars.iter().position(|w| w == v) {
                Some(j) => idx.push(Some(j)),
                None if self.terms.keys().all(|e| e[i] == 0) => idx.push(None),
                None => {
                    return Err(Error::VariableMismatch(format!("variable `{v}` missing from target list")));
                }
            }
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; vars.len()];
                for (i, &k) in e.iter().enumerate() {
                    if let Some(j) = idx[i] {
                        ne[j] = k;
                    }
                }
                (ne, c.clone())
            })
            .collect();
        Ok(LaurentPoly { vars, terms })
    }

    /// Append any of `extra` not already present.
    pub fn extend_vars<S: AsRef<str>>(&self, extra: &[S]) -> Self {
        let mut vars = self.vars.clone();
        for v in extra {
            if !vars.iter().any(|w| w == v.as_ref()) {
                vars.push(v.as_ref().to_owned());
            }
        }
        self.over_vars(&vars).expect("superset of own variables")
    }

    /// Both operands over the union of their variables (`a`'s order first).
    pub fn align(a: &Self, b: &Self) -> (Self, Self) {
        if a.vars == b.vars {
            return (a.clone(), b.clone());
        }
        let a2 = a.extend_vars(&b.vars);
        let b2 = b.over_vars(&a2.vars).expect("union of variables");
        (a2, b2)
    }

    pub fn rename_var(&self, old: &str, new: &str) -> Result<Self> {
        let i = self.var_index(old).ok_or_else(|| Error::UnknownClass(old.to_owned()))?;
        if old != new && self.var_index(new).is_some() {
            return Err(Error::VariableMismatch(format!("variable `{new}` already present")));
        }
        let mut p = self.clone();
        p.vars[i] = new.to_owned();
        Ok(p)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly { vars: self.vars.clone(), terms: BTreeMap::new() };
        }
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Multiply by the monomial with exponent `shift`.
    pub fn shift(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.vars.len());
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(shift).map(|(a, b)| a + b).collect(), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one().over_vars(&self.vars).expect("constant");
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Componentwise minimum exponent; `None` for zero.
    pub fn min_exponents(&self) -> Option<Exponent> {
        self.fold_exponents(i64::min)
    }

    pub fn max_exponents(&self) -> Option<Exponent> {
        self.fold_exponents(i64::max)
    }

    fn fold_exponents(&self, f: fn(i64, i64) -> i64) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, e| acc.iter().zip(e).map(|(&a, &b)| f(a, b)).collect()))
    }

    /// Degree span `max - min` in the named variable.
    pub fn span(&self, var: &str) -> Option<i64> {
        let i = self.var_index(var)?;
        Some(self.max_exponents()?[i] - self.min_exponents()?[i])
    }

    /// Value with every variable set to 1.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitute `v ↦ v⁻¹` for each named variable.
    pub fn invert_vars(&self, names: &[&str]) -> Result<Self> {
        let idx: Vec<usize> = names
            .iter()
            .map(|n| self.var_index(n).ok_or_else(|| Error::UnknownClass((*n).to_owned())))
            .collect::<Result<_>>()?;
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    for &i in &idx {
                        e[i] = -e[i];
                    }
                    (e, c.clone())
                })
                .collect(),
        })
    }

    /// `P(v₁⁻¹, …, vₙ⁻¹)`.
    pub fn invert_all(&self) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().map(|k| -k).collect(), c.clone())).collect(),
        }
    }

    /// Multiply every exponent by `k` (`v ↦ vᵏ` for all variables).
    pub fn dilate(&self, k: i64) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            add_term(&mut terms, e.iter().map(|x| x * k).collect(), c.clone());
        }
        LaurentPoly { vars: self.vars.clone(), terms }
    }

    /// Ring homomorphism sending each variable to a monomial.
    pub fn specialize(&self, sigma: &Specialization) -> Result<Self> {
        let images: Vec<&Exponent> = self
            .vars
            .iter()
            .enumerate()
            .map(|(i, v)| match sigma.images.get(v) {
                Some(img) => Ok(Some(img)),
                // a variable that never occurs needs no image
                None if self.terms.keys().all(|e| e[i] == 0) => Ok(None),
                None => Err(Error::UnmappedVariable(v.clone())),
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .map(|img| img.unwrap_or(&sigma.zero))
            .collect();
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = sigma.zero.clone();
            for (k, img) in e.iter().zip(&images) {
                for (slot, x) in ne.iter_mut().zip(img.iter()) {
                    *slot += k * x;
                }
            }
            add_term(&mut terms, ne, c.clone());
        }
        Ok(LaurentPoly { vars: sigma.target.clone(), terms })
    }

    /// Set every variable equal to `var`.
    pub fn collapse_to(&self, var: &str) -> Self {
        let mut sigma = Specialization::new(&[var]).expect("one variable");
        for v in &self.vars {
            sigma = sigma.map(v, &[1]);
        }
        self.specialize(&sigma).expect("all variables mapped")
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`
    /// in the Laurent ring.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        let (num, den) = Self::align(self, d);
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(num);
        }
        // Shift both into the polynomial ring with no monomial factor in the
        // divisor; a Laurent quotient then must itself be a polynomial.
        let num_min = num.min_exponents().unwrap();
        let den_min = den.min_exponents().unwrap();
        let neg = |v: &Exponent| v.iter().map(|k| -k).collect::<Vec<_>>();
        let mut rem = num.shift(&neg(&num_min));
        let den = den.shift(&neg(&den_min));
        let (den_lead_exp, den_lead_coef) = {
            let (e, c) = den.leading_term().unwrap();
            (e.clone(), c.clone())
        };
        let mut quot = BTreeMap::new();
        while let Some((e, c)) = rem.leading_term() {
            let qe: Exponent = e.iter().zip(&den_lead_exp).map(|(a, b)| a - b).collect();
            if qe.iter().any(|&k| k < 0) {
                return None;
            }
            let (qc, r) = c.div_rem(&den_lead_coef);
            if !r.is_zero() {
                return None;
            }
            for (de, dc) in &den.terms {
                let te: Exponent = de.iter().zip(&qe).map(|(a, b)| a + b).collect();
                add_term(&mut rem.terms, te, -(dc * &qc));
            }
            add_term(&mut quot, qe, qc);
        }
        let q = LaurentPoly { vars: num.vars.clone(), terms: quot };
        let back: Exponent = num_min.iter().zip(&den_min).map(|(a, b)| a - b).collect();
        Some(q.shift(&back))
    }

    /// The canonical associate under multiplication by `±monomial`: minimum
    /// exponent 0 in every variable and a positive leading coefficient.
    pub fn normalize_units(&self) -> Self {
        let Some(min) = self.min_exponents() else {
            return self.clone();
        };
        let neg: Exponent = min.iter().map(|k| -k).collect();
        let p = self.shift(&neg);
        if p.leading_term().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            -&p
        } else {
            p
        }
    }

    /// The symmetric representative at squared variables.
    ///
    /// Normalizes units, doubles every exponent, and shifts so the support is
    /// centered at the origin. The result satisfies `Q(v⁻¹) = ±Q(v)`;
    /// anything else is reported as [`Error::AsymmetricSupport`]. Zero maps
    /// to zero.
    pub fn symmetrize(&self) -> Result<Self> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let doubled = self.normalize_units().dilate(2);
        let min = doubled.min_exponents().unwrap();
        let max = doubled.max_exponents().unwrap();
        let center: Exponent = min.iter().zip(&max).map(|(a, b)| -(a + b) / 2).collect();
        let q = doubled.shift(&center);
        let mirrored = q.invert_all();
        if mirrored == q || mirrored == -&q {
            Ok(q)
        } else {
            Err(Error::AsymmetricSupport)
        }
    }

    /// `+1` if `Q(v⁻¹) = Q(v)`, `-1` if `Q(v⁻¹) = -Q(v)`, else `None`.
    pub fn inversion_parity(&self) -> Option<i8> {
        let m = self.invert_all();
        if m == *self {
            Some(1)
        } else if m == -self {
            Some(-1)
        } else {
            None
        }
    }
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        if self.vars == other.vars {
            return self.terms == other.terms;
        }
        let (a, b) = Self::align(self, other);
        a.terms == b.terms
    }
}

impl Eq for LaurentPoly {}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut a, b) = LaurentPoly::align(self, rhs);
        for (e, c) in b.terms {
            add_term(&mut a.terms, e, c);
        }
        a
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (mut a, b) = LaurentPoly::align(self, rhs);
        for (e, c) in b.terms {
            add_term(&mut a.terms, e, -c);
        }
        a
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    // exponents add when monomials multiply
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let (a, b) = LaurentPoly::align(self, rhs);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                add_term(&mut terms, ea.iter().zip(eb).map(|(x, y)| x + y).collect(), ca * cb);
            }
        }
        LaurentPoly { vars: a.vars, terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly { (&self).$m(&rhs) }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::constant(0), |a, b| a + b)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |a, b| a * b)
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

/// Human-readable form, e.g. `t^2 - 1 + t^-2` or `2*t*tau^-1`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(k, _)| **k != 0)
                .map(|(k, v)| if *k == 1 { v.clone() } else { format!("{v}^{k}") })
                .collect();
            let abs = c.abs();
            let sign = if c.is_negative() { "-" } else { "+" };
            if n == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// A ring homomorphism given by monomial images of variables.
#[derive(Debug, Clone)]
pub struct Specialization {
    target: Vec<String>,
    images: BTreeMap<String, Exponent>,
    zero: Exponent,
}

impl Specialization {
    pub fn new<S: AsRef<str>>(target: &[S]) -> Result<Self> {
        let target: Vec<String> = target.iter().map(|v| v.as_ref().to_owned()).collect();
        check_vars(&target)?;
        let zero = vec![0; target.len()];
        Ok(Specialization { target, images: BTreeMap::new(), zero })
    }

    /// Send `var` to the monomial with exponent `image` over the target variables.
    pub fn map(mut self, var: &str, image: &[i64]) -> Self {
        assert_eq!(image.len(), self.target.len(), "image length must match target variables");
        self.images.insert(var.to_owned(), image.to_vec());
        self
    }

    /// Send `var` to the target variable `to` raised to `power`.
    pub fn map_to(self, var: &str, to: &str, power: i64) -> Result<Self> {
        let j = self
            .target
            .iter()
            .position(|v| v == to)
            .ok_or_else(|| Error::UnknownClass(to.to_owned()))?;
        let mut img = vec![0; self.target.len()];
        img[j] = power;
        Ok(self.map(var, &img))
    }

    pub fn target(&self) -> &[String] {
        &self.target
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    exp: Exponent,
    coef: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonPoly {
    vars: Vec<String>,
    terms: Vec<JsonTerm>,
}

/// `{"vars":[..],"terms":[{"exp":[..],"coef":"<decimal>"},..]}` with terms in
/// canonical order.
impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonPoly {
            vars: self.vars.clone(),
            terms: self
                .terms()
                .map(|(e, c)| JsonTerm { exp: e.clone(), coef: c.to_str_radix(10) })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonPoly::deserialize(d)?;
        let mut seen = std::collections::BTreeSet::new();
        let mut terms = Vec::with_capacity(raw.terms.len());
        for t in raw.terms {
            let coef: BigInt = parse_decimal(&t.coef).ok_or_else(|| D::Error::custom(format!("bad coefficient `{}`", t.coef)))?;
            if coef.is_zero() {
                return Err(D::Error::custom("zero coefficients are not stored"));
            }
            if !seen.insert(t.exp.clone()) {
                return Err(D::Error::custom(format!("repeated exponent {:?}", t.exp)));
            }
            terms.push((t.exp, coef));
        }
        LaurentPoly::from_terms(&raw.vars, terms).map_err(D::Error::custom)
    }
}

fn parse_decimal(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::univariate("t", terms)
    }

    #[test]
    fn ring_examples() {
        let a = t(&[(1, 1), (-1, -1)]);
        let b = t(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, t(&[(2, 1), (-2, -1)]));
        assert!((&a * &LaurentPoly::constant(0)).is_zero());
        // (t²−1+t⁻²)² expanded by hand
        let s = t(&[(2, 1), (0, -1), (-2, 1)]);
        assert_eq!(s.pow(2), t(&[(4, 1), (2, -2), (0, 3), (-2, -2), (-4, 1)]));
        assert_eq!(&a - &a, LaurentPoly::constant(0));
    }

    #[test]
    fn duplicate_vars_rejected() {
        assert!(matches!(LaurentPoly::zero(&["t", "t"]), Err(Error::VariableMismatch(_))));
    }

    #[test]
    fn equality_across_alphabets() {
        let p = LaurentPoly::var("t");
        assert_eq!(p, p.extend_vars(&["tau"]));
        let q = LaurentPoly::from_terms(&["tau", "t"], [(vec![0, 1], 1)]).unwrap();
        assert_eq!(p, q);
        assert_ne!(p, LaurentPoly::var("tau"));
        let sum = &p + &LaurentPoly::var("tau");
        assert_eq!(sum.vars(), &["t".to_string(), "tau".to_string()]);
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(t(&[(-1, -1), (0, 1), (1, -1)]).normalize_units(), t(&[(2, 1), (1, -1), (0, 1)]));
        assert!(LaurentPoly::constant(0).normalize_units().is_zero());
        let m = LaurentPoly::from_terms(&["t", "tau"], [(vec![2, -1], 1)]).unwrap();
        assert_eq!(m.normalize_units(), LaurentPoly::one());
        assert_eq!(t(&[(3, -5)]).normalize_units(), LaurentPoly::constant(5));
    }

    #[test]
    fn symmetrize_examples() {
        let trefoil = t(&[(2, 1), (1, -1), (0, 1)]);
        let sym = t(&[(2, 1), (0, -1), (-2, 1)]);
        assert_eq!(trefoil.symmetrize().unwrap(), sym);
        assert_eq!(LaurentPoly::one().symmetrize().unwrap(), LaurentPoly::one());
        assert_eq!(trefoil.pow(2).symmetrize().unwrap(), sym.pow(2));
        assert_eq!(t(&[(1, 1), (0, 2)]).symmetrize(), Err(Error::AsymmetricSupport));
        // antisymmetric input is accepted
        assert_eq!(t(&[(1, 1), (0, -1)]).symmetrize().unwrap(), t(&[(1, 1), (-1, -1)]));
    }

    #[test]
    fn specialize_examples() {
        let p = t(&[(1, 1), (0, -1), (-1, 1)]);
        let sq = Specialization::new(&["t"]).unwrap().map("t", &[2]);
        assert_eq!(p.specialize(&sq).unwrap(), t(&[(2, 1), (0, -1), (-2, 1)]));
        let q = LaurentPoly::from_terms(&["tau"], [(vec![0], 1), (vec![1], -1)]).unwrap();
        let one = Specialization::new::<&str>(&[]).unwrap().map("tau", &[]);
        assert!(q.specialize(&one).unwrap().is_zero());
        let three = LaurentPoly::from_terms(&["t1", "t2", "t3"], [(vec![1, 1, 0], 1), (vec![0, 0, 1], -1)]).unwrap();
        assert_eq!(three.collapse_to("t"), t(&[(2, 1), (1, -1)]));
        let partial = Specialization::new(&["t"]).unwrap().map("t1", &[1]);
        assert_eq!(three.specialize(&partial), Err(Error::UnmappedVariable("t2".into())));
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_terms(&["x", "y"], [(vec![1, 0], 1), (vec![0, -1], -2), (vec![3, 2], 5)]).unwrap();
        let b = LaurentPoly::from_terms(&["x", "y"], [(vec![-1, 1], 3), (vec![0, 0], 1)]).unwrap();
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert!((&prod + &LaurentPoly::one()).div_exact(&b).is_none());
        assert!(t(&[(2, 1), (1, -1), (0, 1)]).div_exact(&t(&[(1, 1), (0, -1)])).is_none());
        assert!(t(&[(1, 2)]).div_exact(&t(&[(0, 3)])).is_none());
        assert!(a.div_exact(&LaurentPoly::constant(0)).is_none());
    }

    #[test]
    fn json_format_is_canonical() {
        let p = LaurentPoly::from_terms(&["t", "tau"], [(vec![0, 0], -1), (vec![2, 0], 1), (vec![0, 1], 12)]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(
            s,
            r#"{"vars":["t","tau"],"terms":[{"exp":[2,0],"coef":"1"},{"exp":[0,1],"coef":"12"},{"exp":[0,0],"coef":"-1"}]}"#
        );
        let back: LaurentPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let big = "123456789012345678901234567890";
        let q: LaurentPoly = serde_json::from_str(&format!(r#"{{"vars":["t"],"terms":[{{"exp":[1],"coef":"{big}"}}]}}"#)).unwrap();
        assert_eq!(q.coeff(&[1]).to_string(), big);
        for bad in [
            r#"{"vars":["t"],"terms":[{"exp":[1,2],"coef":"1"}]}"#,
            r#"{"vars":["t"],"terms":[{"exp":[1],"coef":"0"}]}"#,
            r#"{"vars":["t"],"terms":[{"exp":[1],"coef":"1.5"}]}"#,
            r#"{"vars":["t","t"],"terms":[]}"#,
            r#"{"vars":["t"],"terms":[{"exp":[1],"coef":"1"},{"exp":[1],"coef":"2"}]}"#,
        ] {
            assert!(serde_json::from_str::<LaurentPoly>(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn display() {
        assert_eq!(t(&[(2, 1), (0, -1), (-2, 1)]).to_string(), "t^2 - 1 + t^-2");
        let p = LaurentPoly::from_terms(&["t", "tau"], [(vec![1, -1], -2), (vec![0, 0], 3)]).unwrap();
        assert_eq!(p.to_string(), "-2*t*tau^-1 + 3");
        assert_eq!(LaurentPoly::constant(0).to_string(), "0");
    }
}
