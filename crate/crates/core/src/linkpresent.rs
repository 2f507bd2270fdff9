//! Free-group words, the Artin action, and meridional presentations of
//! closed braids and of braid-plus-axis links.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{closure_components, BraidWord};
use crate::error::{Error, Result};

/// A generator letter: generator id and exponent `±1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: usize, exponent: i8) -> Self {
        assert!(exponent == 1 || exponent == -1, "letter exponents are ±1");
        Letter { generator, exponent }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, exponent: -self.exponent }
    }
}

/// A word in a free group. Stored as written; call [`FreeWord::reduce`] to
/// cancel adjacent inverse pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn empty() -> Self {
        FreeWord::default()
    }

    pub fn generator(g: usize) -> Self {
        FreeWord { letters: vec![Letter::new(g, 1)] }
    }

    /// From signed 1-based ids: `k` is `x_k`, `-k` is `x_k⁻¹`.
    pub fn from_signed(ids: &[i64]) -> Result<Self> {
        ids.iter()
            .map(|&k| {
                if k == 0 {
                    Err(Error::MalformedInput("generator id 0 in signed word".into()))
                } else {
                    Ok(Letter::new(k.unsigned_abs() as usize - 1, if k > 0 { 1 } else { -1 }))
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(|letters| FreeWord { letters })
    }

    pub fn to_signed(&self) -> Vec<i64> {
        self.letters
            .iter()
            .map(|l| (l.generator as i64 + 1) * l.exponent as i64)
            .collect()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    pub fn concat(&self, other: &FreeWord) -> FreeWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        FreeWord { letters }
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    /// Free reduction.
    pub fn reduce(&self) -> FreeWord {
        let mut out: Vec<Letter> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        FreeWord { letters: out }
    }

    /// Cyclic reduction of the freely reduced word.
    pub fn cyclic_reduce(&self) -> FreeWord {
        let mut w = self.reduce().letters;
        let mut lo = 0;
        while w.len() >= lo + 2 && w[lo] == w[w.len() - 1].inverse() {
            lo += 1;
            w.pop();
        }
        FreeWord { letters: w.split_off(lo) }
    }

    /// Exponent sum of each generator.
    pub fn exponent_sums(&self, generators: usize) -> Vec<i64> {
        let mut sums = vec![0; generators];
        for l in &self.letters {
            sums[l.generator] += l.exponent as i64;
        }
        sums
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }
}

impl FromIterator<Letter> for FreeWord {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        FreeWord { letters: iter.into_iter().collect() }
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}", l.generator + 1)?;
            if l.exponent < 0 {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

impl Serialize for FreeWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_signed().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FreeWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let ids = Vec::<i64>::deserialize(d)?;
        FreeWord::from_signed(&ids).map_err(serde::de::Error::custom)
    }
}

/// An endomorphism of the free group on `x_0 .. x_{n-1}`, by generator images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeGroupEndomorphism {
    images: Vec<FreeWord>,
}

impl FreeGroupEndomorphism {
    pub fn identity(n: usize) -> Self {
        FreeGroupEndomorphism { images: (0..n).map(FreeWord::generator).collect() }
    }

    pub fn from_images(images: Vec<FreeWord>) -> Result<Self> {
        let n = images.len();
        if images.iter().any(|w| w.max_generator().is_some_and(|g| g >= n)) {
            return Err(Error::MalformedInput(format!("image uses a generator outside x1..x{n}")));
        }
        Ok(FreeGroupEndomorphism { images })
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, g: usize) -> &FreeWord {
        &self.images[g]
    }

    pub fn images(&self) -> &[FreeWord] {
        &self.images
    }

    pub fn apply(&self, w: &FreeWord) -> FreeWord {
        let mut out = FreeWord::empty();
        for l in w.letters() {
            let img = &self.images[l.generator];
            if l.exponent > 0 {
                out.letters.extend_from_slice(&img.letters);
            } else {
                out.letters.extend(img.letters.iter().rev().map(|x| x.inverse()));
            }
        }
        out.reduce()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &FreeGroupEndomorphism) -> FreeGroupEndomorphism {
        FreeGroupEndomorphism { images: other.images.iter().map(|w| self.apply(w)).collect() }
    }

    pub fn reduce(&self) -> FreeGroupEndomorphism {
        FreeGroupEndomorphism { images: self.images.iter().map(FreeWord::reduce).collect() }
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(g, w)| w.reduce() == FreeWord::generator(g))
    }
}

fn generator_action(n: usize, letter: i64) -> FreeGroupEndomorphism {
    let i = letter.unsigned_abs() as usize - 1;
    let x = |g: usize, e: i8| Letter::new(g, e);
    let mut phi = FreeGroupEndomorphism::identity(n);
    if letter > 0 {
        phi.images[i] = [x(i, 1), x(i + 1, 1), x(i, -1)].into_iter().collect();
        phi.images[i + 1] = FreeWord::generator(i);
    } else {
        phi.images[i] = FreeWord::generator(i + 1);
        phi.images[i + 1] = [x(i + 1, -1), x(i, 1), x(i + 1, 1)].into_iter().collect();
    }
    phi
}

/// The Artin action of a braid on the free group of its strand meridians.
///
/// For the word `s₁ s₂ ⋯ s_k` this is `φ(s₁) ∘ φ(s₂) ∘ ⋯ ∘ φ(s_k)`, so
/// `artin_action(b·c) = artin_action(b) ∘ artin_action(c)`. Images are kept
/// freely reduced.
pub fn artin_action(b: &BraidWord) -> FreeGroupEndomorphism {
    let n = b.strands();
    let mut beta = FreeGroupEndomorphism::identity(n);
    for &w in b.letters() {
        beta = beta.compose(&generator_action(n, w));
    }
    beta
}

/// A generator together with the link component its meridian encircles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub id: usize,
    pub component: usize,
}

/// A finite presentation whose generators are meridians, with the
/// abelianization sending each generator to its component's variable.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generators: Vec<Generator>,
    pub relators: Vec<FreeWord>,
    /// Variable names, one per component.
    pub vars: Vec<String>,
    /// Variable index of each generator.
    pub abelianization: Vec<usize>,
}

impl GroupPresentation {
    /// Check the meridional invariants: every relator abelianizes to zero and
    /// the deficiency is 0 or 1.
    pub fn validate(&self) -> Result<()> {
        let n = self.generators.len();
        if self.abelianization.len() != n {
            return Err(Error::MalformedInput("abelianization table length differs from generator count".into()));
        }
        if let Some(&bad) = self.abelianization.iter().find(|&&v| v >= self.vars.len()) {
            return Err(Error::MalformedInput(format!("abelianization refers to variable {bad}")));
        }
        for (g, gen) in self.generators.iter().enumerate() {
            if gen.id != g {
                return Err(Error::MalformedInput("generator ids must be 0..n in order".into()));
            }
        }
        for r in &self.relators {
            if let Some(g) = r.max_generator().filter(|&g| g >= n) {
                return Err(Error::UnmappedGenerator(g));
            }
            if self.abelianize(r).iter().any(|&k| k != 0) {
                return Err(Error::Precondition(format!("relator {r} does not abelianize to zero")));
            }
        }
        let def = self.deficiency();
        if def != 0 && def != 1 {
            return Err(Error::Precondition(format!("deficiency {def} is not 0 or 1")));
        }
        Ok(())
    }

    pub fn deficiency(&self) -> i64 {
        self.generators.len() as i64 - self.relators.len() as i64
    }

    pub fn num_components(&self) -> usize {
        self.vars.len()
    }

    /// Exponent vector of a word under the abelianization.
    pub fn abelianize(&self, w: &FreeWord) -> Vec<i64> {
        let mut v = vec![0; self.vars.len()];
        for l in w.letters() {
            v[self.abelianization[l.generator]] += l.exponent as i64;
        }
        v
    }
}

fn component_vars(count: usize) -> Vec<String> {
    if count == 1 {
        vec!["t".to_owned()]
    } else {
        (1..=count).map(|i| format!("t{i}")).collect()
    }
}

/// `⟨x₁..xₙ | β(xᵢ)xᵢ⁻¹, i < n⟩` for the closure of `b`; the last relator
/// is redundant and dropped. Variables are `t` for a knot, else `t1..tk`.
pub fn closed_braid_presentation(b: &BraidWord) -> GroupPresentation {
    let n = b.strands();
    let closure = closure_components(b);
    let beta = artin_action(b);
    let relators = (0..n.saturating_sub(1))
        .map(|i| beta.image(i).concat(&FreeWord::generator(i).inverse()))
        .collect();
    GroupPresentation {
        generators: (0..n).map(|id| Generator { id, component: closure.label[id] }).collect(),
        relators,
        vars: component_vars(closure.count),
        abelianization: closure.label.clone(),
    }
}

/// Presentation of the closed braid together with its axis.
///
/// Generators are the strand meridians `x₁..xₙ` and the axis meridian `a`
/// (id `n`, variable `tau`, last component). Relators are
/// `a·β(xᵢ)·a⁻¹·xᵢ⁻¹` for every strand.
pub fn braid_axis_presentation(b: &BraidWord) -> GroupPresentation {
    let n = b.strands();
    let closure = closure_components(b);
    let beta = artin_action(b);
    let a = FreeWord::generator(n);
    let relators = (0..n)
        .map(|i| {
            a.concat(beta.image(i))
                .concat(&a.inverse())
                .concat(&FreeWord::generator(i).inverse())
        })
        .collect();
    let mut generators: Vec<Generator> =
        (0..n).map(|id| Generator { id, component: closure.label[id] }).collect();
    generators.push(Generator { id: n, component: closure.count });
    let mut vars = component_vars(closure.count);
    vars.push(AXIS_VAR.to_owned());
    let mut abelianization = closure.label.clone();
    abelianization.push(closure.count);
    GroupPresentation { generators, relators, vars, abelianization }
}

/// Variable name of the axis meridian in [`braid_axis_presentation`].
pub const AXIS_VAR: &str = "tau";
