//! Braid words, their permutations, closure components, and Markov moves.
//!
//! Letter `+i` is the positive crossing of strands `i` and `i+1`; words are
//! read left to right. Strands are 1-based in text and 0-based internally.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A braid on `strands` strands as a word in the Artin generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBraid", into = "RawBraid")]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct RawBraid {
    strands: usize,
    letters: Vec<i64>,
}

impl TryFrom<RawBraid> for BraidWord {
    type Error = Error;
    fn try_from(raw: RawBraid) -> Result<Self> {
        BraidWord::new(raw.strands, raw.letters)
    }
}

impl From<BraidWord> for RawBraid {
    fn from(b: BraidWord) -> Self {
        RawBraid { strands: b.strands, letters: b.letters }
    }
}

fn check_letter(letter: i64, strands: usize) -> Result<()> {
    if letter == 0 || letter.unsigned_abs() as usize >= strands {
        Err(Error::LetterOutOfRange { letter, strands })
    } else {
        Ok(())
    }
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i64>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::MalformedInput("a braid needs at least one strand".into()));
        }
        for &w in &letters {
            check_letter(w, strands)?;
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self> {
        Self::new(strands, Vec::new())
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The inverse braid: letters reversed and negated.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|w| -w).collect(),
        }
    }

    /// Concatenation `self · other`.
    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    /// The underlying permutation; see [`braid_permutation`].
    pub fn permutation(&self) -> Permutation {
        braid_permutation(self)
    }

    pub fn closure(&self) -> Closure {
        closure_components(self)
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

/// Canonical text form, `"<n>: w1 w2 ..."`; [`parse_braid`] reads it back.
impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for w in &self.letters {
            write!(f, " {w}")?;
        }
        Ok(())
    }
}

/// Parse `<n> ":" (<signed-int>)*` with arbitrary whitespace.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let (head, tail) = text
        .split_once(':')
        .ok_or_else(|| Error::MalformedInput(format!("missing ':' in braid `{text}`")))?;
    let head = head.trim();
    if head.is_empty() || !head.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::MalformedInput(format!("bad strand count `{head}`")));
    }
    let strands: usize = head
        .parse()
        .map_err(|_| Error::MalformedInput(format!("bad strand count `{head}`")))?;
    let letters = tail
        .split_whitespace()
        .map(|tok| {
            let digits = tok.strip_prefix(['-', '+']).unwrap_or(tok);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::MalformedInput(format!("bad braid letter `{tok}`")));
            }
            tok.parse::<i64>()
                .map_err(|_| Error::MalformedInput(format!("bad braid letter `{tok}`")))
        })
        .collect::<Result<Vec<_>>>()?;
    BraidWord::new(strands, letters)
}

/// A permutation of `{0..n}` stored as its image list.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n).collect() }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::MalformedInput(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    /// `self` followed by `other`: `i ↦ other(self(i))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.images.len()];
        let mut out = Vec::new();
        for start in 0..self.images.len() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths; equal exactly for conjugate permutations.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }
}

/// Product of the transpositions `(i, i+1)` in word order; signs are ignored.
pub fn braid_permutation(b: &BraidWord) -> Permutation {
    // images[p] is the strand that ends at position p.
    let mut at: Vec<usize> = (0..b.strands).collect();
    for &w in &b.letters {
        let i = w.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    Permutation { images: at }
}

/// Components of the closed braid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Closure {
    /// Number of link components.
    pub count: usize,
    /// Component index of each (0-based) strand.
    pub label: Vec<usize>,
}

impl Closure {
    pub fn is_knot(&self) -> bool {
        self.count == 1
    }

    /// Number of strands belonging to each component.
    pub fn strands_per_component(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.count];
        for &c in &self.label {
            sizes[c] += 1;
        }
        sizes
    }
}

/// Components are cycles of the braid permutation, numbered by smallest strand.
pub fn closure_components(b: &BraidWord) -> Closure {
    let cycles = braid_permutation(b).cycles();
    let mut label = vec![0; b.strands];
    for (c, cycle) in cycles.iter().enumerate() {
        for &s in cycle {
            label[s] = c;
        }
    }
    Closure { count: cycles.len(), label }
}

/// Markov move I: `g · b · g⁻¹`.
pub fn conjugate(b: &BraidWord, g: i64) -> Result<BraidWord> {
    check_letter(g, b.strands)?;
    let mut letters = Vec::with_capacity(b.letters.len() + 2);
    letters.push(g);
    letters.extend_from_slice(&b.letters);
    letters.push(-g);
    Ok(BraidWord { strands: b.strands, letters })
}

/// Markov move II: add a strand and a crossing `±n` with it.
pub fn stabilize(b: &BraidWord, sign: i8) -> BraidWord {
    let n = b.strands as i64;
    let mut letters = b.letters.clone();
    letters.push(if sign < 0 { -n } else { n });
    BraidWord { strands: b.strands + 1, letters }
}
