//! Braid words and their evaluation as functional tangled relations.
//!
//! Letters act left to right: in `s1 s2` the crossing `s1` is applied
//! first. A positive crossing at `i` sends the strands at positions
//! `(i, i+1)` from `(u, v)` to `(u ▷ v, u)`; a negative one sends them to
//! `(v, u ◁ v)` with `u ◁ v = v⁻ ▷ u`.

use std::fmt;

use crate::error::BraidError;
use crate::irack::IrackTable;
use crate::relation::{check_cap, power, Relation};
use crate::tuple::TupleVal;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    /// One-based generator index `i` of `σ_i`.
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn pos(generator: usize) -> Self {
        Letter { generator, inverse: false }
    }

    pub fn neg(generator: usize) -> Self {
        Letter { generator, inverse: true }
    }

    pub fn inverted(self) -> Self {
        Letter { inverse: !self.inverse, ..self }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}{}", self.generator, if self.inverse { "^-1" } else { "" })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<Letter>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<Letter>) -> Result<Self, BraidError> {
        if strands == 0 {
            return Err(BraidError::TooFewStrands { strands, min: 1 });
        }
        for l in &letters {
            if l.generator == 0 || l.generator >= strands {
                return Err(BraidError::GeneratorOutOfRange { generator: l.generator, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Result<Self, BraidError> {
        BraidWord::new(strands, Vec::new())
    }

    /// Parses whitespace-separated `sI` / `sI^-1` tokens.
    pub fn parse(text: &str, strands: usize) -> Result<Self, BraidError> {
        let letters = text
            .split_whitespace()
            .map(|token| {
                let (body, inverse) = match token.strip_suffix("^-1") {
                    Some(body) => (body, true),
                    None => (token, false),
                };
                body.strip_prefix('s')
                    .filter(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
                    .and_then(|digits| digits.parse().ok())
                    .map(|generator| Letter { generator, inverse })
                    .ok_or_else(|| BraidError::UnknownToken(token.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        BraidWord::new(strands, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    /// `self` followed by `other`.
    pub fn then(&self, other: &BraidWord) -> BraidWord {
        assert_eq!(self.strands, other.strands, "strand counts differ");
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BraidWord { strands: self.strands, letters }
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| l.inverted()).collect() }
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.repeat(k) }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Applies the word to a tuple of `strands` elements.
pub fn apply_braid(word: &BraidWord, t: &TupleVal, irack: &IrackTable) -> Result<TupleVal, BraidError> {
    if t.arity() != word.strands {
        return Err(BraidError::ArityMismatch { strands: word.strands, found: t.arity() });
    }
    let mut v = t.elems().to_vec();
    for l in &word.letters {
        let i = l.generator - 1;
        let (u, w) = (v[i], v[i + 1]);
        let (x, y) = if l.inverse { (w, irack.lhd(u, w)) } else { (irack.rhd(u, w), u) };
        v[i] = x;
        v[i + 1] = y;
    }
    Ok(TupleVal::new(v))
}

/// The functional relation `{t ↦ apply_braid(word, t)}` on `A^strands`.
pub fn eval_braid(word: &BraidWord, irack: &IrackTable) -> Result<Relation, BraidError> {
    check_cap(power(irack.size(), word.strands))?;
    let r = Relation::functional(irack.size(), word.strands, word.strands, |t| {
        apply_braid(word, t, irack).expect("arity matches strands")
    })?;
    Ok(r)
}

/// The positive half twist `(σ1 ⋯ σ_{n−1})(σ1 ⋯ σ_{n−2}) ⋯ (σ1)`.
pub fn torsion(strands: usize) -> Result<BraidWord, BraidError> {
    if strands < 2 {
        return Err(BraidError::TooFewStrands { strands, min: 2 });
    }
    let letters = (1..strands).rev().flat_map(|top| (1..=top).map(Letter::pos)).collect();
    BraidWord::new(strands, letters)
}
