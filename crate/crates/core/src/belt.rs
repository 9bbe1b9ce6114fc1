//! Blocked-torsion experiments: closing a braid word between two tangled
//! probe relations `R: I → A^n` and `S: A^n → I` yields an arrow `I → I`,
//! which is either empty or the one-point relation.

use std::fmt;

use crate::braid::{apply_braid, torsion, BraidWord};
use crate::error::BraidError;
use crate::irack::IrackTable;
use crate::relation::{tuple_of, Relation};
use crate::tangled::TangledRelation;
use crate::tuple::TupleVal;

/// The two probes: `R = {(a,c,d,1,…), (b,e,f,1,…)}` and
/// `S = {(a,e,f,1,…), (b,c,d,1,…)}`, padded with `1` up to `strands`.
///
/// They only make sense over the built-in seven-element example, so the
/// carrier must carry its labels.
pub fn belt_probes(strands: usize, irack: &IrackTable) -> Result<(TangledRelation, TangledRelation), BraidError> {
    if strands < 3 {
        return Err(BraidError::TooFewStrands { strands, min: 3 });
    }
    let carrier = irack.carrier();
    for label in crate::irack::EXAMPLE_LABELS {
        if carrier.lookup(label).is_none() {
            return Err(BraidError::MissingLabel(label.to_string()));
        }
    }
    let padded = |head: [&str; 3]| {
        let mut labels = head.to_vec();
        labels.resize(strands, "1");
        tuple_of(carrier, &labels).expect("labels checked above")
    };
    let unit = TupleVal::empty;
    let r = Relation::from_pairs(0, strands, [(unit(), padded(["a", "c", "d"])), (unit(), padded(["b", "e", "f"]))])?;
    let s = Relation::from_pairs(strands, 0, [(padded(["a", "e", "f"]), unit()), (padded(["b", "c", "d"]), unit())])?;
    let r = TangledRelation::new(r, irack).map_err(|_| BraidError::ProbeNotTangled("R"))?;
    let s = TangledRelation::new(s, irack).map_err(|_| BraidError::ProbeNotTangled("S"))?;
    Ok((r, s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Closure {
    Empty,
    Point,
}

impl Closure {
    pub fn as_str(self) -> &'static str {
        match self {
            Closure::Empty => "empty",
            Closure::Point => "point",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BeltReport {
    pub strands: usize,
    pub power: usize,
    pub result: Closure,
    /// Each seed tuple of `R` with its image under the word.
    pub trajectories: Vec<(TupleVal, TupleVal)>,
}

impl BeltReport {
    /// `n=3 k=2 result=point` followed by one `trajectory:` line per seed.
    pub fn render(&self, irack: &IrackTable) -> String {
        let c = irack.carrier();
        let mut out = format!("n={} k={} result={}\n", self.strands, self.power, self.result.as_str());
        for (from, to) in &self.trajectories {
            out.push_str(&format!("trajectory: {} -> {}\n", from.render(c), to.render(c)));
        }
        out
    }
}

impl fmt::Display for Closure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `S ∘ [word] ∘ R`, evaluated pointwise on the targets of `R` rather than by
/// materializing the word's relation.
pub fn close_word(word: &BraidWord, r: &Relation, s: &Relation, irack: &IrackTable) -> Result<Relation, BraidError> {
    if r.dst_arity() != word.strands() {
        return Err(BraidError::ArityMismatch { strands: word.strands(), found: r.dst_arity() });
    }
    if s.src_arity() != word.strands() {
        return Err(BraidError::ArityMismatch { strands: word.strands(), found: s.src_arity() });
    }
    let exits = s.image_index();
    let mut pairs = Vec::new();
    for (x, t) in r.iter() {
        let image = apply_braid(word, t, irack)?;
        if let Some(zs) = exits.get(&image) {
            pairs.extend(zs.iter().map(|&z| (x.clone(), z.clone())));
        }
    }
    Ok(Relation::from_pairs(r.src_arity(), s.dst_arity(), pairs)?)
}

/// Closes the `power`-th power of the half twist on `strands` strands
/// between the probes.
pub fn belt_trick(strands: usize, power: usize, irack: &IrackTable) -> Result<BeltReport, BraidError> {
    let (r, s) = belt_probes(strands, irack)?;
    let word = torsion(strands)?.pow(power);
    let trajectories = r
        .iter()
        .map(|(_, t)| Ok((t.clone(), apply_braid(&word, t, irack)?)))
        .collect::<Result<Vec<_>, BraidError>>()?;
    let closed = close_word(&word, &r, &s, irack)?;
    let result = if closed.contains(&TupleVal::empty(), &TupleVal::empty()) { Closure::Point } else { Closure::Empty };
    Ok(BeltReport { strands, power, result, trajectories })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinction {
    pub differs: bool,
    pub first: Relation,
    pub second: Relation,
}

/// Whether the probes separate two braid words.
pub fn distinguish(
    w1: &BraidWord,
    w2: &BraidWord,
    r: &Relation,
    s: &Relation,
    irack: &IrackTable,
) -> Result<Distinction, BraidError> {
    if w1.strands() != w2.strands() {
        return Err(BraidError::ArityMismatch { strands: w1.strands(), found: w2.strands() });
    }
    let first = close_word(w1, r, s, irack)?;
    let second = close_word(w2, r, s, irack)?;
    Ok(Distinction { differs: first != second, first, second })
}
