//! Tuples of carrier elements and the nested actions between them.

use std::fmt;

use crate::carrier::{Carrier, Elem};
use crate::error::ParseError;
use crate::irack::IrackTable;

/// A fixed-arity sequence of elements. The empty tuple is the sole value of
/// arity zero and plays the role of the monoidal unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct TupleVal(Vec<Elem>);

impl TupleVal {
    pub fn new(elems: Vec<Elem>) -> Self {
        TupleVal(elems)
    }

    pub fn empty() -> Self {
        TupleVal(Vec::new())
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn elems(&self) -> &[Elem] {
        &self.0
    }

    pub fn into_elems(self) -> Vec<Elem> {
        self.0
    }

    pub fn concat(&self, other: &TupleVal) -> TupleVal {
        let mut v = Vec::with_capacity(self.arity() + other.arity());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        TupleVal(v)
    }

    /// Splits into the first `at` components and the rest.
    pub fn split_at(&self, at: usize) -> (TupleVal, TupleVal) {
        let (a, b) = self.0.split_at(at);
        (TupleVal(a.to_vec()), TupleVal(b.to_vec()))
    }

    pub fn within(&self, carrier: &Carrier) -> bool {
        self.0.iter().all(|&e| carrier.contains(e))
    }

    /// `(a,c,d)` using carrier labels; `()` for the empty tuple.
    pub fn render(&self, carrier: &Carrier) -> String {
        let labels: Vec<&str> = self.0.iter().map(|&e| carrier.label(e)).collect();
        format!("({})", labels.join(","))
    }

    /// Parses a tuple literal such as `(a,c,d)` or `( a , c )` or `()`.
    /// `line` is only used for error reporting.
    pub fn parse(text: &str, carrier: &Carrier, line: usize) -> Result<TupleVal, ParseError> {
        let inner =
            text.trim().strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(|| {
                ParseError::syntax(line, format!("expected a tuple literal, found {:?}", text.trim()))
            })?;
        if inner.trim().is_empty() {
            return Ok(TupleVal::empty());
        }
        inner
            .split(',')
            .map(|label| {
                let label = label.trim();
                carrier.lookup(label).ok_or_else(|| ParseError::syntax(line, format!("unknown element {label:?}")))
            })
            .collect::<Result<Vec<_>, _>>()
            .map(TupleVal)
    }
}

impl From<Vec<Elem>> for TupleVal {
    fn from(v: Vec<Elem>) -> Self {
        TupleVal(v)
    }
}

impl FromIterator<Elem> for TupleVal {
    fn from_iter<I: IntoIterator<Item = Elem>>(iter: I) -> Self {
        TupleVal(iter.into_iter().collect())
    }
}

impl fmt::Display for TupleVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.index().to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl IrackTable {
    /// `a ▷ b = a₁ ▷ (a₂ ▷ (⋯ (aₙ ▷ b)))`; the empty tuple acts trivially.
    pub fn tuple_act_elem(&self, a: &TupleVal, b: Elem) -> Elem {
        a.0.iter().rev().fold(b, |acc, &ai| self.rhd(ai, acc))
    }

    /// `b ◁ a = ((b ◁ a₁) ◁ a₂) ⋯ ◁ aₙ` with `x ◁ y = y⁻ ▷ x`.
    pub fn elem_act_tuple(&self, b: Elem, a: &TupleVal) -> Elem {
        a.0.iter().fold(b, |acc, &ai| self.lhd(acc, ai))
    }

    /// Componentwise `a ▷ bᵢ`.
    pub fn tuple_act_tuple(&self, a: &TupleVal, b: &TupleVal) -> TupleVal {
        b.0.iter().map(|&bi| self.tuple_act_elem(a, bi)).collect()
    }

    /// Componentwise `bᵢ ◁ a`.
    pub fn tuple_lhd_tuple(&self, b: &TupleVal, a: &TupleVal) -> TupleVal {
        b.0.iter().map(|&bi| self.elem_act_tuple(bi, a)).collect()
    }

    /// Single element acting on each component: `c ▷ a`.
    pub fn elem_act_each(&self, c: Elem, a: &TupleVal) -> TupleVal {
        a.0.iter().map(|&ai| self.rhd(c, ai)).collect()
    }

    /// `(a₁,…,aₙ)⁻ = (aₙ⁻,…,a₁⁻)`
    pub fn tuple_neg(&self, a: &TupleVal) -> TupleVal {
        a.0.iter().rev().map(|&ai| self.minus(ai)).collect()
    }

    /// `(a₁,…,aₙ)⁺ = (aₙ⁺,…,a₁⁺)`
    pub fn tuple_pos(&self, a: &TupleVal) -> TupleVal {
        a.0.iter().rev().map(|&ai| self.plus(ai)).collect()
    }
}

/// All tuples of arity `0..=max_arity` over a `k`-element carrier, ordered by
/// arity and then lexicographically.
#[derive(Debug, Clone, Copy)]
pub struct TupleSpace {
    k: u64,
    max_arity: u32,
}

impl TupleSpace {
    pub fn new(k: usize, max_arity: usize) -> Self {
        TupleSpace { k: k as u64, max_arity: max_arity as u32 }
    }

    pub fn count(&self) -> u64 {
        (0..=self.max_arity).map(|n| self.k.pow(n)).sum()
    }

    /// The `i`-th tuple in arity-then-lexicographic order.
    pub fn nth(&self, mut i: u64) -> TupleVal {
        let mut arity = 0;
        loop {
            let block = self.k.pow(arity);
            if i < block {
                break;
            }
            i -= block;
            arity += 1;
        }
        let mut v = vec![Elem::new(0); arity as usize];
        for slot in v.iter_mut().rev() {
            *slot = Elem::new((i % self.k) as usize);
            i /= self.k;
        }
        TupleVal(v)
    }

    /// Every tuple of exactly `arity` components, lexicographically.
    pub fn of_arity(k: usize, arity: usize) -> impl Iterator<Item = TupleVal> {
        let total = (k as u64).pow(arity as u32);
        (0..total).map(move |mut i| {
            let mut v = vec![Elem::new(0); arity];
            for slot in v.iter_mut().rev() {
                *slot = Elem::new((i % k as u64) as usize);
                i /= k as u64;
            }
            TupleVal(v)
        })
    }
}
