//! Law-by-law verdicts produced by every checker in the crate.

use std::fmt::Write as _;

use rayon::prelude::*;

use crate::carrier::{Carrier, Elem};
use crate::relation::Relation;
use crate::tuple::TupleVal;

/// Instance counts at or above this are scanned in parallel.
const PAR_THRESHOLD: u64 = 1 << 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        }
    }
}

/// A value appearing in a witness: either side of a law, or a bound variable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Elem(Elem),
    Tuple(TupleVal),
    Pair(TupleVal, TupleVal),
    /// Membership of a pair in a relation.
    Member(bool),
    /// Source and target arities of a relation.
    Arities(usize, usize),
}

impl Value {
    pub fn render(&self, carrier: &Carrier) -> String {
        match self {
            Value::Elem(e) => carrier.label(*e).to_string(),
            Value::Tuple(t) => t.render(carrier),
            Value::Pair(a, b) => format!("{} | {}", a.render(carrier), b.render(carrier)),
            Value::Member(true) => "present".to_string(),
            Value::Member(false) => "absent".to_string(),
            Value::Arities(m, n) => format!("{m}->{n}"),
        }
    }
}

impl From<Elem> for Value {
    fn from(e: Elem) -> Self {
        Value::Elem(e)
    }
}

impl From<TupleVal> for Value {
    fn from(t: TupleVal) -> Self {
        Value::Tuple(t)
    }
}

/// A counterexample: variable bindings plus the two sides that differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub bindings: Vec<(String, Value)>,
    pub lhs: Value,
    pub rhs: Value,
}

impl Witness {
    pub fn new(bindings: Vec<(&str, Value)>, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Witness {
            bindings: bindings.into_iter().map(|(n, v)| (n.to_string(), v)).collect(),
            lhs: lhs.into(),
            rhs: rhs.into(),
        }
    }

    pub fn binding(&self, name: &str) -> Option<&Value> {
        self.bindings.iter().find(|(n, _)| n == name).map(|(_, v)| v)
    }

    pub fn render(&self, carrier: &Carrier) -> String {
        let mut out = String::new();
        for (name, value) in &self.bindings {
            let _ = write!(out, "{name}={} ", value.render(carrier));
        }
        let _ = write!(out, "lhs={} rhs={}", self.lhs.render(carrier), self.rhs.render(carrier));
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawEntry {
    pub law: String,
    pub status: Status,
    /// Instances evaluated, up to and including the first failure.
    pub checks: u64,
    pub witness: Option<Witness>,
    /// Seed of the pseudorandom sample, when the law was not checked exhaustively.
    pub sample_seed: Option<u64>,
}

impl LawEntry {
    pub fn pass(law: impl Into<String>, checks: u64) -> Self {
        LawEntry { law: law.into(), status: Status::Pass, checks, witness: None, sample_seed: None }
    }

    pub fn fail(law: impl Into<String>, checks: u64, witness: Witness) -> Self {
        LawEntry { law: law.into(), status: Status::Fail, checks, witness: Some(witness), sample_seed: None }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.sample_seed = Some(seed);
        self
    }

    pub fn render(&self, carrier: &Carrier) -> String {
        let mut line = format!("{}: {} checks={}", self.law, self.status.as_str(), self.checks);
        if let Some(seed) = self.sample_seed {
            let _ = write!(line, " sampled seed={seed}");
        }
        if let Some(w) = &self.witness {
            let _ = write!(line, " witness {}", w.render(carrier));
        }
        line
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub entries: Vec<LawEntry>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn push(&mut self, entry: LawEntry) {
        self.entries.push(entry);
    }

    /// Appends every entry of `other`, prefixing law ids with `scope`.
    pub fn absorb(&mut self, scope: &str, other: CheckReport) {
        for mut e in other.entries {
            e.law = format!("{scope}.{}", e.law);
            self.entries.push(e);
        }
    }

    pub fn merge(mut self, other: CheckReport) -> CheckReport {
        self.entries.extend(other.entries);
        self
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(LawEntry::passed)
    }

    pub fn entry(&self, law: &str) -> Option<&LawEntry> {
        self.entries.iter().find(|e| e.law == law)
    }

    pub fn failed_laws(&self) -> Vec<String> {
        self.entries.iter().filter(|e| !e.passed()).map(|e| e.law.clone()).collect()
    }

    pub fn render(&self, carrier: &Carrier) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.render(carrier));
            out.push('\n');
        }
        out
    }
}

/// Scans instances `0..total` in order and reports the first one whose
/// evaluation yields a witness. The scan is parallel for large totals but
/// always returns the lowest failing index.
pub(crate) fn scan<F>(law: &str, total: u64, eval: F) -> LawEntry
where
    F: Fn(u64) -> Option<Witness> + Sync,
{
    let first = if total >= PAR_THRESHOLD {
        (0..total).into_par_iter().find_map_first(|i| eval(i).map(|w| (i, w)))
    } else {
        (0..total).find_map(|i| eval(i).map(|w| (i, w)))
    };
    match first {
        Some((i, w)) => LawEntry::fail(law, i + 1, w),
        None => LawEntry::pass(law, total),
    }
}

/// Scans every `arity`-tuple of elements of a `k`-element carrier in
/// lexicographic order.
pub(crate) fn scan_cube<F>(law: &str, k: usize, arity: u32, eval: F) -> LawEntry
where
    F: Fn(&[Elem]) -> Option<Witness> + Sync,
{
    let total = (k as u64).pow(arity);
    scan(law, total, |i| {
        let mut digits = [Elem::new(0); 4];
        let mut rest = i;
        for slot in digits[..arity as usize].iter_mut().rev() {
            *slot = Elem::new((rest % k as u64) as usize);
            rest /= k as u64;
        }
        eval(&digits[..arity as usize])
    })
}

/// Compares two relations as sets. The witness is the least pair in their
/// symmetric difference; `checks` counts the pairs in their union.
pub fn relation_equality(law: &str, lhs: &Relation, rhs: &Relation) -> LawEntry {
    if lhs.arities() != rhs.arities() {
        let (lm, ln) = lhs.arities();
        let (rm, rn) = rhs.arities();
        return LawEntry::fail(law, 0, Witness::new(vec![], Value::Arities(lm, ln), Value::Arities(rm, rn)));
    }
    let union = lhs.pairs().union(rhs.pairs()).count() as u64;
    let first = lhs.pairs().symmetric_difference(rhs.pairs()).next();
    match first {
        None => LawEntry::pass(law, union),
        Some((a, b)) => {
            let in_lhs = lhs.contains(a, b);
            LawEntry::fail(
                law,
                union,
                Witness::new(
                    vec![("pair", Value::Pair(a.clone(), b.clone()))],
                    Value::Member(in_lhs),
                    Value::Member(!in_lhs),
                ),
            )
        }
    }
}
