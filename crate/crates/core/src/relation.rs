//! Finite relations between powers of a carrier.

use std::collections::{BTreeMap, BTreeSet};

use crate::carrier::{Carrier, Elem};
use crate::error::{ParseError, RelationError};
use crate::tuple::{TupleSpace, TupleVal};

/// Relations with more pairs than this are refused.
pub const MATERIALIZATION_CAP: usize = 1_000_000;

/// A relation `A^m → A^n` stored as a set of pairs in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    src: usize,
    dst: usize,
    pairs: BTreeSet<(TupleVal, TupleVal)>,
}

pub(crate) fn check_cap(requested: u128) -> Result<(), RelationError> {
    if requested > MATERIALIZATION_CAP as u128 {
        Err(RelationError::CapExceeded { requested, cap: MATERIALIZATION_CAP })
    } else {
        Ok(())
    }
}

/// Number of tuples of the given arity, saturating.
pub(crate) fn power(k: usize, arity: usize) -> u128 {
    (k as u128).checked_pow(arity as u32).unwrap_or(u128::MAX)
}

impl Relation {
    pub fn empty(src: usize, dst: usize) -> Self {
        Relation { src, dst, pairs: BTreeSet::new() }
    }

    pub fn from_pairs<I>(src: usize, dst: usize, pairs: I) -> Result<Self, RelationError>
    where
        I: IntoIterator<Item = (TupleVal, TupleVal)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            if a.arity() != src {
                return Err(RelationError::ArityMismatch { expected: src, found: a.arity() });
            }
            if b.arity() != dst {
                return Err(RelationError::ArityMismatch { expected: dst, found: b.arity() });
            }
            set.insert((a, b));
            check_cap(set.len() as u128)?;
        }
        Ok(Relation { src, dst, pairs: set })
    }

    /// The functional relation `{t ↦ f(t)}` over all of `A^src`.
    pub fn functional<F>(k: usize, src: usize, dst: usize, f: F) -> Result<Self, RelationError>
    where
        F: Fn(&TupleVal) -> TupleVal,
    {
        check_cap(power(k, src))?;
        Relation::from_pairs(
            src,
            dst,
            TupleSpace::of_arity(k, src).map(|t| {
                let image = f(&t);
                (t, image)
            }),
        )
    }

    /// The diagonal on `A^n`.
    pub fn identity(k: usize, n: usize) -> Result<Self, RelationError> {
        Relation::functional(k, n, n, TupleVal::clone)
    }

    pub fn src_arity(&self) -> usize {
        self.src
    }

    pub fn dst_arity(&self) -> usize {
        self.dst
    }

    pub fn arities(&self) -> (usize, usize) {
        (self.src, self.dst)
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &BTreeSet<(TupleVal, TupleVal)> {
        &self.pairs
    }

    pub fn iter(&self) -> impl Iterator<Item = &(TupleVal, TupleVal)> {
        self.pairs.iter()
    }

    pub fn contains(&self, a: &TupleVal, b: &TupleVal) -> bool {
        // BTreeSet lookups need an owned key; pairs are small.
        self.pairs.contains(&(a.clone(), b.clone()))
    }

    /// Every element index is below `k`.
    pub fn check_carrier(&self, k: usize) -> Result<(), RelationError> {
        for (a, b) in &self.pairs {
            for e in a.elems().iter().chain(b.elems()) {
                if e.index() >= k {
                    return Err(RelationError::OutOfCarrier { index: e.index(), size: k });
                }
            }
        }
        Ok(())
    }

    /// Sources paired with their targets.
    pub fn image_index(&self) -> BTreeMap<&TupleVal, Vec<&TupleVal>> {
        let mut index: BTreeMap<&TupleVal, Vec<&TupleVal>> = BTreeMap::new();
        for (a, b) in &self.pairs {
            index.entry(a).or_default().push(b);
        }
        index
    }

    /// The converse relation `A^n → A^m`.
    pub fn converse(&self) -> Relation {
        Relation {
            src: self.dst,
            dst: self.src,
            pairs: self.pairs.iter().map(|(a, b)| (b.clone(), a.clone())).collect(),
        }
    }

    /// The relation `{() ↦ ()}` or `{}` on the unit object, by truth value.
    pub fn unit(point: bool) -> Relation {
        let mut r = Relation::empty(0, 0);
        if point {
            r.pairs.insert((TupleVal::empty(), TupleVal::empty()));
        }
        r
    }

    /// Relation text: an `arity: m -> n` header, then one `LHS | RHS` line
    /// per pair in canonical order.
    pub fn render(&self, carrier: &Carrier) -> String {
        let mut out = format!("arity: {} -> {}\n", self.src, self.dst);
        for (a, b) in &self.pairs {
            out.push_str(&a.render(carrier));
            out.push_str(" | ");
            out.push_str(&b.render(carrier));
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str, carrier: &Carrier) -> Result<Relation, ParseError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(ParseError::MissingSection("arity"))?;
        let arities =
            header.strip_prefix("arity:").ok_or_else(|| ParseError::syntax(hline, "expected `arity: m -> n`"))?;
        let (m, n) = arities
            .split_once("->")
            .and_then(|(m, n)| Some((m.trim().parse().ok()?, n.trim().parse().ok()?)))
            .ok_or_else(|| ParseError::syntax(hline, format!("bad arity header {arities:?}")))?;
        let mut pairs = Vec::new();
        for (line, body) in lines {
            let (lhs, rhs) = body.split_once('|').ok_or_else(|| ParseError::syntax(line, "expected `LHS | RHS`"))?;
            let a = TupleVal::parse(lhs, carrier, line)?;
            let b = TupleVal::parse(rhs, carrier, line)?;
            if a.arity() != m || b.arity() != n {
                return Err(ParseError::syntax(
                    line,
                    format!("pair has arities {} -> {}, header says {m} -> {n}", a.arity(), b.arity()),
                ));
            }
            pairs.push((a, b));
        }
        Relation::from_pairs(m, n, pairs).map_err(|e| ParseError::syntax(hline, e.to_string()))
    }
}

/// Relational composite applying `r` first, then `s`: `(a, c)` is related
/// iff some `b` has `a r b` and `b s c`.
pub fn compose(r: &Relation, s: &Relation) -> Result<Relation, RelationError> {
    if r.dst != s.src {
        return Err(RelationError::ArityMismatch { expected: r.dst, found: s.src });
    }
    let index = s.image_index();
    let mut pairs = BTreeSet::new();
    for (a, b) in &r.pairs {
        if let Some(targets) = index.get(b) {
            for &c in targets {
                pairs.insert((a.clone(), c.clone()));
                check_cap(pairs.len() as u128)?;
            }
        }
    }
    Ok(Relation { src: r.src, dst: s.dst, pairs })
}

/// Monoidal product: arities add and pairs concatenate componentwise.
pub fn tensor(r: &Relation, s: &Relation) -> Result<Relation, RelationError> {
    check_cap(r.len() as u128 * s.len() as u128)?;
    let pairs =
        r.pairs.iter().flat_map(|(a, b)| s.pairs.iter().map(move |(c, d)| (a.concat(c), b.concat(d)))).collect();
    Ok(Relation { src: r.src + s.src, dst: r.dst + s.dst, pairs })
}

pub fn identity_relation(k: usize, n: usize) -> Result<Relation, RelationError> {
    Relation::identity(k, n)
}

/// Convenience for building tuples from labels in tests and probes.
pub(crate) fn tuple_of(carrier: &Carrier, labels: &[&str]) -> Option<TupleVal> {
    labels.iter().map(|l| carrier.lookup(l)).collect::<Option<Vec<Elem>>>().map(TupleVal::new)
}
