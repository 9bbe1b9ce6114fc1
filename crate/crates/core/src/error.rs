use thiserror::Error;

use crate::carrier::Elem;
use crate::report::CheckReport;
use crate::tuple::TupleVal;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CarrierError {
    #[error("invalid element label {0:?}")]
    InvalidLabel(String),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
}

/// A raw table whose shape or entries do not fit its carrier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MalformedTable {
    #[error("table {table} has {found} rows, expected {expected}")]
    RowCount { table: &'static str, expected: usize, found: usize },
    #[error("table {table} row {row} has {found} entries, expected {expected}")]
    RowLength { table: &'static str, row: usize, expected: usize, found: usize },
    #[error("table {table} cell [{row}][{col}] holds {value}, outside carrier of size {size}")]
    OutOfRange { table: &'static str, row: usize, col: usize, value: usize, size: usize },
    #[error("map {table} has {found} entries, expected {expected}")]
    MapLength { table: &'static str, expected: usize, found: usize },
    #[error("map {table} entry {index} holds {value}, outside carrier of size {size}")]
    MapOutOfRange { table: &'static str, index: usize, value: usize, size: usize },
}

#[derive(Debug, Clone, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Malformed(#[from] MalformedTable),
    /// The table is well formed but at least one axiom fails.
    #[error("axioms fail: {}", .0.failed_laws().join(", "))]
    Axioms(Box<CheckReport>),
    #[error("not a group: {law} fails{}", witness.as_deref().map(|w| format!(" at {w}")).unwrap_or_default())]
    NotAGroup { law: &'static str, witness: Option<String> },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Carrier { line: usize, source: CarrierError },
    #[error("missing section {0:?}")]
    MissingSection(&'static str),
}

impl ParseError {
    pub fn syntax(line: usize, message: impl Into<String>) -> Self {
        ParseError::Syntax { line, message: message.into() }
    }

    /// One-based line the error refers to, if any.
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Syntax { line, .. } | ParseError::Carrier { line, .. } => Some(*line),
            ParseError::MissingSection(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RelationError {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("relation would hold {requested} pairs, above the materialization cap of {cap}; evaluate braid words with apply_braid instead")]
    CapExceeded { requested: u128, cap: usize },
    #[error("element index {index} outside carrier of size {size}")]
    OutOfCarrier { index: usize, size: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("unknown braid token {0:?}")]
    UnknownToken(String),
    #[error("generator s{generator} out of range for {strands} strands")]
    GeneratorOutOfRange { generator: usize, strands: usize },
    #[error("a braid needs at least {min} strands, got {strands}")]
    TooFewStrands { strands: usize, min: usize },
    #[error("tuple of arity {found} applied to a braid on {strands} strands")]
    ArityMismatch { strands: usize, found: usize },
    #[error("carrier has no element labelled {0:?}; the probes need the built-in example irack")]
    MissingLabel(String),
    #[error("probe relation {0} is not tangled")]
    ProbeNotTangled(&'static str),
    #[error(transparent)]
    Relation(#[from] RelationError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("enumeration supports orders 0..={max}, got {order}")]
    OrderOutOfRange { order: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SaturateError {
    #[error("closure exceeds {max_pairs} pairs")]
    TooLarge { max_pairs: usize },
    /// TR(2) fails: the pair's two sides act differently on `element`.
    #[error("TR(2) fails for pair {pair:?} at element {element}")]
    Tr2Violation { pair: (TupleVal, TupleVal), element: Elem, lhs: Elem, rhs: Elem },
    #[error(transparent)]
    Relation(#[from] RelationError),
}
