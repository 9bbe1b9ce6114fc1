//! Racks given by a pair of operation tables.

use crate::carrier::{Carrier, Elem};
use crate::error::{AlgebraError, MalformedTable};
use crate::report::{scan_cube, CheckReport, Witness};
use crate::table;

/// Rack tables as read from input, before any checking.
///
/// `rhd[a][b]` holds `a ▷ b`; `lhd[b][a]` holds `b ◁ a`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawRackTable {
    pub carrier: Carrier,
    pub rhd: Vec<Vec<usize>>,
    pub lhd: Vec<Vec<usize>>,
}

/// A rack whose axioms R(1)–R(4) have been verified on every triple.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct RackTable {
    carrier: Carrier,
    rhd: Vec<Elem>,
    lhd: Vec<Elem>,
}

impl RackTable {
    pub fn new(raw: RawRackTable) -> Result<Self, AlgebraError> {
        let table = RackTable::shape_checked(&raw)?;
        let report = rack_axioms(&table);
        if report.passed() {
            Ok(table)
        } else {
            Err(AlgebraError::Axioms(Box::new(report)))
        }
    }

    fn shape_checked(raw: &RawRackTable) -> Result<Self, MalformedTable> {
        let k = raw.carrier.size();
        Ok(RackTable {
            carrier: raw.carrier.clone(),
            rhd: table::square("rhd", &raw.rhd, k)?,
            lhd: table::square("lhd", &raw.lhd, k)?,
        })
    }

    pub(crate) fn from_parts(carrier: Carrier, rhd: Vec<Elem>, lhd: Vec<Elem>) -> Self {
        RackTable { carrier, rhd, lhd }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    /// `a ▷ b`
    #[inline]
    pub fn rhd(&self, a: Elem, b: Elem) -> Elem {
        self.rhd[a.index() * self.size() + b.index()]
    }

    /// `b ◁ a`
    #[inline]
    pub fn lhd(&self, b: Elem, a: Elem) -> Elem {
        self.lhd[b.index() * self.size() + a.index()]
    }

    pub fn to_raw(&self) -> RawRackTable {
        let k = self.size();
        RawRackTable { carrier: self.carrier.clone(), rhd: table::rows(&self.rhd, k), lhd: table::rows(&self.lhd, k) }
    }
}

/// Checks R(1)–R(4) exhaustively, reporting the lexicographically first
/// counterexample of each law.
pub fn check_rack_axioms(raw: &RawRackTable) -> Result<CheckReport, MalformedTable> {
    Ok(rack_axioms(&RackTable::shape_checked(raw)?))
}

fn rack_axioms(t: &RackTable) -> CheckReport {
    let k = t.size();
    let mut report = CheckReport::new();

    report.push(scan_cube("R(1)", k, 2, |v| {
        let (a, b) = (v[0], v[1]);
        let lhs = t.lhd(t.rhd(a, b), a);
        (lhs != b).then(|| Witness::new(vec![("a", a.into()), ("b", b.into())], lhs, b))
    }));
    report.push(scan_cube("R(2)", k, 2, |v| {
        let (a, b) = (v[0], v[1]);
        let lhs = t.rhd(a, t.lhd(b, a));
        (lhs != b).then(|| Witness::new(vec![("a", a.into()), ("b", b.into())], lhs, b))
    }));
    report.push(scan_cube("R(3)", k, 3, |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        let lhs = t.rhd(a, t.rhd(b, c));
        let rhs = t.rhd(t.rhd(a, b), t.rhd(a, c));
        (lhs != rhs).then(|| Witness::new(vec![("a", a.into()), ("b", b.into()), ("c", c.into())], lhs, rhs))
    }));
    report.push(scan_cube("R(4)", k, 3, |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        let lhs = t.lhd(t.lhd(c, b), a);
        let rhs = t.lhd(t.lhd(c, a), t.lhd(b, a));
        (lhs != rhs).then(|| Witness::new(vec![("a", a.into()), ("b", b.into()), ("c", c.into())], lhs, rhs))
    }));
    report
}
