//! Iracks: a self-distributive action together with a pair of mutually
//! inverse unary operations.

use crate::carrier::{Carrier, Elem};
use crate::error::{AlgebraError, MalformedTable};
use crate::rack::RackTable;
use crate::report::{scan_cube, CheckReport, Witness};
use crate::table;

/// Irack tables as read from input, before any checking.
///
/// `rhd[a][b]` holds `a ▷ b`; `plus[a]` holds `a⁺`; `minus[a]` holds `a⁻`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RawIrackTable {
    pub carrier: Carrier,
    pub rhd: Vec<Vec<usize>>,
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

/// An irack whose axioms IR(1)–IR(6) hold on every element, pair and triple.
///
/// Values are immutable; every constructor outside this crate goes through
/// the exhaustive check once.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IrackTable {
    carrier: Carrier,
    rhd: Vec<Elem>,
    plus: Vec<Elem>,
    minus: Vec<Elem>,
}

impl IrackTable {
    pub fn new(raw: RawIrackTable) -> Result<Self, AlgebraError> {
        let table = IrackTable::shape_checked(&raw)?;
        let report = irack_axioms(&table);
        if report.passed() {
            Ok(table)
        } else {
            Err(AlgebraError::Axioms(Box::new(report)))
        }
    }

    /// Only checks dimensions and ranges. The result may violate the axioms
    /// and must not escape the crate.
    pub(crate) fn shape_checked(raw: &RawIrackTable) -> Result<Self, MalformedTable> {
        let k = raw.carrier.size();
        Ok(IrackTable {
            carrier: raw.carrier.clone(),
            rhd: table::square("rhd", &raw.rhd, k)?,
            plus: table::unary("plus", &raw.plus, k)?,
            minus: table::unary("minus", &raw.minus, k)?,
        })
    }

    pub(crate) fn from_parts(carrier: Carrier, rhd: Vec<Elem>, plus: Vec<Elem>, minus: Vec<Elem>) -> Self {
        IrackTable { carrier, rhd, plus, minus }
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn size(&self) -> usize {
        self.carrier.size()
    }

    pub fn elems(&self) -> impl DoubleEndedIterator<Item = Elem> + ExactSizeIterator + Clone {
        self.carrier.elems()
    }

    /// `a ▷ b`
    #[inline]
    pub fn rhd(&self, a: Elem, b: Elem) -> Elem {
        self.rhd[a.index() * self.size() + b.index()]
    }

    /// `b ◁ a`, defined as `a⁻ ▷ b`.
    #[inline]
    pub fn lhd(&self, b: Elem, a: Elem) -> Elem {
        self.rhd(self.minus(a), b)
    }

    #[inline]
    pub fn plus(&self, a: Elem) -> Elem {
        self.plus[a.index()]
    }

    #[inline]
    pub fn minus(&self, a: Elem) -> Elem {
        self.minus[a.index()]
    }

    pub fn plus_map(&self) -> &[Elem] {
        &self.plus
    }

    pub fn minus_map(&self) -> &[Elem] {
        &self.minus
    }

    /// Row-major `▷` table.
    pub fn rhd_table(&self) -> &[Elem] {
        &self.rhd
    }

    pub fn to_raw(&self) -> RawIrackTable {
        RawIrackTable {
            carrier: self.carrier.clone(),
            rhd: table::rows(&self.rhd, self.size()),
            plus: self.plus.iter().map(|e| e.index()).collect(),
            minus: self.minus.iter().map(|e| e.index()).collect(),
        }
    }
}

/// Checks IR(1)–IR(6) exhaustively, reporting the lexicographically first
/// counterexample of each law.
pub fn check_irack_axioms(raw: &RawIrackTable) -> Result<CheckReport, MalformedTable> {
    Ok(irack_axioms(&IrackTable::shape_checked(raw)?))
}

pub(crate) fn irack_axioms(t: &IrackTable) -> CheckReport {
    let k = t.size();
    let a_b = |a: Elem, b: Elem| vec![("a", a.into()), ("b", b.into())];
    let mut report = CheckReport::new();

    report.push(scan_cube("IR(1)", k, 1, |v| {
        let a = v[0];
        let (pm, mp) = (t.minus(t.plus(a)), t.plus(t.minus(a)));
        if pm != a {
            Some(Witness::new(vec![("a", a.into())], pm, a))
        } else if mp != a {
            Some(Witness::new(vec![("a", a.into())], mp, a))
        } else {
            None
        }
    }));
    report.push(scan_cube("IR(2)", k, 1, |v| {
        let a = v[0];
        let (lhs, rhs) = (t.rhd(a, t.minus(a)), t.plus(a));
        (lhs != rhs).then(|| Witness::new(vec![("a", a.into())], lhs, rhs))
    }));
    report.push(scan_cube("IR(3)", k, 2, |v| {
        let (a, b) = (v[0], v[1]);
        let lhs = t.rhd(t.minus(a), t.rhd(a, b));
        (lhs != b).then(|| Witness::new(a_b(a, b), lhs, b))
    }));
    report.push(scan_cube("IR(4)", k, 2, |v| {
        let (a, b) = (v[0], v[1]);
        let lhs = t.rhd(a, t.rhd(t.minus(a), b));
        (lhs != b).then(|| Witness::new(a_b(a, b), lhs, b))
    }));
    report.push(scan_cube("IR(5)", k, 3, |v| {
        let (a, b, c) = (v[0], v[1], v[2]);
        let lhs = t.rhd(a, t.rhd(b, c));
        let rhs = t.rhd(t.rhd(a, b), t.rhd(a, c));
        (lhs != rhs).then(|| Witness::new(vec![("a", a.into()), ("b", b.into()), ("c", c.into())], lhs, rhs))
    }));
    report.push(scan_cube("IR(6)", k, 2, |v| {
        let (a, b) = (v[0], v[1]);
        let (lhs, rhs) = (t.rhd(a, t.minus(b)), t.minus(t.rhd(a, b)));
        (lhs != rhs).then(|| Witness::new(a_b(a, b), lhs, rhs))
    }));
    report
}

/// The rack underlying an irack, with `b ◁ a = a⁻ ▷ b`.
pub fn rack_from_irack(irack: &IrackTable) -> RackTable {
    let k = irack.size();
    let mut lhd = Vec::with_capacity(k * k);
    for b in irack.elems() {
        for a in irack.elems() {
            lhd.push(irack.lhd(b, a));
        }
    }
    RackTable::from_parts(irack.carrier.clone(), irack.rhd.clone(), lhd)
}

/// The irack with the roles of `()⁺` and `()⁻` exchanged.
pub fn dual_irack(irack: &IrackTable) -> IrackTable {
    IrackTable {
        carrier: irack.carrier.clone(),
        rhd: irack.rhd.clone(),
        plus: irack.minus.clone(),
        minus: irack.plus.clone(),
    }
}

pub const EXAMPLE_LABELS: [&str; 7] = ["1", "a", "b", "c", "d", "e", "f"];

/// The seven-element irack on `{1,a,b,c,d,e,f}`.
///
/// Rows `1`, `a`, `b` of `▷` act trivially; rows `c`..`f` all act by the
/// involution swapping `a↔b`, `c↔e`, `d↔f`. `()⁺` cycles `c→f→e→d→c`.
pub fn builtin_example_irack() -> IrackTable {
    let carrier = Carrier::new(EXAMPLE_LABELS).expect("static labels");
    let id: Vec<usize> = (0..7).collect();
    let swap = vec![0, 2, 1, 5, 6, 3, 4];
    let raw = RawIrackTable {
        carrier,
        rhd: vec![id.clone(), id.clone(), id, swap.clone(), swap.clone(), swap.clone(), swap],
        plus: vec![0, 2, 1, 6, 3, 4, 5],
        minus: vec![0, 2, 1, 4, 5, 6, 3],
    };
    IrackTable::new(raw).expect("built-in example satisfies the irack axioms")
}

/// The one-element irack `{e}`.
pub fn trivial_irack() -> IrackTable {
    IrackTable::new(RawIrackTable {
        carrier: Carrier::new(["e"]).expect("static label"),
        rhd: vec![vec![0]],
        plus: vec![0],
        minus: vec![0],
    })
    .expect("one-element irack")
}
