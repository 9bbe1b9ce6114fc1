//! The ten consequences of the irack axioms, each checked on every element
//! or pair of a finite irack.
//!
//! | id    | law                          | range    |
//! |-------|------------------------------|----------|
//! | L1.1  | a ▷ a = a⁺⁺                  | elements |
//! | L1.2  | a⁻ ▷ a = a⁺⁺                 | elements |
//! | L1.3  | a⁺⁺⁺⁺ = a                    | elements |
//! | L1.4  | a⁻⁻ ▷ a = a⁺⁺                | elements |
//! | L1.5  | (a ▷ b)⁺ = a ▷ b⁺            | pairs    |
//! | L1.6  | a ▷ a⁺ = a⁻                  | elements |
//! | L1.7  | a⁺ ▷ (a ▷ b) = b             | pairs    |
//! | L1.8  | a ▷ (a⁺ ▷ b) = b             | pairs    |
//! | L1.9  | x ↦ a ▷ x and x ↦ a⁻ ▷ x are mutually inverse | pairs |
//! | L1.10 | a⁺ ▷ b = a⁻ ▷ b              | pairs    |

use crate::carrier::Elem;
use crate::error::MalformedTable;
use crate::irack::{IrackTable, RawIrackTable};
use crate::report::{scan_cube, CheckReport, Witness};

pub fn check_lemmas(irack: &IrackTable) -> CheckReport {
    lemmas(irack)
}

/// Runs the lemma suite on a table that has not been validated. Failures are
/// expected when the table is not an irack.
pub fn check_lemmas_unvalidated(raw: &RawIrackTable) -> Result<CheckReport, MalformedTable> {
    Ok(lemmas(&IrackTable::shape_checked(raw)?))
}

fn lemmas(t: &IrackTable) -> CheckReport {
    let k = t.size();
    let pp = |a: Elem| t.plus(t.plus(a));
    let unary = |law: &str, f: &(dyn Fn(Elem) -> (Elem, Elem) + Sync)| {
        scan_cube(law, k, 1, |v| {
            let (lhs, rhs) = f(v[0]);
            (lhs != rhs).then(|| Witness::new(vec![("a", v[0].into())], lhs, rhs))
        })
    };
    let binary = |law: &str, f: &(dyn Fn(Elem, Elem) -> (Elem, Elem) + Sync)| {
        scan_cube(law, k, 2, |v| {
            let (lhs, rhs) = f(v[0], v[1]);
            (lhs != rhs).then(|| Witness::new(vec![("a", v[0].into()), ("b", v[1].into())], lhs, rhs))
        })
    };

    let mut report = CheckReport::new();
    report.push(unary("L1.1", &|a| (t.rhd(a, a), pp(a))));
    report.push(unary("L1.2", &|a| (t.rhd(t.minus(a), a), pp(a))));
    report.push(unary("L1.3", &|a| (pp(pp(a)), a)));
    report.push(unary("L1.4", &|a| (t.rhd(t.minus(t.minus(a)), a), pp(a))));
    report.push(binary("L1.5", &|a, b| (t.plus(t.rhd(a, b)), t.rhd(a, t.plus(b)))));
    report.push(unary("L1.6", &|a| (t.rhd(a, t.plus(a)), t.minus(a))));
    report.push(binary("L1.7", &|a, b| (t.rhd(t.plus(a), t.rhd(a, b)), b)));
    report.push(binary("L1.8", &|a, b| (t.rhd(a, t.rhd(t.plus(a), b)), b)));
    // Both compositions, pointwise in x (bound as b).
    report.push(binary("L1.9", &|a, x| {
        let there = t.rhd(t.minus(a), t.rhd(a, x));
        if there != x {
            return (there, x);
        }
        (t.rhd(a, t.rhd(t.minus(a), x)), x)
    }));
    report.push(binary("L1.10", &|a, b| (t.rhd(t.plus(a), b), t.rhd(t.minus(a), b))));
    report
}
