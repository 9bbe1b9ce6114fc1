//! The braided monoidal category of tangled relations over an irack.
//!
//! A relation `R: A^m → A^n` is tangled when, for every related pair
//! `(a, b)` and every element `c`,
//!
//! * TR(1): `(c ▷ a, c ▷ b)` is again related, and
//! * TR(2): `a ▷ c = b ▷ c`.
//!
//! Closure under tuple actions follows from the single-element conditions,
//! so only single elements are checked here.

use std::ops::Deref;

use crate::error::RelationError;
use crate::irack::IrackTable;
use crate::relation::{compose, tensor, Relation};
use crate::report::{relation_equality, scan, CheckReport, Value, Witness};
use crate::tuple::TupleVal;

/// A relation that satisfies TR(1) and TR(2) over a particular irack.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangledRelation(Relation);

impl TangledRelation {
    pub fn new(relation: Relation, irack: &IrackTable) -> Result<Self, Box<CheckReport>> {
        let report = is_tangled(&relation, irack);
        if report.passed() {
            Ok(TangledRelation(relation))
        } else {
            Err(Box::new(report))
        }
    }

    /// For relations that are tangled by construction.
    pub(crate) fn assume(relation: Relation) -> Self {
        TangledRelation(relation)
    }

    pub fn relation(&self) -> &Relation {
        &self.0
    }

    pub fn into_relation(self) -> Relation {
        self.0
    }
}

impl Deref for TangledRelation {
    type Target = Relation;

    fn deref(&self) -> &Relation {
        &self.0
    }
}

/// Checks TR(1) and TR(2) for every pair and every element. The relation's
/// element indices must lie in the irack's carrier.
pub fn is_tangled(r: &Relation, irack: &IrackTable) -> CheckReport {
    let k = irack.size() as u64;
    let pairs: Vec<&(TupleVal, TupleVal)> = r.iter().collect();
    let total = pairs.len() as u64 * k;
    let at = |i: u64| {
        let (a, b) = pairs[(i / k) as usize];
        (a, b, crate::Elem::new((i % k) as usize))
    };
    let bindings =
        |a: &TupleVal, b: &TupleVal, c| vec![("pair", Value::Pair(a.clone(), b.clone())), ("c", Value::Elem(c))];

    let mut report = CheckReport::new();
    report.push(scan("TR(1)", total, |i| {
        let (a, b, c) = at(i);
        let (ca, cb) = (irack.elem_act_each(c, a), irack.elem_act_each(c, b));
        (!r.contains(&ca, &cb)).then(|| Witness::new(bindings(a, b, c), Value::Pair(ca, cb), Value::Member(false)))
    }));
    report.push(scan("TR(2)", total, |i| {
        let (a, b, c) = at(i);
        let (lhs, rhs) = (irack.tuple_act_elem(a, c), irack.tuple_act_elem(b, c));
        (lhs != rhs).then(|| Witness::new(bindings(a, b, c), lhs, rhs))
    }));
    report
}

/// `tw_{m,n}: A^m × A^n → A^n × A^m, (a, b) ↦ (a ▷ b, a)`.
pub fn braiding(m: usize, n: usize, irack: &IrackTable) -> Result<TangledRelation, RelationError> {
    Relation::functional(irack.size(), m + n, n + m, |t| {
        let (a, b) = t.split_at(m);
        irack.tuple_act_tuple(&a, &b).concat(&a)
    })
    .map(TangledRelation::assume)
}

/// Inverse of `tw_{m,n}`: `A^n × A^m → A^m × A^n, (b, a) ↦ (a, b ◁ a)`.
pub fn braiding_inverse(m: usize, n: usize, irack: &IrackTable) -> Result<TangledRelation, RelationError> {
    Relation::functional(irack.size(), n + m, m + n, |t| {
        let (b, a) = t.split_at(n);
        a.concat(&irack.tuple_lhd_tuple(&b, &a))
    })
    .map(TangledRelation::assume)
}

/// `η: I → A × A, () ↦ (a, a⁻)`.
pub fn eta(irack: &IrackTable) -> TangledRelation {
    let pairs = irack.elems().map(|a| (TupleVal::empty(), TupleVal::new(vec![a, irack.minus(a)])));
    TangledRelation::assume(Relation::from_pairs(0, 2, pairs).expect("k pairs"))
}

/// `ε: A × A → I, (a, a⁺) ↦ ()`.
pub fn epsilon(irack: &IrackTable) -> TangledRelation {
    let pairs = irack.elems().map(|a| (TupleVal::new(vec![a, irack.plus(a)]), TupleVal::empty()));
    TangledRelation::assume(Relation::from_pairs(2, 0, pairs).expect("k pairs"))
}

fn id(irack: &IrackTable, n: usize) -> Result<Relation, RelationError> {
    Relation::identity(irack.size(), n)
}

/// Composite of a chain of relations, leftmost applied first.
fn chain(steps: &[&Relation]) -> Result<Relation, RelationError> {
    let (first, rest) = steps.split_first().expect("non-empty chain");
    rest.iter().try_fold((*first).clone(), |acc, r| compose(&acc, r))
}

/// Verifies that `tw` is a braiding at arities `(m, n, p)`:
///
/// * `tw_{m,n}` and its inverse are tangled and mutually inverse;
/// * `coherence.1`: `tw_{m+n,p} = (1_m ⊗ tw_{n,p}) ; (tw_{m,p} ⊗ 1_n)`;
/// * `coherence.2`: `tw_{m,n+p} = (tw_{m,n} ⊗ 1_p) ; (1_n ⊗ tw_{m,p})`;
/// * `yang-baxter`: the two hexagon-style composites `A^m A^n A^p → A^p A^n A^m` agree;
/// * naturality in both arguments for each relation in `natural`, with `1_p`.
///
/// Here `;` is diagrammatic order: the left factor is applied first.
pub fn check_braiding(
    irack: &IrackTable,
    (m, n, p): (usize, usize, usize),
    natural: &[Relation],
) -> Result<CheckReport, RelationError> {
    let tw = |x, y| braiding(x, y, irack).map(TangledRelation::into_relation);
    let mut report = CheckReport::new();

    let forward = braiding(m, n, irack)?;
    let backward = braiding_inverse(m, n, irack)?;
    report.absorb("tw", is_tangled(&forward, irack));
    report.absorb("tw-inverse", is_tangled(&backward, irack));
    let identity = id(irack, m + n)?;
    report.push(relation_equality("invertible.forward-first", &compose(&forward, &backward)?, &identity));
    report.push(relation_equality("invertible.inverse-first", &compose(&backward, &forward)?, &identity));

    let lhs = tw(m + n, p)?;
    let rhs = chain(&[&tensor(&id(irack, m)?, &tw(n, p)?)?, &tensor(&tw(m, p)?, &id(irack, n)?)?])?;
    report.push(relation_equality("coherence.1", &lhs, &rhs));

    let lhs = tw(m, n + p)?;
    let rhs = chain(&[&tensor(&tw(m, n)?, &id(irack, p)?)?, &tensor(&id(irack, n)?, &tw(m, p)?)?])?;
    report.push(relation_equality("coherence.2", &lhs, &rhs));

    let left = chain(&[
        &tensor(&tw(m, n)?, &id(irack, p)?)?,
        &tensor(&id(irack, n)?, &tw(m, p)?)?,
        &tensor(&tw(n, p)?, &id(irack, m)?)?,
    ])?;
    let right = chain(&[
        &tensor(&id(irack, m)?, &tw(n, p)?)?,
        &tensor(&tw(m, p)?, &id(irack, n)?)?,
        &tensor(&id(irack, p)?, &tw(m, n)?)?,
    ])?;
    report.push(relation_equality("yang-baxter", &left, &right));

    for (i, r) in natural.iter().enumerate() {
        let (src, dst) = r.arities();
        let one_p = id(irack, p)?;
        // R passes under a strand from the right: (R ⊗ 1_p) ; tw_{dst,p} = tw_{src,p} ; (1_p ⊗ R)
        let lhs = chain(&[&tensor(r, &one_p)?, &tw(dst, p)?])?;
        let rhs = chain(&[&tw(src, p)?, &tensor(&one_p, r)?])?;
        report.push(relation_equality(&format!("natural[{i}].right"), &lhs, &rhs));
        // and from the left: (1_p ⊗ R) ; tw_{p,dst} = tw_{p,src} ; (R ⊗ 1_p)
        let lhs = chain(&[&tensor(&one_p, r)?, &tw(p, dst)?])?;
        let rhs = chain(&[&tw(p, src)?, &tensor(r, &one_p)?])?;
        report.push(relation_equality(&format!("natural[{i}].left"), &lhs, &rhs));
    }
    Ok(report)
}

/// Verifies that `η` and `ε` make `A` a tangle algebra: both are tangled,
/// both snake equations give `1_A`, and both commute with `tw_{1,1}`.
pub fn check_tangle_algebra(irack: &IrackTable) -> Result<CheckReport, RelationError> {
    let (unit, counit) = (eta(irack), epsilon(irack));
    let one = id(irack, 1)?;
    let tw = braiding(1, 1, irack)?;
    let mut report = CheckReport::new();
    report.absorb("eta", is_tangled(&unit, irack));
    report.absorb("epsilon", is_tangled(&counit, irack));

    let snake1 = chain(&[&tensor(&one, &unit)?, &tensor(&counit, &one)?])?;
    report.push(relation_equality("snake.1", &snake1, &one));
    let snake2 = chain(&[&tensor(&unit, &one)?, &tensor(&one, &counit)?])?;
    report.push(relation_equality("snake.2", &snake2, &one));

    report.push(relation_equality("commute.eta", &compose(&unit, &tw)?, &unit));
    report.push(relation_equality("commute.epsilon", &compose(&tw, &counit)?, &counit));
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{cyclic_group, irack_from_group, symmetric_group};
    use crate::irack::{builtin_example_irack, dual_irack, trivial_irack};

    fn ex() -> IrackTable {
        builtin_example_irack()
    }

    fn t(s: &str) -> TupleVal {
        TupleVal::parse(s, ex().carrier(), 0).unwrap()
    }

    fn rel(m: usize, n: usize, pairs: &[(&str, &str)]) -> Relation {
        Relation::from_pairs(m, n, pairs.iter().map(|(a, b)| (t(a), t(b)))).unwrap()
    }

    fn probe_r() -> Relation {
        rel(0, 3, &[("()", "(a,c,d)"), ("()", "(b,e,f)")])
    }

    fn probe_s() -> Relation {
        rel(3, 0, &[("(a,e,f)", "()"), ("(b,c,d)", "()")])
    }

    #[test]
    fn probe_relation_is_tangled() {
        assert!(is_tangled(&probe_r(), &ex()).passed());
        assert!(is_tangled(&probe_s(), &ex()).passed());
    }

    #[test]
    fn singleton_fails_tr1_at_c() {
        let report = is_tangled(&rel(0, 3, &[("()", "(a,c,d)")]), &ex());
        let tr1 = report.entry("TR(1)").unwrap();
        let w = tr1.witness.as_ref().unwrap();
        assert_eq!(w.binding("c"), Some(&Value::Elem(ex().carrier().lookup("c").unwrap())));
        assert_eq!(w.lhs, Value::Pair(t("()"), t("(b,e,f)")));
        assert!(report.entry("TR(2)").unwrap().passed());
    }

    #[test]
    fn empty_relation_is_tangled() {
        assert!(is_tangled(&Relation::empty(2, 5), &ex()).passed());
    }

    #[test]
    fn braiding_values() {
        let x = ex();
        let tw = braiding(1, 1, &x).unwrap();
        assert_eq!(tw.len(), 49);
        assert!(tw.contains(&t("(c,a)"), &t("(b,c)")));
        let inv = braiding_inverse(1, 1, &x).unwrap();
        assert!(inv.contains(&t("(b,c)"), &t("(c,a)")));
        // Empty tuples act trivially.
        assert_eq!(*braiding(2, 0, &x).unwrap(), Relation::identity(7, 2).unwrap());
        assert_eq!(*braiding(0, 2, &x).unwrap(), Relation::identity(7, 2).unwrap());
    }

    #[test]
    fn braidings_are_tangled() {
        let x = ex();
        for m in 0..=3 {
            for n in 0..=(3 - m) {
                assert!(is_tangled(&braiding(m, n, &x).unwrap(), &x).passed(), "tw_{{{m},{n}}}");
                assert!(is_tangled(&braiding_inverse(m, n, &x).unwrap(), &x).passed());
            }
        }
    }

    #[test]
    fn braiding_laws_on_example() {
        let report = check_braiding(&ex(), (1, 1, 1), &[probe_r(), probe_s()]).unwrap();
        assert!(report.passed(), "{}", report.render(ex().carrier()));
        assert_eq!(report.entry("yang-baxter").unwrap().checks, 343);
        assert_eq!(report.entry("coherence.1").unwrap().checks, 343);
    }

    #[test]
    fn braiding_with_zero_strand() {
        let report = check_braiding(&ex(), (1, 2, 0), &[]).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn naturality_fails_for_untangled_relation() {
        let report = check_braiding(&ex(), (1, 1, 1), &[rel(0, 3, &[("()", "(a,c,d)")])]).unwrap();
        assert!(!report.passed());
    }

    #[test]
    fn other_iracks_are_braided() {
        for x in [
            trivial_irack(),
            irack_from_group(&symmetric_group(3)).unwrap(),
            irack_from_group(&cyclic_group(4)).unwrap(),
        ] {
            assert!(check_braiding(&x, (1, 1, 1), &[]).unwrap().passed());
            assert!(check_braiding(&x, (2, 1, 1), &[]).unwrap().passed());
        }
    }

    #[test]
    fn unit_and_counit() {
        let x = ex();
        let (u, c) = (eta(&x), epsilon(&x));
        assert_eq!(u.len(), 7);
        assert!(u.contains(&t("()"), &t("(c,d)")));
        assert!(c.contains(&t("(c,f)"), &t("()")));
        let one = trivial_irack();
        let e = TupleVal::new(vec![crate::Elem::new(0); 2]);
        assert_eq!(eta(&one).pairs().iter().collect::<Vec<_>>(), vec![&(TupleVal::empty(), e.clone())]);
        assert_eq!(epsilon(&one).pairs().iter().collect::<Vec<_>>(), vec![&(e, TupleVal::empty())]);
    }

    #[test]
    fn tangle_algebra() {
        for x in [ex(), dual_irack(&ex()), trivial_irack()] {
            let report = check_tangle_algebra(&x).unwrap();
            assert!(report.passed(), "{}", report.render(x.carrier()));
            assert_eq!(report.entry("snake.1").unwrap().checks, x.size() as u64);
        }
    }

    #[test]
    fn tangledness_closed_under_compose_and_tensor() {
        let x = ex();
        let pieces = [probe_r(), eta(&x).into_relation(), braiding(1, 2, &x).unwrap().into_relation()];
        for a in &pieces {
            for b in &pieces {
                let prod = tensor(a, b).unwrap();
                assert!(is_tangled(&prod, &x).passed());
            }
        }
        let composite =
            compose(&compose(&probe_r(), &braiding(1, 2, &x).unwrap()).unwrap(), &braiding(2, 1, &x).unwrap()).unwrap();
        assert!(is_tangled(&composite, &x).passed());
    }

    #[test]
    fn tuple_actions_preserve_tangled_pairs() {
        // TR(1)/TR(2) for tuple c follow from the single-element case.
        let x = ex();
        let r = probe_r();
        for c in crate::tuple::TupleSpace::of_arity(7, 2) {
            for (a, b) in r.iter() {
                assert!(r.contains(&x.tuple_act_tuple(&c, a), &x.tuple_act_tuple(&c, b)));
                assert_eq!(x.tuple_act_tuple(a, &c), x.tuple_act_tuple(b, &c));
            }
        }
    }
}
