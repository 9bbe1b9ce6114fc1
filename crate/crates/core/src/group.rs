//! Finite groups and the conjugation iracks they induce.

use itertools::Itertools;

use crate::carrier::{Carrier, Elem};
use crate::error::AlgebraError;
use crate::irack::IrackTable;
use crate::table;

/// A multiplication table; `mult[g][h]` holds `g·h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupTable {
    pub carrier: Carrier,
    pub mult: Vec<Vec<usize>>,
}

impl GroupTable {
    /// The two-sided identity, if there is one.
    pub fn identity(&self) -> Option<usize> {
        let k = self.carrier.size();
        (0..k).find(|&e| (0..k).all(|g| self.mult[e][g] == g && self.mult[g][e] == g))
    }
}

/// Builds the conjugation irack `g ▷ h = g h g⁻¹`, `g⁺ = g⁻ = g⁻¹`.
///
/// The table is first verified to be a group; the error names the first
/// group law that fails.
pub fn irack_from_group(group: &GroupTable) -> Result<IrackTable, AlgebraError> {
    let k = group.carrier.size();
    let mult = table::square("mult", &group.mult, k)?;
    let m = |g: usize, h: usize| mult[g * k + h].index();
    let label = |g: usize| group.carrier.labels()[g].clone();

    for g in 0..k {
        for h in 0..k {
            for x in 0..k {
                if m(m(g, h), x) != m(g, m(h, x)) {
                    return Err(AlgebraError::NotAGroup {
                        law: "associativity",
                        witness: Some(format!("({},{},{})", label(g), label(h), label(x))),
                    });
                }
            }
        }
    }
    let e = group.identity().ok_or(AlgebraError::NotAGroup { law: "identity", witness: None })?;
    let mut inverse = Vec::with_capacity(k);
    for g in 0..k {
        match (0..k).find(|&h| m(g, h) == e && m(h, g) == e) {
            Some(h) => inverse.push(h),
            None => return Err(AlgebraError::NotAGroup { law: "inverses", witness: Some(label(g)) }),
        }
    }

    let rhd =
        (0..k).flat_map(|g| (0..k).map(move |h| (g, h))).map(|(g, h)| Elem::new(m(m(g, h), inverse[g]))).collect();
    let inv: Vec<Elem> = inverse.into_iter().map(Elem::new).collect();
    let irack = IrackTable::from_parts(group.carrier.clone(), rhd, inv.clone(), inv);
    debug_assert!(crate::irack::irack_axioms(&irack).passed());
    Ok(irack)
}

/// `Z_n` with elements labelled `0..n`.
pub fn cyclic_group(n: usize) -> GroupTable {
    GroupTable { carrier: Carrier::numbered(n), mult: (0..n).map(|i| (0..n).map(|j| (i + j) % n).collect()).collect() }
}

/// `S_n` for `1 ≤ n ≤ 9`. Elements are permutations of `1..=n` in one-line
/// notation, listed lexicographically, so `S_3` has labels
/// `123 132 213 231 312 321`. Products compose right to left:
/// `(g·h)(x) = g(h(x))`.
pub fn symmetric_group(n: usize) -> GroupTable {
    assert!((1..=9).contains(&n), "symmetric_group supports 1..=9 points");
    let perms = lex_permutations(n);
    let label = |p: &[usize]| p.iter().map(|i| char::from(b'1' + *i as u8)).collect::<String>();
    let index = |p: &[usize]| perms.iter().position(|q| q == p).expect("closed under composition");
    let mult = perms
        .iter()
        .map(|g| perms.iter().map(|h| index(&h.iter().map(|&x| g[x]).collect::<Vec<_>>())).collect())
        .collect();
    GroupTable { carrier: Carrier::new(perms.iter().map(|p| label(p))).expect("digit labels"), mult }
}

/// All permutations of `0..n` in lexicographic order.
pub(crate) fn lex_permutations(n: usize) -> Vec<Vec<usize>> {
    (0..n).permutations(n).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irack::check_irack_axioms;

    #[test]
    fn z2_is_trivial() {
        let t = irack_from_group(&cyclic_group(2)).unwrap();
        for a in t.elems() {
            assert_eq!(t.plus(a), a);
            assert_eq!(t.minus(a), a);
            for b in t.elems() {
                assert_eq!(t.rhd(a, b), b);
            }
        }
    }

    #[test]
    fn z3_inverse() {
        let t = irack_from_group(&cyclic_group(3)).unwrap();
        assert_eq!(t.plus(Elem::new(1)), Elem::new(2));
        assert!(t.elems().all(|a| t.elems().all(|b| t.rhd(a, b) == b)));
    }

    #[test]
    fn s3_conjugation() {
        let g = symmetric_group(3);
        assert_eq!(g.carrier.labels(), ["123", "132", "213", "231", "312", "321"]);
        let t = irack_from_group(&g).unwrap();
        let c = t.carrier();
        // (12) ▷ (13) = (12)(13)(12) = (23)
        let t12 = c.lookup("213").unwrap();
        let t13 = c.lookup("321").unwrap();
        let t23 = c.lookup("132").unwrap();
        assert_eq!(t.rhd(t12, t13), t23);
        assert!(check_irack_axioms(&t.to_raw()).unwrap().passed());
    }

    #[test]
    fn s3_derived_rack_is_inverse_conjugation() {
        let g = symmetric_group(3);
        let t = irack_from_group(&g).unwrap();
        let rack = crate::irack::rack_from_irack(&t);
        let e = g.identity().unwrap();
        let inv = |x: usize| (0..6).find(|&y| g.mult[x][y] == e).unwrap();
        for h in 0..6 {
            for x in 0..6 {
                // h ◁ x = x⁻¹ h x
                let expected = g.mult[g.mult[inv(x)][h]][x];
                assert_eq!(rack.lhd(Elem::new(h), Elem::new(x)), Elem::new(expected));
            }
        }
    }

    #[test]
    fn conjugation_irack_is_self_dual() {
        let t = irack_from_group(&symmetric_group(3)).unwrap();
        assert_eq!(crate::irack::dual_irack(&t), t);
    }

    #[test]
    fn rejects_non_groups() {
        // Constant table: associative, but no identity.
        let g = GroupTable { carrier: Carrier::numbered(2), mult: vec![vec![0, 0], vec![0, 0]] };
        assert!(matches!(irack_from_group(&g), Err(AlgebraError::NotAGroup { law: "identity", .. })));
        // x·y = x - y mod 3 is not associative.
        let g = GroupTable {
            carrier: Carrier::numbered(3),
            mult: (0..3).map(|x| (0..3).map(|y| (x + 3 - y) % 3).collect()).collect(),
        };
        assert!(matches!(irack_from_group(&g), Err(AlgebraError::NotAGroup { law: "associativity", .. })));
        // Monoid {0,1} under max has identity 0 but 1 has no inverse.
        let g = GroupTable { carrier: Carrier::numbered(2), mult: vec![vec![0, 1], vec![1, 1]] };
        assert!(matches!(irack_from_group(&g), Err(AlgebraError::NotAGroup { law: "inverses", .. })));
    }

    #[test]
    fn permutations_are_lexicographic() {
        assert_eq!(lex_permutations(3).len(), 6);
        assert_eq!(lex_permutations(3)[1], vec![0, 2, 1]);
        assert_eq!(lex_permutations(0), vec![Vec::<usize>::new()]);
    }
}
