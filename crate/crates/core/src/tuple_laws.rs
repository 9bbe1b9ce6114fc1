//! Rack and irack laws lifted to tuples.
//!
//! Instances range over every combination of tuples of arity `0..=max_arity`
//! (mixed arities included). When a law has more instances than the budget,
//! a pseudorandom sample of `budget` instances is drawn instead, from a
//! generator seeded with the configured seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::irack::IrackTable;
use crate::report::{scan, CheckReport, LawEntry, Value, Witness};
use crate::tuple::{TupleSpace, TupleVal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TupleCheckConfig {
    pub max_arity: usize,
    /// Largest instance count still checked exhaustively, and the sample
    /// size above it.
    pub budget: u64,
    pub seed: u64,
}

impl TupleCheckConfig {
    pub fn exhaustive(max_arity: usize) -> Self {
        TupleCheckConfig { max_arity, budget: u64::MAX, seed: 0 }
    }
}

const NAMES: [&str; 3] = ["a", "b", "c"];

fn tuple_law<F>(law: &str, irack: &IrackTable, config: &TupleCheckConfig, vars: usize, eval: F) -> LawEntry
where
    F: Fn(&[TupleVal]) -> Option<(TupleVal, TupleVal)> + Sync,
{
    let space = TupleSpace::new(irack.size(), config.max_arity);
    let n = space.count();
    let total = n.checked_pow(vars as u32).unwrap_or(u64::MAX);
    let witness = |args: &[TupleVal]| {
        eval(args).map(|(lhs, rhs)| {
            let bindings = NAMES.iter().zip(args).map(|(&name, t)| (name, Value::Tuple(t.clone()))).collect();
            Witness::new(bindings, lhs, rhs)
        })
    };

    if total <= config.budget {
        return scan(law, total, |mut i| {
            let mut args = Vec::with_capacity(vars);
            for _ in 0..vars {
                args.push(space.nth(i % n));
                i /= n;
            }
            args.reverse();
            witness(&args)
        });
    }

    let k = irack.size();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let sample: Vec<Vec<TupleVal>> = (0..config.budget)
        .map(|_| {
            (0..vars)
                .map(|_| {
                    let arity = rng.gen_range(0..=config.max_arity);
                    (0..arity).map(|_| crate::Elem::new(rng.gen_range(0..k))).collect()
                })
                .collect()
        })
        .collect();
    scan(law, sample.len() as u64, |i| witness(&sample[i as usize])).with_seed(config.seed)
}

/// R(1)–R(4) for tuples acting on tuples.
pub fn check_tuple_rack(irack: &IrackTable, config: &TupleCheckConfig) -> CheckReport {
    let t = irack;
    let mut report = CheckReport::new();
    report.push(tuple_law("R(1)", t, config, 2, |v| {
        let (a, b) = (&v[0], &v[1]);
        let lhs = t.tuple_lhd_tuple(&t.tuple_act_tuple(a, b), a);
        (&lhs != b).then(|| (lhs, b.clone()))
    }));
    report.push(tuple_law("R(2)", t, config, 2, |v| {
        let (a, b) = (&v[0], &v[1]);
        let lhs = t.tuple_act_tuple(a, &t.tuple_lhd_tuple(b, a));
        (&lhs != b).then(|| (lhs, b.clone()))
    }));
    report.push(tuple_law("R(3)", t, config, 3, |v| {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let lhs = t.tuple_act_tuple(a, &t.tuple_act_tuple(b, c));
        let rhs = t.tuple_act_tuple(&t.tuple_act_tuple(a, b), &t.tuple_act_tuple(a, c));
        (lhs != rhs).then_some((lhs, rhs))
    }));
    report.push(tuple_law("R(4)", t, config, 3, |v| {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let lhs = t.tuple_lhd_tuple(&t.tuple_lhd_tuple(c, b), a);
        let rhs = t.tuple_lhd_tuple(&t.tuple_lhd_tuple(c, a), &t.tuple_lhd_tuple(b, a));
        (lhs != rhs).then_some((lhs, rhs))
    }));
    report
}

/// IR(1)–IR(6) for tuples with `a⁻`, `a⁺` reversing and mapping each
/// component. Everything but IR(2) holds; IR(2) generally fails once pairs
/// are allowed.
pub fn check_tuple_irack(irack: &IrackTable, config: &TupleCheckConfig) -> CheckReport {
    let t = irack;
    let mut report = CheckReport::new();
    report.push(tuple_law("IR(1)", t, config, 1, |v| {
        let a = &v[0];
        let pm = t.tuple_neg(&t.tuple_pos(a));
        let mp = t.tuple_pos(&t.tuple_neg(a));
        if &pm != a {
            Some((pm, a.clone()))
        } else if &mp != a {
            Some((mp, a.clone()))
        } else {
            None
        }
    }));
    report.push(tuple_law("IR(2)", t, config, 1, |v| {
        let a = &v[0];
        let lhs = t.tuple_act_tuple(a, &t.tuple_neg(a));
        let rhs = t.tuple_pos(a);
        (lhs != rhs).then_some((lhs, rhs))
    }));
    report.push(tuple_law("IR(3)", t, config, 2, |v| {
        let (a, b) = (&v[0], &v[1]);
        let lhs = t.tuple_act_tuple(&t.tuple_neg(a), &t.tuple_act_tuple(a, b));
        (&lhs != b).then(|| (lhs, b.clone()))
    }));
    report.push(tuple_law("IR(4)", t, config, 2, |v| {
        let (a, b) = (&v[0], &v[1]);
        let lhs = t.tuple_act_tuple(a, &t.tuple_act_tuple(&t.tuple_neg(a), b));
        (&lhs != b).then(|| (lhs, b.clone()))
    }));
    report.push(tuple_law("IR(5)", t, config, 3, |v| {
        let (a, b, c) = (&v[0], &v[1], &v[2]);
        let lhs = t.tuple_act_tuple(a, &t.tuple_act_tuple(b, c));
        let rhs = t.tuple_act_tuple(&t.tuple_act_tuple(a, b), &t.tuple_act_tuple(a, c));
        (lhs != rhs).then_some((lhs, rhs))
    }));
    report.push(tuple_law("IR(6)", t, config, 2, |v| {
        let (a, b) = (&v[0], &v[1]);
        let lhs = t.tuple_act_tuple(a, &t.tuple_neg(b));
        let rhs = t.tuple_neg(&t.tuple_act_tuple(a, b));
        (lhs != rhs).then_some((lhs, rhs))
    }));
    report
}
