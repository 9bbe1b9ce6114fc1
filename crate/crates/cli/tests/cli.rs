use std::fs;
use std::process::Command;

use serde_json::Value;

fn irack(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_irack")).args(args).output().expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn verify_example_prints_six_pass_lines() {
    let (code, out, _) = irack(&["verify", "--irack", "builtin:example12"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("# verify irack=builtin:example12"));
    assert_eq!(out.lines().filter(|l| l.contains(": PASS")).count(), 6);
}

#[test]
fn belt_closes_to_point_and_empty() {
    let (code, out, _) = irack(&["belt", "--irack", "builtin:example12", "--strands", "3", "--power", "2"]);
    assert_eq!(code, 0);
    assert!(out.contains("n=3 k=2 result=point\n"));
    assert!(out.contains("trajectory: (a,c,d) -> (a,e,f)\n"));
    let (code, out, _) = irack(&["belt", "--irack", "builtin:example12", "--strands", "3", "--power", "0"]);
    assert_eq!(code, 0);
    assert!(out.contains("result=empty"));
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["tuple-check", "--max-arity", "3", "--budget", "2000", "--seed", "7"][..],
        &["category-check", "--probes", "3"],
        &["enumerate", "--order", "3"],
        &["--json", "verify", "--irack", "builtin:s3"],
    ] {
        assert_eq!(irack(args), irack(args), "{args:?}");
    }
}

#[test]
fn seed_is_echoed_and_changes_the_sample() {
    let (_, a, _) = irack(&["tuple-check", "--max-arity", "3", "--budget", "50", "--seed", "1", "--irack-laws"]);
    let (_, b, _) = irack(&["tuple-check", "--max-arity", "3", "--budget", "50", "--seed", "2", "--irack-laws"]);
    assert!(a.starts_with("# tuple-check irack=builtin:example12 max-arity=3 budget=50 seed=1\n"));
    assert!(a.contains("sampled seed=1"));
    assert_ne!(a.replace("seed=1", "seed=2"), b);
}

#[test]
fn failing_laws_exit_one() {
    let (code, out, _) = irack(&["tuple-check", "--irack-laws"]);
    assert_eq!(code, 1);
    assert!(out.contains("IR(2): FAIL"));
    let (code, _, _) = irack(&["belt", "--power", "2", "--same-as", ""]);
    assert_eq!(code, 1);
    let (code, _, _) = irack(&["braid-eval", "--strands", "3", "--word", "s1", "--equals", "s2"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_and_parse_errors_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.irk");
    fs::write(&bad, "# header comment\nelements: x y\nplus: x y\nminus: x q\n").unwrap();
    let (code, out, err) = irack(&["verify", "--irack", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert_eq!(err.trim(), format!("irack: error: {}:4: unknown element \"q\"", bad.display()));

    let (code, _, err) = irack(&["verify", "--irack", "no/such/file"]);
    assert_eq!(code, 2);
    assert!(err.contains("no/such/file: cannot read"), "{err}");

    assert_eq!(irack(&["frobnicate"]).0, 2);
    assert_eq!(irack(&["belt"]).0, 2);
    assert_eq!(irack(&["enumerate", "--order", "5"]).0, 2);
    assert_eq!(irack(&["braid-eval", "--strands", "3", "--word", "s3"]).0, 2);
    assert_eq!(irack(&["--threads", "0", "verify"]).0, 2);
}

#[test]
fn help_exits_zero() {
    let (code, out, _) = irack(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("category-check"));
}

#[test]
fn non_irack_input_reports_axiom_failures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("swap.irk");
    // Trivial action with the swap as both unary maps violates IR(2).
    fs::write(&path, "elements: x y\nplus: x y\nminus: x y\nrhd:\nx x\ny y\n").unwrap();
    let (code, out, _) = irack(&["lemmas", "--irack", path.to_str().unwrap()]);
    assert_eq!(code, 1, "{out}");
    let (code, out, _) = irack(&["belt", "--irack", path.to_str().unwrap(), "--power", "0"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("# not-an-irack"));
    assert!(out.contains("FAIL"));
}

#[test]
fn group_and_rack_sources() {
    let dir = tempfile::tempdir().unwrap();
    let group = dir.path().join("z2.grp");
    fs::write(&group, "elements: e g\nmult:\ne g\ng e\n").unwrap();
    let source = format!("group:{}", group.display());
    let (code, out, _) = irack(&["verify", "--irack", &source]);
    assert_eq!(code, 0, "{out}");

    let rack = dir.path().join("trivial.rack");
    fs::write(&rack, "elements: p q\nrhd:\np q\np q\nlhd:\np p\nq q\n").unwrap();
    let (code, out, _) = irack(&["verify", "--rack", rack.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.contains(": PASS")).count(), 4);
}

#[test]
fn json_mode_is_an_equivalent_tree() {
    let (code, out, _) = irack(&["--json", "tuple-check", "--irack-laws"]);
    assert_eq!(code, 1);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["command"], "tuple-check");
    assert_eq!(doc["params"]["seed"], "0");
    assert_eq!(doc["passed"], false);
    let ir2 = doc["entries"].as_array().unwrap().iter().find(|e| e["law"] == "IR(2)").unwrap();
    assert_eq!(ir2["status"], "FAIL");
    assert_eq!(ir2["witness"]["bindings"]["a"], "(a,c)");
    assert_eq!(ir2["witness"]["lhs"], "(f,a)");

    let (_, out, _) = irack(&["--json", "belt", "--power", "2"]);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["result"], "point");
    assert_eq!(doc["trajectories"][0][1], "(a,e,f)");
}

#[test]
fn thread_cap_does_not_change_output() {
    let args = ["tuple-check", "--max-arity", "2"];
    let (_, many, _) = irack(&args);
    let (_, one, _) = irack(&["--threads", "1", "tuple-check", "--max-arity", "2"]);
    assert_eq!(many, one);
}

#[test]
fn enumerate_writes_loadable_files() {
    let dir = tempfile::tempdir().unwrap();
    let (code, out, _) = irack(&["enumerate", "--order", "3", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("order=3 raw=11 canonical=5\n"));
    let mut files: Vec<_> = fs::read_dir(dir.path()).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 5);
    for f in files {
        let (code, _, err) = irack(&["verify", "--irack", f.to_str().unwrap()]);
        assert_eq!(code, 0, "{}: {err}", f.display());
    }
    let (_, out, _) = irack(&["enumerate", "--order", "4", "--racks"]);
    assert!(out.contains("order=4 raw=114 canonical=19"));
}

#[test]
fn braid_relation_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tw.rel");
    let (code, out, _) = irack(&["braid-eval", "--strands", "2", "--word", "s1", "--output", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("wrote 49 pairs"));
    let (code, out, _) = irack(&["tangle-check", "--relation", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = irack(&["category-check", "--natural", path.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn saturate_outputs_a_relation_file() {
    let dir = tempfile::tempdir().unwrap();
    let seed = dir.path().join("seed.rel");
    fs::write(&seed, "arity: 0 -> 3\n() | (a,c,d)\n").unwrap();
    let (code, out, _) = irack(&["saturate", "--relation", seed.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.ends_with("arity: 0 -> 3\n() | (a,c,d)\n() | (b,e,f)\n"));
    let closed = dir.path().join("closed.rel");
    fs::write(&closed, &out).unwrap();
    assert_eq!(irack(&["tangle-check", "--relation", closed.to_str().unwrap()]).0, 0);

    fs::write(&seed, "arity: 0 -> 1\n() | (c)\n").unwrap();
    let (code, out, _) = irack(&["saturate", "--relation", seed.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("TR(2): FAIL checks=1 witness pair=() | (c) c=a lhs=a rhs=b"));
    let (code, _, err) = irack(&["saturate", "--relation", seed.to_str().unwrap(), "--max-pairs", "1"]);
    assert_eq!(code, 2);
    assert!(err.contains("exceeds 1 pairs"));
}

#[test]
fn braid_eval_pushes_tuples_left_to_right() {
    let (code, out, _) = irack(&["braid-eval", "--strands", "3", "--word", "s1 s2 s1", "--tuple", "(a,c,d)"]);
    assert_eq!(code, 0);
    assert!(out.contains("(a,c,d) -> (f,c,a)\n"));
    let (code, _, err) = irack(&["braid-eval", "--strands", "3", "--word", "s1", "--tuple", "(a,z,d)"]);
    assert_eq!(code, 2);
    assert!(err.contains("--tuple"));
}
