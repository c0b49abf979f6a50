use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hessian-verify")).args(args).output().expect("binary runs")
}

#[test]
fn golay_text_lines() {
    let out = run(&["verify", "golay"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[PASS] golay.octads.count expected=759 actual=759 (golay::build_steiner)"));
}

#[test]
fn json_is_reproducible() {
    let args = ["verify", "--suite", "leech", "--json", "--seed", "7", "--no-timing"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"], "leech");
    assert_eq!(v["duration_ms"], 0);
    let c = &v["checks"][0];
    for key in ["id", "status", "expected", "actual", "ref"] {
        assert!(c.get(key).is_some(), "{key}");
    }
}

#[test]
fn failing_suite_exits_one() {
    let out = run(&["verify", "pencils"]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[FAIL] pencils.relation.type2.torsion.n13 expected=lhs-rhs=0 actual=lhs-rhs=-T46"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["reduce", "--word", "p16,q9"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "golay", "--seed", "x"]).status.code(), Some(2));
}

#[test]
fn reduce_word() {
    let out = run(&["reduce", "--word", "p16", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["word"], serde_json::json!(["p16"]));
    assert_eq!(v["heights"], serde_json::json!(["28", "20"]));
    let out = run(&["reduce", "--word", "tau,p16,g1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("residual: tau∘s12345"), "{text}");
}
