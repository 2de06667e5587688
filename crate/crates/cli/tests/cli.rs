use std::io::Write;
use std::process::{Command, Output, Stdio};

use partmzv::mzv::{zdegree_limit, Limit, MzvLin};
use partmzv::qbracket_fast::qbracket_fast;
use partmzv::word_algebra::parse::parse_wordsum;
use partmzv::{Model, QSeries};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partmzv"))
        .args(args)
        .output()
        .unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_partmzv"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn basis_count() {
    let o = run(&["basis", "--weight", "6", "--count"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "233");
    let o = run(&["basis", "--weight", "2"]);
    assert_eq!(stdout(&o).lines().count(), 5);
}

#[test]
fn stuffle_in_text() {
    let o = run(&["stuffle", "--model", "seki", "P(2;0)", "P(3;0)"]);
    assert_eq!(o.status.code(), Some(0));
    let got = parse_wordsum(stdout(&o).trim()).unwrap();
    assert_eq!(
        got,
        parse_wordsum("(2,3;0,0) + (3,2;0,0) + (5;0) - 1/12 (3;0)").unwrap()
    );
}

#[test]
fn divergent_limit_is_refused() {
    let o = run(&["limit", "P(1;0)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("divergent"));
}

#[test]
fn limit_json_parses_back() {
    let o = run(&["limit", "--json", "P(2,1;0,0)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let z = MzvLin::from_json(&v["mzv"]).unwrap();
    let w = parse_wordsum("(2,1;0,0)").unwrap();
    let Limit::Value(want) = zdegree_limit(w.iter().next().unwrap().0).unwrap() else {
        panic!()
    };
    assert_eq!(z, want);
    assert!((v["value"].as_f64().unwrap() - want.eval()).abs() < 1e-15);
}

#[test]
fn malformed_input_exits_with_two() {
    for args in [
        &["stuffle", "P(1;0", "P(1;0)"][..],
        &["iota", "P(0;1)"],
        &["iota", "{\"terms\": 3}"],
        &["--model", "nope", "basis", "--weight", "2"],
        &["eval", "--partition", "[1,2]", "P(1;1)"],
        &["verify", "--suite", "nope"],
        &["degree", "P(1;0) + P(2;0)"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn conflicting_models_are_rejected() {
    let j = parse_wordsum("(2;0)").unwrap().to_json(Model::Binomial);
    let o = run(&["derive", "--model", "seki", &j.to_string()]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["derive", &j.to_string()]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn quasimod_wording_and_order_check() {
    let o = run(&["quasimod", "P(4;0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("consistent with quasimodular to order 30"));
    let o = run(&["quasimod", "--order", "5", "P(2,2;0,0)"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["quasimod", "P(3;0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("not consistent"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["shuffle", "--json", "(2;0)", "(2,1;1,0)"][..],
        &["bimzv", "(1,2;0,0)"],
        &["verify", "--suite", "sum-formula", "--json"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn wordsum_json_round_trips() {
    let first = run(&[
        "stuffle",
        "--json",
        "--model",
        "binomial",
        "(2;1)",
        "(1,2;0,0)",
    ]);
    let text = stdout(&first);
    // multiplying by the empty word reproduces the input byte for byte
    let again = run_stdin(&["stuffle", "--json", "-", "1"], &text);
    assert_eq!(again.status.code(), Some(0), "{}", stderr(&again));
    assert_eq!(stdout(&again), text);
}

#[test]
fn qbracket_json_matches_library() {
    let o = run(&["qbracket", "--json", "--order", "12", "(2,1;1,0)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let s: QSeries = serde_json::from_value(v["series"].clone()).unwrap();
    assert_eq!(
        s,
        qbracket_fast(Model::Seki, &parse_wordsum("(2,1;1,0)").unwrap(), 12)
    );
    let e = run(&[
        "qbracket",
        "--json",
        "--order",
        "12",
        "--enumerate",
        "(2,1;1,0)",
    ]);
    assert_eq!(e.stdout, o.stdout);
}

#[test]
fn functions_and_partitions() {
    let o = run(&[
        "eval",
        "--partition",
        "[3,1]",
        "--function",
        r#"{"kind":"shifted_symmetric_Q","k":2}"#,
    ]);
    assert_eq!(stdout(&o).trim(), "95/24");
    let o = run(&["moller", "--partition", "[2,1]", "(1;2)"]);
    assert_eq!(stdout(&o).trim(), "5");
    let o = run(&["eval", "--partition", "[3,3,1]", "(1;1)"]);
    assert_eq!(stdout(&o).trim(), "7");
}

#[test]
fn verify_suites() {
    for suite in ["sum-formula", "three-one", "double-shuffle", "iota"] {
        let o = run(&["verify", "--suite", suite, "--json"]);
        assert_eq!(o.status.code(), Some(0), "{suite}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["pass"], serde_json::json!(true));
        assert!(!v["suites"][0]["cases"].as_array().unwrap().is_empty());
    }
}
