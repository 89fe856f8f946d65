use std::process::{Command, Output};

use lmu_core::suites::{fst_mu_pairs, round_trip_terms, scl_pairs};

fn lmu(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lmu")).args(args).output().expect("run lmu")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn eta_pair_is_equal() {
    let o = lmu(&["eq", "(\\x.\\y. x y)", "(\\x. x)"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "Equal\n");
}

#[test]
fn scl_reduce_prints_trace_and_result() {
    let o = lmu(&["reduce", "--calculus", "scl", "K0 x y"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "1\tK0\tx\nx\n");
}

#[test]
fn identity_translates_to_skk() {
    let o = lmu(&["translate", "--to-scl", "\\x. x"]);
    assert_eq!(stdout(&o), "S0 K0 K0\n");
    let o = lmu(&["translate", "--to-lm", "K1"]);
    assert_eq!(stdout(&o), "\\x0. #'a0. x0\n");
}

#[test]
fn exit_codes() {
    assert_eq!(code(&lmu(&["eq", "\\x y. x", "\\x y. y"])), 1);
    assert_eq!(code(&lmu(&["eq", "(\\x. x x) (\\x. x x)", "y"])), 3);
    assert_eq!(code(&lmu(&["reduce", "--max-steps", "5", "(\\x. x x) (\\x. x x)"])), 3);
    assert_eq!(code(&lmu(&["reduce", "--max-steps", "0", "x"])), 2);
    assert_eq!(code(&lmu(&["eq", "--calculus", "scl", "K0", "K1"])), 1);
    assert_eq!(code(&lmu(&["demo", "nth", "--len", "2", "--index", "5"])), 2);
}

#[test]
fn parse_errors_report_position() {
    let o = lmu(&["fmt", "\\x. (x y"]);
    assert_eq!(code(&o), 2);
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(":1:9:"), "{err}");
}

#[test]
fn structured_trace_schema() {
    let o = lmu(&["reduce", "--trace", "structured", "(#'a. x 'a) 'b"]);
    let doc: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["exhausted"], false);
    assert_eq!(doc["final"], "x 'b");
    let steps = doc["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 1);
    assert_eq!(steps[0]["k"], 1);
    assert_eq!(steps[0]["rule"], "BetaS");
    assert_eq!(steps[0]["position"], "root");
    assert_eq!(steps[0]["term"], "x 'b");
}

#[test]
fn fst_rules_flag() {
    let o = lmu(&["reduce", "--rules", "fst", "(#'a. x 'a) y"]);
    let out = stdout(&o);
    assert!(out.starts_with("1\tFst\t"), "{out}");
    assert_eq!(out.lines().last(), Some("x y"), "{out}");
}

#[test]
fn reads_files_and_infers_calculus() {
    let dir = std::env::temp_dir().join(format!("lmu-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let scl = dir.join("k.scl");
    std::fs::write(&scl, "K1 x * (y :: 'a)\n").unwrap();
    let o = lmu(&["reduce", scl.to_str().unwrap()]);
    assert_eq!(stdout(&o).lines().last(), Some("x"));
    let lm = dir.join("id.lmu");
    std::fs::write(&lm, "\\x. x").unwrap();
    let o = lmu(&["translate", "--to-scl", lm.to_str().unwrap()]);
    assert_eq!(stdout(&o), "S0 K0 K0\n");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn parse_and_fmt() {
    assert_eq!(stdout(&lmu(&["parse", "\\x. x 'a"])), "(lam (sapp (bound 0) (svar 'a)))\n");
    assert_eq!(stdout(&lmu(&["fmt", "(\\u. (u))"])), "\\x0. x0\n");
    assert_eq!(stdout(&lmu(&["fmt", "--calculus", "scl", "x*(y::'a)"])), "x * (y :: 'a)\n");
}

#[test]
fn demos() {
    let o = lmu(&["demo", "hd", "--n", "3"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("\tBetaT\t") && out.contains("\tMu\t") && out.contains("\tBetaS\t"));
    assert_eq!(code(&lmu(&["demo", "nth", "--len", "5", "--index", "4"])), 0);
    assert_eq!(stdout(&lmu(&["demo", "builtin", "hd"])), "\\x0. #'a0. x0\n# head of a stream\n");
}

#[test]
fn check_and_interp() {
    let o = lmu(&["check", "--suite", "axioms", "--samples", "10"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("# axioms seed=0 n=10\nlaw\tpass\tfail\tunknown\n"));
    let o = lmu(&["check", "--model", "trivial", "--samples", "10"]);
    assert_eq!(code(&o), 0);
    let o = lmu(&["interp", "--model", "trivial", "x 'a"]);
    assert_eq!(stdout(&o), "()\n");
    let o = lmu(&["interp", "--calculus", "scl", "K0 x y"]);
    assert_eq!(stdout(&o), "K0 x y\nnormal form: x\n");
}

/// `reduce` and `eq` on every suite input, as raw bytes.
fn transcript() -> Vec<u8> {
    let mut out = Vec::new();
    let mut push = |o: Output| {
        out.extend(o.stdout);
        out.extend(o.stderr);
        out.push(o.status.code().unwrap() as u8);
    };
    for m in round_trip_terms() {
        push(lmu(&["reduce", &m.to_string()]));
    }
    for (m, n, _) in fst_mu_pairs() {
        push(lmu(&["eq", &m.to_string(), &n.to_string()]));
    }
    for (t, u, _) in scl_pairs() {
        push(lmu(&["reduce", "--calculus", "scl", "--trace", "structured", &t.to_string()]));
        push(lmu(&["eq", "--calculus", "scl", &t.to_string(), &u.to_string()]));
    }
    out
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let first = transcript();
    assert!(!first.is_empty());
    for _ in 0..2 {
        assert_eq!(transcript(), first);
    }
}
