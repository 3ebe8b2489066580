//! The `tkk` binary: evaluation commands, exit codes and report files.

use std::process::{Command, Output};

fn tkk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tkk")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

#[test]
fn bracket_examples() {
    for (alg, a, b, want) in [
        ("tkk", "x+(1,0)", "x-(1,0)", "h(2,0)"),
        ("toroidal", "k1", "E13*t1^2*t2^0", "0"),
        ("twisted", "tw(E13,0,0)(0)", "tw(E13,0,0)(1)", "0"),
    ] {
        let o = tkk(&["bracket", alg, a, b]);
        assert_eq!(o.status.code(), Some(0), "{alg} {a} {b}");
        assert_eq!(stdout(&o), want);
    }
}

#[test]
fn map_examples() {
    for (name, x, want) in
        [("phi", "C1(2,4)", "1/2*tk1(2)(0)"), ("sigma", "E13*t2^0", "E42*t2^1"), ("ig", "k2(3)", "k2@3")]
    {
        let o = tkk(&["map", name, x]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), want);
    }
}

#[test]
fn usage_errors_exit_3() {
    for args in [
        &["bracket", "tkk", "x+(1", "h(0,0)"][..],
        &["bracket", "tkk", "x+(1,1)", "h(0,0)"],
        &["map", "rho", "k1"],
        &["verify", "nope"],
        &["verify", "tkk-jacobi", "--bound", "-1"],
        &["frobnicate"],
        &["module", "--lambda", "1", "--mu", "0", "--c", "0"],
    ] {
        let o = tkk(args);
        assert_eq!(o.status.code(), Some(3), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn help_exits_0() {
    assert_eq!(tkk(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_writes_report_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.jsonl");
    let o = tkk(&["verify", "grading-compat", "--bound", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["record"], "header");
    assert_eq!(lines[0]["schema"], "tkk-verify/1");
    assert_eq!(lines[0]["params"]["bound"], 1);
    let last = lines.last().unwrap();
    assert_eq!(last["record"], "summary");
    assert_eq!(last["status"], "pass");
    assert_eq!(last["failures"], 0);
}

#[test]
fn stdout_report_is_deterministic() {
    let args = ["verify", "tkk-jacobi", "--samples", "500", "--seed", "7"];
    let (a, b) = (tkk(&args), tkk(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn reproduce_reports_outcome() {
    let o = tkk(&["reproduce", "tkk-jacobi", "jacobi", "x+(1,0)", "h(0,0)", "x-(0,0)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "passes");
    let o = tkk(&["reproduce", "ideal-window", "exponent", "2e1", "level=1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = tkk(&["reproduce", "tkk-jacobi", "jacobi", "x+(1,0)"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn module_window_ranks() {
    let o = tkk(&["module", "--lambda", "1", "--mu", "0", "--c", "1", "--degree", "1", "--bands", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> =
        String::from_utf8(o.stdout).unwrap().lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines[0]["triple"], "((1),(0),(1))");
    assert_eq!(lines[1]["rank"], serde_json::json!([2, 2]));
    assert_eq!(lines[2]["verma"], serde_json::json!([8, 44]));
    assert!(lines[1..].iter().all(|l| l["stabilized"] == true));
}

#[test]
fn suites_lists_all() {
    let o = tkk(&["suites"]);
    assert_eq!(stdout(&o).lines().count(), 14);
}
