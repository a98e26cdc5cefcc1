use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_starcong")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

#[test]
fn classify_examples() {
    assert!(stdout(&["classify", "0,1;1,1i"]).starts_with("delta(1)  codim 2\n"));
    assert!(stdout(&["classify", "0,0;0,0"]).starts_with("zero  codim 8\n"));
    assert!(stdout(&["classify", "0,1;1,0"]).starts_with("pair(1,-1)  codim 4\n"));
    assert!(stdout(&["classify", r#"{"m":[["2","0"],["0","0"]]}"#]).starts_with("udz(1)  codim 5\n"));
}

#[test]
fn codim_examples() {
    for (form, want) in [("zero", "8"), ("udz(1)", "5"), ("pair(1,1)", "4"), ("pair(1,1i)", "2"), ("hyp(0)", "2"), ("delta(-1i)", "2")] {
        assert_eq!(stdout(&["codim", form]).trim(), want, "{form}");
    }
}

#[test]
fn arrow_reports_both_ways() {
    let yes = stdout(&["arrow", "udz(1)", "delta(-1i)"]);
    assert!(yes.starts_with("reachable: true\nwitness:"), "{yes}");
    let no = stdout(&["arrow", "pair(1,-1)", "delta(1i)"]);
    assert!(no.starts_with("reachable: false\ncertificate: DetPhaseGap"), "{no}");
    assert!(stdout(&["arrow", "zero", "zero"]).contains("lazy path"));
}

#[test]
fn json_carries_full_precision_reals() {
    let out = stdout(&["classify", "1,0;0,1", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "classify");
    assert_eq!(v["outputs"]["form"], "pair(1,1)");
    assert!(out.contains("\"scale\": 1.4142135623730951e+0"), "{out}");
}

#[test]
fn witness_text() {
    let out = stdout(&["witness", "zero", "hyp(0.5)", "--delta", "1e-3"]);
    assert!(out.contains("M + E classifies as hyp(0.5)"), "{out}");
}

#[test]
fn graph_defaults_to_dot() {
    let out = stdout(&["graph", "zero", "udz(1)"]);
    assert!(out.starts_with("digraph closure {") && out.contains("\"zero\" -> \"udz(1)\";"));
    let text = stdout(&["graph", "zero", "udz(1)", "--format", "text"]);
    assert_eq!(text, "zero -> udz(1)\n");
    assert_eq!(code(&["graph"]), 0);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["classify", "1,2;3"]), 2);
    assert_eq!(code(&["codim", "pair(2,1)"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["classify", "1,0;0,1", "--format", "dot"]), 2);
    assert_eq!(code(&["graph", "zero", "zero"]), 2);
    assert_eq!(code(&["witness", "pair(1,1)", "hyp(0.3)"]), 1);
    assert_eq!(code(&["classify", "1,0;0,1e-9"]), 1);
    assert_eq!(code(&["sample", "zero", "--delta", "5"]), 2);
}

#[test]
fn selftest_passes() {
    let out = stdout(&["selftest"]);
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().all(|l| l.starts_with("ok")), "{out}");
}
