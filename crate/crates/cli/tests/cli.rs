//! End-to-end tests driving the compiled binary: formats, verdicts, exit
//! codes, and output determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn write_file(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_koszul-pairs"));
    cmd.env_remove("KOSZUL_FIELD_P")
        .env_remove("KOSZUL_CAP_GB")
        .env_remove("KOSZUL_CAP_BAR");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

struct Files {
    _dir: tempfile::TempDir,
    p3: PathBuf,
    p4: PathBuf,
    k2: PathBuf,
    k3: PathBuf,
    c5: PathBuf,
    net: PathBuf,
}

fn files() -> Files {
    let dir = tempfile::tempdir().unwrap();
    let p3 = write_file(&dir, "p3.txt", "n 3\n1 2\n2 3\n");
    let p4 = write_file(&dir, "p4.json", r#"{"n": 4, "edges": [[1,2],[2,3],[3,4]]}"#);
    let k2 = write_file(&dir, "k2.json", r#"{"n": 2, "edges": [[1,2]]}"#);
    let k3 = write_file(&dir, "k3.json", r#"{"n": 3, "edges": [[1,2],[1,3],[2,3]]}"#);
    let c5 = write_file(
        &dir,
        "c5.txt",
        "n 5\n1 2\n2 3\n3 4\n4 5\n5 1\n",
    );
    let net = write_file(
        &dir,
        "net.json",
        r#"{"n": 6, "edges": [[1,2],[2,3],[2,4],[3,4],[3,5],[4,6]]}"#,
    );
    Files {
        _dir: dir,
        p3,
        p4,
        k2,
        k3,
        c5,
        net,
    }
}

#[test]
fn check_graph_verdicts_are_exit_zero() {
    let f = files();
    let out = run(&["check-graph", f.net.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("NOT CLOSED: induced net"));

    let out = run(&["check-graph", f.c5.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("induced 5-cycle"));

    let out = run(&["check-graph", f.k3.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("CLOSED"));
    assert!(stdout_of(&out).contains("[1,3]"));
}

#[test]
fn label_prints_facets() {
    let f = files();
    let out = run(&["label", f.p4.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("labeling"));
    assert!(text.contains("[1,2] [2,3] [3,4]"));

    let out = run(&["label", f.net.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("no closed labeling"));
}

#[test]
fn check_pair_text_and_json() {
    let f = files();
    let out = run(&["check-pair", f.p4.to_str().unwrap(), f.k3.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("status: Koszul"));

    let out = run(&["check-pair", f.net.to_str().unwrap(), f.k3.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("status: NotKoszul"));

    let out = run(&[
        "check-pair",
        "--format",
        "json",
        "--cross-check",
        f.p3.to_str().unwrap(),
        f.p3.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["verdict"]["status"], "NotKoszul");
    assert_eq!(json["cross_check"]["gb_lex_quadratic"], false);
    assert_eq!(json["cross_check"]["linear_quotients_ok"], false);
    assert_eq!(json["cross_check"]["all_labelings_fail"], true);
    assert_eq!(json["cross_check"]["consistent"], true);
}

#[test]
fn out_of_scope_pair() {
    let f = files();
    let out = run(&["check-pair", f.k2.to_str().unwrap(), f.k3.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("OutOfScope"));
}

#[test]
fn gb_single_minor_and_quadraticity() {
    let f = files();
    let out = run(&["gb", f.k2.to_str().unwrap(), f.k2.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("quadratic: true"));
    assert!(text.contains("x[1,1]*x[2,2] - x[1,2]*x[2,1]"));

    let out = run(&["gb", f.p3.to_str().unwrap(), f.p3.to_str().unwrap()]);
    assert!(stdout_of(&out).contains("quadratic: false"));

    let out = run(&[
        "gb",
        "--order",
        "revlex",
        f.p4.to_str().unwrap(),
        f.k3.to_str().unwrap(),
    ]);
    assert!(stdout_of(&out).contains("quadratic: true"));
}

#[test]
fn gb_over_the_rationals() {
    let f = files();
    let out = run(&["gb", "--p", "0", f.k2.to_str().unwrap(), f.k2.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("x[1,1]*x[2,2] - x[1,2]*x[2,1]"));
}

#[test]
fn colon_and_quotients() {
    let f = files();
    let out = run(&[
        "colon",
        f.p3.to_str().unwrap(),
        f.p3.to_str().unwrap(),
        "--by",
        "x[3,1]",
    ]);
    assert!(out.status.success());
    assert!(!stdout_of(&out).trim().is_empty());

    let out = run(&["quotients", f.p3.to_str().unwrap(), f.p3.to_str().unwrap()]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("x[2,1]: FAIL"));
    assert!(text.contains("linear quotients: fail"));

    let out = run(&["quotients", f.p4.to_str().unwrap(), f.k3.to_str().unwrap()]);
    assert!(stdout_of(&out).contains("linear quotients: pass"));
}

#[test]
fn betti_values_and_caps() {
    let f = files();
    let out = run(&[
        "betti",
        f.p3.to_str().unwrap(),
        f.p3.to_str().unwrap(),
        "--i",
        "2",
        "--j",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout_of(&out).trim(), "40");

    let out = run(&[
        "betti",
        f.p3.to_str().unwrap(),
        f.p3.to_str().unwrap(),
        "--i",
        "0",
        "--j",
        "0",
        "--format",
        "json",
    ]);
    let json: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(json["value"], 1);

    // resource cap: exit code 3 with a dimension diagnostic
    let out = run(&[
        "betti",
        f.p3.to_str().unwrap(),
        f.p3.to_str().unwrap(),
        "--i",
        "3",
        "--j",
        "5",
        "--cap-bar",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr).unwrap().contains("dimension"));
}

#[test]
fn parse_and_config_errors_are_exit_two() {
    let f = files();
    let dir = tempfile::tempdir().unwrap();
    let bad = write_file(&dir, "bad.txt", "this is not a graph\n");
    let out = run(&["check-graph", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    let missing = dir.path().join("nope.json");
    let out = run(&["check-graph", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));

    // composite characteristic
    let out = run(&[
        "gb",
        "--p",
        "32004",
        f.k2.to_str().unwrap(),
        f.k2.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    // betti needs a prime field
    let out = run(&[
        "betti",
        "--p",
        "0",
        f.p3.to_str().unwrap(),
        f.p3.to_str().unwrap(),
        "--i",
        "1",
        "--j",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn env_vars_apply_and_flags_win() {
    let f = files();
    // a bad env characteristic fails, unless a flag overrides it
    let out = bin()
        .env("KOSZUL_FIELD_P", "32004")
        .args(["gb", f.k2.to_str().unwrap(), f.k2.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));

    let out = bin()
        .env("KOSZUL_FIELD_P", "32004")
        .args(["gb", "--p", "101", f.k2.to_str().unwrap(), f.k2.to_str().unwrap()])
        .output()
        .unwrap();
    assert!(out.status.success());

    // tiny bar cap through the environment trips the cap exit code
    let out = bin()
        .env("KOSZUL_CAP_BAR", "5")
        .args([
            "betti",
            f.p3.to_str().unwrap(),
            f.p3.to_str().unwrap(),
            "--i",
            "2",
            "--j",
            "2",
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn json_output_is_deterministic() {
    let f = files();
    let args = [
        "check-pair",
        "--format",
        "json",
        "--cross-check",
        f.p4.to_str().unwrap(),
        f.k3.to_str().unwrap(),
    ];
    let first = run(&args);
    let second = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_paper_passes_and_tiny_caps_skip() {
    let f = files();
    let _ = f;
    let out = run(&["verify-paper"]);
    assert!(out.status.success(), "{}", stdout_of(&out));
    let text = stdout_of(&out);
    assert!(text.contains("pass"));
    assert!(!text.contains("FAIL"));

    // a tiny bar cap downgrades the Betti fixture to a skip, still exit 0
    let out = run(&["verify-paper", "--cap-bar", "10"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("skipped"));
}
