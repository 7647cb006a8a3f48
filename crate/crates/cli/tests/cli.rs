use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn job(text: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str], file: &tempfile::NamedTempFile, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_skewcoh"));
    cmd.args(&args[..1]).arg(file.path()).args(&args[1..]);
    cmd.env_remove("SKEWCOH_MAX_ORDER");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn json(args: &[&str], file: &tempfile::NamedTempFile) -> (i32, Value) {
    let mut a = args.to_vec();
    a.push("--json");
    let out = run(&a, file, &[]);
    (out.status.code().unwrap(), serde_json::from_slice(&out.stdout).unwrap())
}

const T3: &str = r#"{"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]]}"#;

#[test]
fn analyze_examples() {
    let (code, v) = json(&["analyze"], &job(T3));
    assert_eq!(code, 0);
    assert_eq!(v["formula"]["total_dim"], 6);
    let (_, v) = json(&["analyze"], &job(r#"{"field": {"type": "rational"}, "generator": [[1, 0], [0, 1]]}"#));
    assert_eq!(v["formula"]["total_dim"], 2);
    let (_, v) = json(&["analyze"], &job(r#"{"field": {"type": "prime", "p": 5}, "generator": [[2, 0], [0, 3]]}"#));
    assert_eq!(v["formula"]["total_dim"], 0);
}

#[test]
fn compare_examples() {
    for p in [3, 5, 7] {
        let text = format!(r#"{{"field": {{"type": "prime", "p": {p}}}, "generator": [[1, 1], [0, 1]]}}"#);
        let (code, v) = json(&["compare"], &job(&text));
        assert_eq!(code, 0);
        assert_eq!(v["verdict"]["pass"], true);
        assert_eq!(v["oracle"]["total_dim"], 2 * p);
    }
    let (code, v) = json(&["compare"], &job(r#"{"field": {"type": "prime", "p": 5}, "generator": [[1, 0], [0, -1]]}"#));
    assert_eq!(code, 0);
    assert_eq!(v["formula"]["total_dim"], 1);
    let gl4 = r#"{"field": {"type": "prime", "p": 3}, "generator": [[1,1,0,0],[0,1,1,0],[0,0,1,0],[0,0,0,-1]]}"#;
    let (code, v) = json(&["compare", "--nonmodular-check"], &job(gl4));
    assert_eq!(code, 0);
    assert_eq!(v["verdict"]["pass"], true);
    assert!(!v["group"]["transfer_image"].as_array().unwrap().is_empty());
    let out = run(&["compare"], &job(gl4), &[]);
    assert!(String::from_utf8(out.stdout).unwrap().contains("im T ≠ 0"));
}

#[test]
fn reps_text_shows_tags() {
    let out = run(&["reps"], &job(T3), &[]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("h = g, hg = g^2: 2 basis cochains"));
    assert!(text.contains("⊗ g^2, α = "));
}

#[test]
fn deform_examples() {
    let (code, v) = json(&["deform"], &job(T3));
    assert_eq!(code, 0);
    assert_eq!(v["deformation"]["confluence"]["passed"], true);
    let (code, v) = json(&["deform", "--deform-prime", "7"], &job(T3));
    assert_eq!(code, 0);
    assert_eq!(v["deformation"]["hilbert"][4]["count"], 105);
    let zero = r#"{"field": {"type": "prime", "p": 5}, "generator": [[1, 0], [0, -1]], "deformation": {"preset": "zero"}}"#;
    let (code, v) = json(&["deform"], &job(zero));
    assert_eq!(code, 0);
    assert!(v["deformation"]["bracket"]["Err"].is_string());
    let adv = r#"{"field": {"type": "prime", "p": 3}, "generator": [[1, 1], [0, 1]], "deformation": {"preset": "adversarial"}}"#;
    let (code, v) = json(&["deform"], &job(adv));
    assert_eq!(code, 1);
    assert_eq!(v["deformation"]["confluence"]["witness"]["word"], "g^1·v2·v1");
}

#[test]
fn input_errors_exit_two() {
    for bad in [
        "not json",
        r#"{"field": {"type": "prime", "p": 2}, "generator": [[1]]}"#,
        r#"{"field": {"type": "prime", "p": 9}, "generator": [[1]]}"#,
        r#"{"field": {"type": "prime", "p": 5}, "generator": [[1, 0], [0]]}"#,
        r#"{"field": {"type": "prime", "p": 5}, "generator": [[0, 0], [0, 1]]}"#,
        r#"{"field": {"type": "rational"}, "generator": [["1/2"]]}"#,
        r#"{"field": {"type": "rational"}, "generator": [[1, 1], [0, 1]]}"#,
    ] {
        let out = run(&["analyze"], &job(bad), &[]);
        assert_eq!(out.status.code(), Some(2), "{bad}");
    }
    let out = run(&["deform"], &job(r#"{"field": {"type": "rational"}, "generator": [[1, 0], [0, 1]]}"#), &[]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn order_cap_precedence() {
    let f = job(T3);
    assert_eq!(run(&["analyze"], &f, &[("SKEWCOH_MAX_ORDER", "2")]).status.code(), Some(2));
    assert_eq!(run(&["analyze", "--max-order", "3"], &f, &[("SKEWCOH_MAX_ORDER", "2")]).status.code(), Some(0));
    assert_eq!(run(&["analyze", "--max-order", "2"], &f, &[]).status.code(), Some(2));
    assert_eq!(run(&["analyze"], &f, &[("SKEWCOH_MAX_ORDER", "x")]).status.code(), Some(2));
}

#[test]
fn modes_agree() {
    let f = job(T3);
    let a = run(&["compare", "--json", "--mode", "sequential"], &f, &[]);
    let b = run(&["compare", "--json", "--mode", "parallel"], &f, &[]);
    assert_eq!(a.stdout, b.stdout);
}
