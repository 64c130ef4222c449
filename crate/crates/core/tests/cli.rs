use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sally-hilbert"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn sally-hilbert")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("sally-hilbert-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn example_spec(args: &[&str], file: &str) -> PathBuf {
    let mut full = vec!["example"];
    full.extend_from_slice(args);
    let out = run(&full);
    assert_eq!(out.status.code(), Some(0));
    scratch(file, &String::from_utf8(out.stdout).unwrap())
}

#[test]
fn invariants_text_for_ex32() {
    let spec = example_spec(&["ex32"], "ex32.json");
    let out = run(&["invariants", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("e_0..e_d        (16, 6, 0)"));
    assert!(text.contains("r_Q(I)          2"));
    assert!(text.contains("ℓ(Ĩ/I) = 1"));
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let spec = example_spec(&["sec5", "--m", "1", "--d", "1"], "sec5-json.json");
    let a = run(&["--json", "invariants", spec.to_str().unwrap()]);
    let b = run(&["--json", "invariants", spec.to_str().unwrap()]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["hilbert"]["e"], serde_json::json!([3, 2]));
    assert_eq!(v["sally"]["rr"]["delta_length"], 1);
}

#[test]
fn classify_reports_status() {
    let spec = example_spec(&["ex32", "--m", "1"], "ex32-m1.json");
    let out = run(&["--json", "classify", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["status"], "PASS");
}

#[test]
fn hilbert_with_n_max() {
    let spec = example_spec(&["sec5", "--m", "3", "--d", "2", "--lambda", "3"], "sec5-l3.json");
    let out = run(&["--json", "hilbert", spec.to_str().unwrap(), "--n-max", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["e"], serde_json::json!([5, 3, 1]));
    assert_eq!(v["table"].as_array().unwrap().len(), 8);
}

#[test]
fn prime_flag_overrides_spec() {
    let spec = example_spec(&["sec5"], "sec5-prime.json");
    let out = run(&["--prime", "101", "--json", "invariants", spec.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["spec_echo"]["options"]["prime"], 101);
    assert_eq!(v["hilbert"]["e"], serde_json::json!([3, 2]));
}

#[test]
fn missing_file_is_a_usage_error() {
    let out = run(&["classify", "missing.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_arguments_are_usage_errors() {
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["example", "sec5", "--m", "2", "--d", "2", "--lambda", "1"]).status.code(), Some(1));
    assert_eq!(run(&["example", "nope"]).status.code(), Some(1));
}

#[test]
fn malformed_spec_is_a_usage_error() {
    let path = scratch("bad.json", r#"{"ring": {"vars": ["X"], "char": 0, "relations": []}, "ideal_I": ["X +"], "ideal_Q": ["X"], "options": {}}"#);
    assert_eq!(run(&["invariants", path.to_str().unwrap()]).status.code(), Some(1));
    let path = scratch("unknown.json", r#"{"nonsense": 1}"#);
    assert_eq!(run(&["invariants", path.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn non_reduction_is_a_computation_error() {
    let path = scratch(
        "nonred.json",
        r#"{"ring": {"vars": ["X", "Y"], "char": 0, "relations": []},
            "ideal_I": ["X", "Y"], "ideal_Q": ["X^2", "Y"], "options": {}}"#,
    );
    let out = run(&["invariants", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn uncertifiable_local_problem_is_a_computation_error() {
    let path = scratch(
        "notprimary.json",
        r#"{"ring": {"vars": ["X", "Y"], "char": 101, "relations": ["X*Y"], "dim": 1},
            "ideal_I": ["X"], "ideal_Q": ["X"], "options": {"N_max": 8}}"#,
    );
    let out = run(&["invariants", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_exits_zero() {
    let out = run(&["selftest", "--seed", "9"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("criterion")).count(), 6);
}
