use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_filtquiv"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--format", "json", "--no-timing"]);
    let out = run(&all);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}", String::from_utf8_lossy(&out.stderr));
    });
    (v, out.status.code().unwrap())
}

#[test]
fn classify_jordan2() {
    let (v, code) = json(&["classify", &fixture("j2.quiver")]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "MoreThanTwo");
    assert_eq!(v["data"]["pair"], serde_json::json!(["1", "1"]));
    assert_eq!(
        v["data"]["witnesses"],
        serde_json::json!(["e1", "a1", "a2"])
    );
}

#[test]
fn verify_thm1_a2() {
    let (v, code) = json(&["verify-thm1", &fixture("a2.quiver"), "--n", "2", "--d", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["verdict"], "CONSISTENT");
    assert_eq!(v["data"]["kernel_dimension"], 10);
    assert_eq!(v["schema"], 1);
}

#[test]
fn verify_example_text() {
    let out = run(&["verify-example", "4.6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("verdict: PASS"));
    assert!(text.contains("polynomial: 1*x_1_1*x_2_1^2*x_2_2^2*a1_1_1*a1_2_2^2 - 1*x_1_2*x_2_1^3*x_2_2*a1_1_1*a1_2_2^2"));
}

#[test]
fn theorem2_pass_and_fail_exit_codes() {
    let (v, code) = json(&[
        "verify-thm2",
        &fixture("framed_a1.quiver"),
        "--n",
        "2",
        "--m",
        "2",
        "--d",
        "2",
    ]);
    assert_eq!((v["verdict"].as_str(), code), (Some("PASS"), 0));
    let (v, code) = json(&[
        "verify-thm2",
        &fixture("framed_loop.quiver"),
        "--n",
        "2",
        "--m",
        "1",
        "--d",
        "2",
    ]);
    assert_eq!((v["verdict"].as_str(), code), (Some("FAIL"), 1));
}

#[test]
fn parse_and_usage_errors_exit_2() {
    let out = run(&["classify", &fixture("undeclared.quiver")]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("undeclared.quiver:4:16: undeclared vertex 3"),
        "{err}"
    );
    assert_eq!(
        run(&["classify", &fixture("missing.quiver")]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify-thm1", &fixture("a2.quiver"), "--n", "2"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        run(&[
            "verify-thm2",
            &fixture("a2.quiver"),
            "--n",
            "2",
            "--m",
            "1",
            "--d",
            "1"
        ])
        .status
        .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify-thm1", &fixture("a2.quiver"), "--n", "0", "--d", "1"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn resource_guard_exits_3() {
    let out = run(&[
        "invariants",
        &fixture("j2.quiver"),
        "--n",
        "3",
        "--d",
        "3",
        "--max-monomials",
        "50",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8(out.stderr)
        .unwrap()
        .contains("resource guard"));
}

#[test]
fn reports_are_byte_identical() {
    let args = [
        "generators",
        &fixture("framed_a1.quiver"),
        "--n",
        "2",
        "--m",
        "2",
        "--d",
        "2",
        "--format",
        "json",
        "--no-timing",
    ];
    let a = run(&args).stdout;
    let mut seq = args.to_vec();
    seq.push("--sequential");
    assert_eq!(a, run(&args).stdout);
    assert_eq!(a, run(&seq).stdout);
}

#[test]
fn invariants_on_framed_quiver() {
    let (v, code) = json(&[
        "invariants",
        &fixture("framed_loop.quiver"),
        "--n",
        "2",
        "--m",
        "1",
        "--d",
        "2",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["data"]["dims"], serde_json::json!([1, 3, 7]));
    assert_eq!(v["m"], 1);
}
