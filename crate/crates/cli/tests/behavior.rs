//! Exit-code semantics, error codes and @file indirection, exercised
//! against the real binary.

use std::io::Write;
use std::process::Command;

fn wpfol(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_wpfol"))
        .args(args)
        .output()
        .expect("binary must run");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("no signal exits"),
    )
}

fn report(stdout: &str) -> serde_json::Value {
    serde_json::from_str(stdout).expect("stdout must be one JSON report")
}

const DELTA_K2: &str =
    "(2*x0*x1*x2 - 2*x2^2)*dx0 + (-2*x0^2*x2 + 2*x0*x1*x2)*dx1 + (-x0*x1^2 + x0*x2)*dx2";

#[test]
fn certify_exits_zero_only_when_every_degree_is_absent() {
    let (stdout, _, code) = wpfol(&[
        "certify", "--weights", "1,1,2", "--form", DELTA_K2, "--point", "1:1:1",
        "--max-degree", "1",
    ]);
    assert_eq!(code, 0);
    let r = report(&stdout);
    assert_eq!(r["results"]["all_absent"], serde_json::json!(true));
    assert_eq!(r["results"]["outcomes"][0]["status"], "absent");

    // degree 2 is out of reach for the current engines: inconclusive, exit 2
    let (stdout, _, code) = wpfol(&[
        "certify", "--weights", "1,1,2", "--form", DELTA_K2, "--point", "1:1:1",
        "--max-degree", "2",
    ]);
    assert_eq!(code, 2);
    let r = report(&stdout);
    assert_eq!(r["results"]["all_absent"], serde_json::json!(false));
    assert_eq!(r["results"]["outcomes"][1]["status"], "inconclusive");

    // a point on an invariant fiber: found, exit 2
    let (stdout, _, code) = wpfol(&[
        "certify", "--weights", "1,1,2", "--form", "x1*dx0 - x0*dx1", "--point", "0:1:0",
        "--max-degree", "1",
    ]);
    assert_eq!(code, 2);
    let r = report(&stdout);
    assert_eq!(r["results"]["outcomes"][0]["status"], "found");
    assert_eq!(r["results"]["outcomes"][0]["curve"], "x0");
}

#[test]
fn certify_writes_the_outcome_file() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("cert.json");
    let (_, _, code) = wpfol(&[
        "certify", "--weights", "1,1,2", "--form", DELTA_K2, "--point", "1:1:1",
        "--max-degree", "1", "--out", out_path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(&out_path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["all_absent"], serde_json::json!(true));
    assert!(v["outcomes"][0]["certificate"]["foliation_hash"].is_string());
}

#[test]
fn errors_carry_machine_readable_codes() {
    // syntax error with byte position
    let (stdout, _, code) = wpfol(&[
        "check", "--weights", "1,1,2", "--form", "x1*dx0 - ", "--curve", "x0",
    ]);
    assert_eq!(code, 1);
    let r = report(&stdout);
    assert_eq!(r["error"]["code"], "parse");
    assert!(r["error"]["message"].as_str().unwrap().contains("at byte 9"));
    assert!(r["results"].is_null());

    // semantic error: the residual of the radial contraction is printed
    let (stdout, _, code) = wpfol(&["sing", "--weights", "1,1,2", "--form", "dx0"]);
    assert_eq!(code, 1);
    let r = report(&stdout);
    assert_eq!(r["error"]["code"], "radial_contraction_nonzero");
    assert!(r["error"]["message"].as_str().unwrap().contains("x0"));

    // unsorted weights
    let (stdout, _, code) = wpfol(&["bounds", "--weights", "3,2,1"]);
    assert_eq!(code, 1);
    assert_eq!(report(&stdout)["error"]["code"], "usage");

    // missing family parameter
    let (stdout, _, code) = wpfol(&["example", "--family", "delta"]);
    assert_eq!(code, 1);
    let r = report(&stdout);
    assert_eq!(r["error"]["code"], "usage");
    assert!(r["error"]["message"].as_str().unwrap().contains("--k"));

    // unknown family lists the valid tags
    let (stdout, _, code) = wpfol(&["example", "--family", "sporadic"]);
    assert_eq!(code, 1);
    let r = report(&stdout);
    assert!(r["error"]["message"].as_str().unwrap().contains("omega-p2"));

    // family side condition violations surface the core error code
    let (stdout, _, code) = wpfol(&["example", "--family", "delta", "--k", "1"]);
    assert_eq!(code, 1);
    assert_eq!(report(&stdout)["error"]["code"], "parameter");

    // missing @file
    let (stdout, _, code) = wpfol(&[
        "sing", "--weights", "1,1,2", "--form", "@/no/such/file.frm",
    ]);
    assert_eq!(code, 1);
    assert_eq!(report(&stdout)["error"]["code"], "io");

    // riccati needs weights (1,1,k)
    let (stdout, _, code) = wpfol(&[
        "riccati", "--weights", "1,2,3", "--form", "2*x1*dx0 - x0*dx1",
    ]);
    assert_eq!(code, 1);
    assert_eq!(report(&stdout)["error"]["code"], "unsupported");
}

#[test]
fn clap_usage_errors_exit_one_and_help_exits_zero() {
    let (_, stderr, code) = wpfol(&["basis", "--weights", "1,1,2", "--nope"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("--nope") || stderr.contains("unexpected"));

    let (stdout, _, code) = wpfol(&["--help"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("basis"));
    assert!(stdout.contains("certify"));

    let (stdout, _, code) = wpfol(&["--version"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("wpfol"));
}

#[test]
fn at_file_indirection_matches_inline_input() {
    let mut tmp = tempfile::NamedTempFile::new().unwrap();
    writeln!(tmp, "  {DELTA_K2}  ").unwrap();
    let at_arg = format!("@{}", tmp.path().display());

    let (inline, _, code_inline) =
        wpfol(&["sing", "--weights", "1,1,2", "--form", DELTA_K2]);
    let (via_file, _, code_file) = wpfol(&["sing", "--weights", "1,1,2", "--form", &at_arg]);
    assert_eq!(code_inline, 0);
    assert_eq!(code_file, 0);
    assert_eq!(inline, via_file, "file indirection must not change the report");
}

#[test]
fn every_report_declares_exact_arithmetic() {
    for args in [
        vec!["bounds", "--weights", "2,3,5"],
        vec!["frobenius", "--a", "4", "--b", "7"],
        vec!["example", "--family", "omega-p2"],
        vec!["sing", "--weights", "1,1,2", "--form", "bad ^"],
    ] {
        let (stdout, _, _) = wpfol(&args);
        let r = report(&stdout);
        assert_eq!(r["exact"], serde_json::json!(true));
        assert!(r["tool_version"].is_string());
        assert!(r["command"].is_string());
    }
}
