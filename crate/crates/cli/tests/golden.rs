//! Byte-stable report checks: every case compares the full stdout of
//! the binary against a checked-in golden file. Run with WPFOL_BLESS=1
//! to regenerate the files after an intentional output change.

use std::path::Path;
use std::process::Command;

fn wpfol(args: &[&str]) -> (String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_wpfol"))
        .args(args)
        .output()
        .expect("binary must run");
    (
        String::from_utf8(out.stdout).expect("reports are UTF-8"),
        out.status.code().expect("no signal exits"),
    )
}

fn check(name: &str, args: &[&str], want_exit: i32) {
    let (stdout, code) = wpfol(args);
    assert_eq!(code, want_exit, "exit code for {name}");
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"));
    if std::env::var_os("WPFOL_BLESS").is_some() {
        std::fs::write(&path, &stdout).expect("write golden");
    }
    let want = std::fs::read_to_string(&path)
        .unwrap_or_else(|_| panic!("missing golden file for {name}; rerun with WPFOL_BLESS=1"));
    assert_eq!(stdout, want, "golden mismatch for {name}");
}

const DELTA_K2: &str =
    "(2*x0*x1*x2 - 2*x2^2)*dx0 + (-2*x0^2*x2 + 2*x0*x1*x2)*dx1 + (-x0*x1^2 + x0*x2)*dx2";

#[test]
fn golden_reports_are_byte_stable() {
    check("bounds_112", &["bounds", "--weights", "1,1,2"], 0);
    check("frobenius_3_5", &["frobenius", "--a", "3", "--b", "5"], 0);
    check(
        "frobenius_3_5_n7",
        &["frobenius", "--a", "3", "--b", "5", "--n", "7"],
        0,
    );
    check(
        "frobenius_3_5_n8",
        &["frobenius", "--a", "3", "--b", "5", "--n", "8"],
        0,
    );
    check("basis_111_d2", &["basis", "--weights", "1,1,1", "--degree", "2"], 0);
    check("basis_112_d2", &["basis", "--weights", "1,1,2", "--degree", "2"], 0);
    check("example_delta_k2", &["example", "--family", "delta", "--k", "2"], 0);
    check(
        "example_log1_123",
        &[
            "example", "--family", "log-1", "--weights", "1,2,3", "--a", "1", "--b", "-2",
            "--c", "1",
        ],
        0,
    );
    check(
        "example_eta_112",
        &[
            "example", "--family", "eta", "--weights", "1,1,2", "--j0", "2", "--j1", "2",
            "--a", "i",
        ],
        0,
    );
    check("hirzebruch_3_1_k2", &["hirzebruch", "--k", "2", "--a", "3", "--b", "1"], 0);
    check("hirzebruch_8_2_k2", &["hirzebruch", "--k", "2", "--a", "8", "--b", "2"], 0);
    check("hirzebruch_9_3_k2", &["hirzebruch", "--k", "2", "--a", "9", "--b", "3"], 0);
    check("reduce_223", &["reduce", "--weights", "2,2,3"], 0);
    check(
        "check_fiber_112",
        &["check", "--weights", "1,1,2", "--form", "x1*dx0 - x0*dx1", "--curve", "x0"],
        0,
    );
    check(
        "sing_fibration_112",
        &["sing", "--weights", "1,1,2", "--form", "x1*dx0 - x0*dx1"],
        0,
    );
    check(
        "milnor_fibration_112",
        &["milnor", "--weights", "1,1,2", "--form", "x1*dx0 - x0*dx1"],
        0,
    );
    check(
        "multiplicity_fibration_112_v2",
        &[
            "multiplicity", "--weights", "1,1,2", "--form", "x1*dx0 - x0*dx1", "--vertex",
            "2",
        ],
        0,
    );
    check("riccati_delta_k2", &["riccati", "--weights", "1,1,2", "--form", DELTA_K2], 0);
    check(
        "certify_delta_k2",
        &[
            "certify", "--weights", "1,1,2", "--form", DELTA_K2, "--point", "1:1:1",
            "--max-degree", "1",
        ],
        0,
    );
    check(
        "error_radial_residual",
        &["sing", "--weights", "1,1,2", "--form", "dx0"],
        1,
    );
}
