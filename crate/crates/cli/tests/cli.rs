use std::io::Write;
use std::process::Command;

use serde_json::Value;
use symprod_cli::run_captured;

fn stdout_of(args: &[&str]) -> String {
    let (code, out, err) = run_captured(args);
    assert_eq!(code, 0, "args {args:?}, stderr {err}");
    out
}

#[test]
fn betti_of_sphere_powers() {
    assert_eq!(
        stdout_of(&["betti", "sphere:2", "--n", "3"]),
        "d=0: 1\nd=1: 0\nd=2: 1\nd=3: 0\nd=4: 1\nd=5: 0\nd=6: 1\n"
    );
    assert_eq!(
        stdout_of(&["betti", "surface:g=1", "--n", "2", "--dmax", "2"]),
        "d=0: 1\nd=1: 2\nd=2: 2\n"
    );
}

#[test]
fn punctured_signature() {
    assert_eq!(
        stdout_of(&["signature", "--g", "3", "--k", "2", "--order", "2"]),
        "-3\n"
    );
    assert_eq!(
        stdout_of(&["signature", "--g", "2", "--order", "2"]),
        "-1\n"
    );
}

#[test]
fn euler_of_torus_powers() {
    assert_eq!(
        stdout_of(&["euler", "surface:g=1", "--order", "5"]),
        "1 0 0 0 0 0\n"
    );
    assert_eq!(
        stdout_of(&["euler", "sphere:2", "--order", "4"]),
        "1 2 3 4 5\n"
    );
}

#[test]
fn chi_y_and_elliptic_polynomials() {
    assert_eq!(
        stdout_of(&["chi-y", "--g", "0", "--order", "2"]),
        "n=0: 1\nn=1: 1 - y\nn=2: 1 - y + y^2\n"
    );
    assert_eq!(
        stdout_of(&["elliptic", "--g", "0", "--order", "2"]),
        "n=0: 1\nn=1: 0\nn=2: e^(1/4)\n"
    );
    assert_eq!(
        stdout_of(&["elliptic", "--g", "1", "--order", "3"]),
        "n=0: 1\nn=1: 0\nn=2: 0\nn=3: 0\n"
    );
}

#[test]
fn orbifold_euler_counts_colored_partitions() {
    assert_eq!(
        stdout_of(&["orbifold-euler", "sphere:2", "--n", "4"]),
        "20\n"
    );
}

#[test]
fn dmvv_from_file() {
    let mut file = tempfile();
    writeln!(file.1, "# constant genus 2\n0 0 2").unwrap();
    let path = file.0.to_str().unwrap();
    assert_eq!(
        stdout_of(&[
            "dmvv", "--coeffs", path, "--torder", "3", "--qorder", "0", "--ymin", "0", "--ymax",
            "0"
        ]),
        "n=0: 1\nn=1: 2\nn=2: 5\nn=3: 10\n"
    );
    let (code, _, err) = run_captured(&["dmvv", "--coeffs", "/nonexistent/coeffs.txt"]);
    assert_eq!(code, 2, "{err}");
}

fn tempfile() -> (std::path::PathBuf, std::fs::File) {
    let path = std::env::temp_dir().join(format!("symprod-cli-test-{}.txt", std::process::id()));
    let file = std::fs::File::create(&path).unwrap();
    (path, file)
}

#[test]
fn json_shape() {
    let out = stdout_of(&["--json", "betti", "sphere:2", "--n", "1"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "betti");
    assert_eq!(v["inputs"]["space"], "sphere:2");
    assert_eq!(v["result"][2], serde_json::json!({"degree": 2, "value": 1}));

    let out = stdout_of(&["chi-y", "--g", "0", "--order", "1", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let n1 = &v["result"][1];
    assert_eq!(n1["n"], 1);
    assert_eq!(
        n1["value"][1],
        serde_json::json!({
            "var_exponents": {"q": 0, "t": 0, "y": 1, "u": 0},
            "numerator": "-1",
            "denominator": "1"
        })
    );
}

#[test]
fn usage_errors_exit_2_with_one_line() {
    for args in [
        &["betti", "torus", "--n", "2"][..],
        &["betti", "surface:k=1", "--n", "2"],
        &["signature", "--g", "1", "--k", "1", "--order", "3"],
        &["betti", "sphere:2"],
        &["frobnicate"],
        &["euler", "sphere:2", "--order", "x"],
    ] {
        let (code, out, err) = run_captured(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(out.is_empty(), "{args:?}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn help_succeeds() {
    let (code, out, _) = run_captured(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("orbifold-euler"));
}

#[test]
fn output_is_deterministic() {
    let bin = env!("CARGO_BIN_EXE_symprod");
    for args in [
        &["--json", "elliptic", "--g", "3", "--order", "6"][..],
        &["chi-y", "--g", "2", "--order", "6"],
        &["check"],
    ] {
        let a = Command::new(bin).args(args).output().unwrap();
        let b = Command::new(bin).args(args).output().unwrap();
        assert_eq!(a.status.code(), Some(0));
        let strip = |s: &[u8]| String::from_utf8_lossy(s).to_string();
        assert_eq!(strip(&a.stdout), strip(&b.stdout), "{args:?}");
    }
}
