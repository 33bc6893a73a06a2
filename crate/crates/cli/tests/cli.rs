use std::io::Write;
use std::process::{Command, Output};

use serde_json::{json, Value};
use tempfile::NamedTempFile;

fn spec(value: &Value) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    write!(f, "{value}").unwrap();
    f
}

fn run(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_codezeta"));
    cmd.args(args).env_remove("CODEZETA_MAX_ENUM");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().unwrap()
}

fn report(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

fn hamming() -> Value {
    json!({
        "moduli": [2],
        "length": 7,
        "generators": [
            [[1], [0], [0], [0], [1], [1], [0]],
            [[0], [1], [0], [0], [1], [0], [1]],
            [[0], [0], [1], [0], [0], [1], [1]],
            [[0], [0], [0], [1], [1], [1], [1]]
        ]
    })
}

fn analyze(value: &Value, extra: &[&str]) -> (Output, Value) {
    let f = spec(value);
    let mut args = vec!["analyze", f.path().to_str().unwrap()];
    args.extend_from_slice(extra);
    let out = run(&args, &[]);
    let r = if out.status.code() == Some(1) { Value::Null } else { report(&out) };
    (out, r)
}

#[test]
fn hamming_report() {
    let (out, r) = analyze(&hamming(), &["--mutate", "25", "--seed", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["zeta"]["p"], json!([[1, 5], [2, 5], [2, 5]]));
    assert_eq!(r["duursma"]["d"], json!([[1, 5]]));
    assert_eq!(r["weights"]["dual"], json!([1, 0, 0, 0, 7, 0, 0, 0]));
    assert_eq!(r["code"]["genus"], json!(1));
    let v = r["verdicts"].as_object().unwrap();
    for key in ["macwilliams", "functional_eq_p", "functional_eq_d", "prrc_holds", "averaging"] {
        assert_eq!(v[key], json!(true), "{key}");
    }
    assert_eq!(v["mutants"]["rejected"], json!(25));
}

#[test]
fn repetition_is_mds() {
    let (out, r) = analyze(&json!({"moduli": [3], "length": 3, "generators": [[1, 1, 1]]}), &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["code"]["genus"], json!(0));
    assert_eq!(r["duursma"]["d"], json!([]));
    assert_eq!(r["verdicts"]["prrc"]["holds"], json!(true));
}

#[test]
fn small_dual_distance_gets_a_diagnostic() {
    // the full space has the zero code as dual
    let (out, r) = analyze(&json!({"moduli": [2], "length": 2, "generators": [[1, 0], [0, 1]]}), &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["zeta"]["diagnostic"], json!("MinimumDistanceTooSmall"));
    assert!(r["duursma"]["skipped"].is_string());
    assert_eq!(r["verdicts"]["macwilliams"], json!(true));
}

#[test]
fn non_integer_genus_is_partial() {
    let klein = json!({
        "moduli": [2, 2],
        "length": 3,
        "generators": [[[1, 0], [1, 0], [1, 0]], [[0, 1], [0, 1], [0, 0]], [[0, 0], [0, 1], [0, 1]]]
    });
    let (out, r) = analyze(&klein, &[]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["code"]["size"], json!(8));
    assert_eq!(r["code"]["genus"], Value::Null);
    assert!(r["zeta"]["p"].is_array());
    assert!(r["tvn"]["skipped"].is_string());
    assert!(r["verdicts"]["prrc"]["skipped"].is_string());
    assert_eq!(r["verdicts"]["functional_eq_p"], json!(true));
}

#[test]
fn reports_are_deterministic() {
    let (a, _) = analyze(&hamming(), &["--mutate", "10", "--seed", "9"]);
    let (b, _) = analyze(&hamming(), &["--mutate", "10", "--seed", "9"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn series_order_flag() {
    let (out, r) = analyze(&hamming(), &["--series-order", "12"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["zeta"]["series"]["code"].as_array().unwrap().len(), 13);
    assert_eq!(r["verdicts"]["prrc"]["checked_to"], json!(12));
    let (out, _) = analyze(&hamming(), &["--series-order", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn input_errors_exit_one() {
    let f = spec(&hamming());
    let path = f.path().to_str().unwrap();
    let out = run(&["analyze", path], &[("CODEZETA_MAX_ENUM", "10")]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exceeds the bound"));
    let out = run(&["analyze", path, "--max-enum", "10"], &[]);
    assert_eq!(out.status.code(), Some(1));

    let (out, _) = analyze(&json!({"moduli": [2], "length": 3}), &[]);
    assert_eq!(out.status.code(), Some(1));
    let (out, _) = analyze(&json!({"moduli": [1], "length": 1, "generators": []}), &[]);
    assert_eq!(out.status.code(), Some(1));
    let (out, _) = analyze(&json!({"moduli": [2], "length": 2, "generators": [[1, 2]]}), &[]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(run(&["analyze", "/nonexistent.json"], &[]).status.code(), Some(1));
    assert_eq!(run(&["frobnicate"], &[]).status.code(), Some(1));
}

#[test]
fn mds_tables() {
    let table = |n: &str, q: &str| report(&run(&["mds-table", "--n", n, "--q", q], &[]));
    assert_eq!(table("3", "2")["rows"][1], json!({"d": 2, "counts": [3, 0]}));
    assert_eq!(table("2", "3")["rows"][0], json!({"d": 1, "counts": [4, 4]}));
    assert_eq!(table("1", "5")["rows"], json!([{"d": 1, "counts": [4]}]));
    // M^{(4)}_{4,3} over F_2 is negative
    assert_eq!(table("4", "2")["rows"][2]["counts"], json!([4, -1]));
    assert_eq!(run(&["mds-table", "--n", "0", "--q", "2"], &[]).status.code(), Some(1));
    assert_eq!(run(&["mds-table", "--n", "3", "--q", "1"], &[]).status.code(), Some(1));
}

fn curve(value: &Value, order: &str) -> (Output, Value) {
    let f = spec(value);
    let out = run(&["curve", f.path().to_str().unwrap(), "--order", order], &[]);
    let r = if out.status.code() == Some(1) { Value::Null } else { report(&out) };
    (out, r)
}

#[test]
fn curve_reports() {
    let (out, r) = curve(&json!({"p": 2, "monomials": [[1, 0, 0, 1]], "genus": 0}), "20");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["p_x"], json!([[1, 1]]));
    assert_eq!(r["rrc"]["holds"], json!(true));
    assert_eq!(r["series"][20], json!([2097151, 1]));

    let cubic = json!({"p": 2, "monomials": [[0, 2, 1, 1], [0, 1, 2, 1], [3, 0, 0, -1]], "genus": 1});
    let (out, r) = curve(&cubic, "15");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(r["p_x"], json!([[1, 1], [0, 1], [2, 1]]));
    assert_eq!(r["class_number"], json!(3));
    assert_eq!(r["counts"], json!([3, 9, 9]));

    let (out, _) = curve(&json!({"p": 3, "monomials": [[1, 1, 1, 1]], "genus": 1}), "10");
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("Hasse"));
    let (out, _) = curve(&json!({"p": 3, "monomials": [[1, 0, 0, 1], [0, 2, 0, 1]], "genus": 0}), "10");
    assert_eq!(out.status.code(), Some(1));
}
