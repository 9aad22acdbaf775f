use std::process::{Command, Output};

use hankel_core::closedform::d_sign;
use hankel_core::{LaurentPoly, RuleKind};

fn hankel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hankel")).args(args).output().expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    hankel(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    let out = hankel(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf8")
}

fn csv_values(args: &[&str]) -> Vec<String> {
    let text = stdout(args);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,m,rule,method,value"));
    lines.map(|l| l.rsplit(',').next().expect("value column").to_string()).collect()
}

fn json_values(args: &[&str]) -> Vec<String> {
    let text = stdout(args);
    let recs: Vec<serde_json::Value> = serde_json::from_str(&text).expect("json array");
    recs.iter().map(|r| r["value"].as_str().expect("string value").to_string()).collect()
}

#[test]
fn table_shifted_by_one_prefix() {
    let got = csv_values(&["table", "--seq", "D", "--rule", "unit", "--from", "0", "--to", "11"]);
    assert_eq!(got, ["1", "1", "1", "-1", "-1", "-1", "1", "-1", "-1", "-1", "-1", "1"]);
}

#[test]
fn table_generic_t_prefix() {
    let got = csv_values(&["table", "--seq", "T", "--rule", "generic", "--from", "0", "--to", "3"]);
    assert_eq!(got, ["x3/x1", "-x3/x1", "-x1*x7/x3^2", "x1*x7/x3^2"]);
}

#[test]
fn table_shift_three_prefix() {
    let got = csv_values(&["table", "--seq", "d", "--rule", "unit", "--m", "3", "--from", "0", "--to", "11"]);
    assert_eq!(got, ["1", "1", "0", "0", "-1", "1", "0", "0", "-1", "-1", "0", "0"]);
}

#[test]
fn table_records_carry_all_columns() {
    let text = stdout(&["table", "--seq", "d", "--m", "3", "--from", "4", "--to", "4", "--format", "json"]);
    let recs: Vec<serde_json::Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["n"], 4);
    assert_eq!(recs[0]["m"], 3);
    assert_eq!(recs[0]["rule"], "unit");
    assert!(recs[0]["method"].is_string());
    assert_eq!(recs[0]["value"], "-1");
}

const QUERIES: &[&[&str]] = &[
    &["--seq", "d", "--rule", "generic", "--to", "40"],
    &["--seq", "D", "--rule", "generic", "--to", "40"],
    &["--seq", "T", "--rule", "generic", "--to", "40"],
    &["--seq", "t", "--rule", "generic", "--to", "40"],
    &["--seq", "d", "--rule", "generic", "--m", "3", "--to", "24"],
    &["--seq", "d", "--rule", "powers", "--m", "2", "--to", "24"],
    &["--seq", "lambda", "--rule", "generic", "--to", "20"],
    &["--seq", "mu", "--rule", "generic", "--to", "20"],
    &["--seq", "T", "--rule", "unit", "--to", "40"],
    &["--seq", "d", "--rule", "grs", "--m", "1", "--to", "20"],
];

#[test]
fn csv_and_json_agree() {
    for q in QUERIES {
        let mut csv = vec!["table"];
        csv.extend_from_slice(q);
        let mut json = csv.clone();
        json.extend_from_slice(&["--format", "json"]);
        assert_eq!(csv_values(&csv), json_values(&json), "{q:?}");
    }
}

fn rule_kind(q: &[&str]) -> RuleKind {
    let at = q.iter().position(|a| *a == "--rule").expect("rule flag");
    match q[at + 1] {
        "unit" => RuleKind::Unit,
        "generic" => RuleKind::Generic,
        "powers" => RuleKind::Powers,
        "doubling" => RuleKind::Doubling,
        "grs" => RuleKind::Grs,
        other => panic!("{other}"),
    }
}

#[test]
fn values_round_trip_through_parser() {
    for q in QUERIES {
        let mut args = vec!["table"];
        args.extend_from_slice(q);
        for v in csv_values(&args) {
            let parsed: LaurentPoly = v.parse().unwrap_or_else(|e| panic!("{v}: {e}"));
            assert_eq!(rule_kind(q).render(&parsed), v, "{q:?}");
        }
    }
}

#[test]
fn table_rejects_bad_combinations() {
    assert_eq!(code(&["table", "--seq", "d", "--rule", "grs", "--to", "5"]), 2);
    assert_eq!(code(&["table", "--seq", "S", "--rule", "generic", "--to", "5"]), 2);
    assert_eq!(code(&["table", "--seq", "r", "--m", "2", "--to", "5"]), 2);
    assert_eq!(code(&["table", "--seq", "d", "--method", "nonsense", "--to", "5"]), 2);
    assert_eq!(code(&["table", "--seq", "d", "--from", "6", "--to", "5"]), 2);
    assert_eq!(code(&["table", "--seq", "q", "--to", "5"]), 2);
}

#[test]
fn table_methods_agree() {
    let base = csv_values(&["table", "--seq", "T", "--to", "200"]);
    for m in ["recurrence", "structural", "nonsquash"] {
        assert_eq!(csv_values(&["table", "--seq", "T", "--to", "200", "--method", m]), base, "{m}");
    }
    let base = csv_values(&["table", "--seq", "D", "--to", "200"]);
    for m in ["recurrence", "paperfolding-product"] {
        assert_eq!(csv_values(&["table", "--seq", "D", "--to", "200", "--method", m]), base, "{m}");
    }
}

#[test]
fn det_matches_closed_forms() {
    assert_eq!(stdout(&["det", "--n", "11", "--rule", "generic"]).trim(), "-x0*x3^2*x7^2*x15^6");
    assert_eq!(stdout(&["det", "--n", "11", "--rule", "generic", "--m", "1"]).trim(), "x3^3*x7*x15^7");
    assert_eq!(stdout(&["det", "--n", "40", "--m", "3"]).trim(), "1");
    let shown = stdout(&["det", "--n", "3", "--show"]);
    assert_eq!(shown.lines().last(), Some("-1"));
    assert_eq!(shown.lines().count(), 4);
    assert_eq!(code(&["det", "--n", "65", "--rule", "generic"]), 2);
    assert_eq!(code(&["det", "--n", "2049"]), 2);
    assert_eq!(code(&["det", "--n", "4", "--rule", "grs"]), 2);
}

#[test]
fn verify_examples() {
    assert_eq!(code(&["verify", "--suite", "oracle", "--max-n", "32"]), 0);
    assert_eq!(code(&["verify", "--suite", "cf", "--max-n", "64"]), 0);
    assert_eq!(code(&["verify", "--suite", "all", "--max-n", "0"]), 2);
    assert_eq!(code(&["verify", "--suite", "bogus", "--max-n", "8"]), 2);
}

#[test]
fn verify_gate() {
    let out = stdout(&["verify", "--suite", "all", "--max-n", "32", "--max-m", "8"]);
    for s in ["oracle", "methods", "reflect", "ldlt", "cf", "orthogonality", "parity"] {
        assert!(out.contains(&format!("suite={s} ")), "{s} missing");
    }
    assert!(!out.contains("FAIL"));
    assert!(out.trim_end().ends_with("verify: pass"));
}

#[test]
fn verify_is_reproducible_under_seed() {
    let a = stdout(&["verify", "--suite", "methods", "--max-n", "16", "--prop-seed", "11"]);
    let b = stdout(&["verify", "--suite", "methods", "--max-n", "16", "--prop-seed", "11"]);
    assert_eq!(a, b);
}

#[test]
fn conjecture_scan_reports_and_exits_zero() {
    let out = stdout(&["verify", "--suite", "conjecture", "--m", "5", "--max-n", "48"]);
    assert!(out.starts_with("conjecture-scan m=5 "));
    assert!(out.contains("verdict=conforms"));
    let out = stdout(&["verify", "--suite", "conjecture", "--m", "2", "--max-n", "16"]);
    assert!(out.contains("verdict=not-applicable"));
}

fn field<'a>(out: &'a str, key: &str) -> &'a str {
    out.split_whitespace()
        .find_map(|w| w.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("{key} missing in {out}"))
}

#[test]
fn bench_closed_million() {
    let out = stdout(&["bench", "--n", "1000000", "--engine", "closed", "--rule", "unit", "--m", "1"]);
    assert_eq!(field(&out, "engine"), "closed");
    assert_eq!(field(&out, "value"), "1");
    assert!(field(&out, "elapsed_ns").parse::<u64>().unwrap() < 1_000_000);
}

#[test]
fn bench_bareiss_matches_sign_law() {
    let out = stdout(&["bench", "--n", "512", "--engine", "bareiss", "--rule", "unit", "--m", "0"]);
    assert_eq!(field(&out, "value"), d_sign(512).to_i64().to_string());
}

#[test]
fn bench_guards() {
    assert_eq!(code(&["bench", "--n", "33", "--engine", "cofactor", "--rule", "generic", "--m", "0"]), 2);
    assert_eq!(code(&["bench", "--n", "2049", "--engine", "bareiss"]), 2);
    assert_eq!(code(&["bench", "--n", "2000000000", "--engine", "closed"]), 2);
    assert_eq!(code(&["bench", "--n", "32", "--engine", "cofactor", "--rule", "generic", "--m", "0"]), 0);
}
