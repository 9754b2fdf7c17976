use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn sl3ido(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sl3ido")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("UTF-8 output")
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).expect("UTF-8 output")
}

fn schema(name: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schemas").join(name);
    let raw = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    jsonschema::validator_for(&serde_json::from_str(&raw).unwrap()).expect("schema compiles")
}

fn assert_valid(validator: &jsonschema::Validator, doc: &Value) {
    let errors: Vec<String> = validator.iter_errors(doc).map(|e| format!("{e} at {}", e.instance_path())).collect();
    assert!(errors.is_empty(), "schema violations: {errors:#?}");
}

fn json(args: &[&str]) -> Value {
    let o = sl3ido(args);
    assert!(o.status.success(), "{args:?} failed: {}", stderr(&o));
    serde_json::from_str(&stdout(&o)).expect("valid JSON")
}

fn tmp(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    dir.join(format!("{}-{name}", std::process::id()))
}

#[test]
fn classify_minus_rho_lists_five_operators() {
    let doc = json(&["classify", "--lambda", "-rho", "--format", "json"]);
    let labels: Vec<&str> = doc["operators"].as_array().unwrap().iter().map(|o| o["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["X", "Y", "X2Y", "Y2X", "XY2X"]);
    let chars: Vec<&str> =
        doc["operators"].as_array().unwrap().iter().map(|o| o["character"].as_str().unwrap()).collect();
    assert_eq!(chars, ["+-", "-+", "-+", "+-", "++"]);
    assert_valid(&schema("report.schema.json"), &doc);
}

#[test]
fn classify_minus_rho_half_has_one_operator() {
    let doc = json(&["classify", "--lambda=-rho/2", "--format", "json"]);
    let ops = doc["operators"].as_array().unwrap();
    assert_eq!(ops.len(), 1);
    assert_eq!(ops[0]["character"], "--");
    assert_eq!(ops[0]["uBar"], "2*X*Y + Z");
    assert_eq!(doc["metadata"]["lambdaPs"]["cAlpha"], "-1/2");
    assert_eq!(ops[0]["uFlatTerms"][0]["coeff"], serde_json::json!({"re": "0/1", "im": "1/2"}));
}

#[test]
fn generic_parameter_has_empty_classification() {
    let o = sl3ido(&["classify", "--lambda", "1/3,1/5"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("classification is empty"));
    let doc = json(&["classify", "--lambda", "1/3,1/5", "--format", "json"]);
    assert_eq!(doc["operators"], serde_json::json!([]));
}

#[test]
fn bad_weight_names_offending_token() {
    let o = sl3ido(&["classify", "--lambda", "1/3,1/x"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("1/x"), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let o = sl3ido(&["classify", "--lambda", "rho2"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("rho2"), "{}", stderr(&o));
}

#[test]
fn unknown_labels_list_the_valid_ones() {
    let o = sl3ido(&["ktypes", "--lambda=-rho", "--u", "XcY", "--sigma", "++", "--nmax", "4"]);
    assert!(!o.status.success());
    let err = stderr(&o);
    assert!(err.contains("`XcY`") && err.contains("X, Y, X2Y, Y2X, XY2X, X,Y"), "{err}");

    let o = sl3ido(&["ktypes", "--lambda=-rho", "--u", "X", "--sigma", "+0", "--nmax", "4"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("++, +-, -+, --, H"), "{}", stderr(&o));
}

#[test]
fn ktypes_x_plus_plus_rows() {
    let o = sl3ido(&["ktypes", "--lambda=-rho", "--u", "X", "--sigma", "++", "--nmax", "20"]);
    assert!(o.status.success());
    let md = stdout(&o);
    let rows: Vec<&str> =
        md.lines().filter(|l| l.starts_with("| ") && !l.starts_with("| n ") && !l.starts_with("| label")).collect();
    let ns: Vec<&str> = rows.iter().filter_map(|l| l.split('|').nth(1)).map(str::trim).collect();
    assert!(ns.ends_with(&["0", "4", "8", "12", "16", "20"]), "{md}");
    assert!(md.contains("verified for n ≤ 20"));
}

#[test]
fn ktypes_xcy_h_rows_validate() {
    let doc = json(&["ktypes", "--lambda=-rho/2", "--u", "XcY", "--sigma", "H", "--nmax", "21", "--format", "json"]);
    assert_valid(&schema("report.schema.json"), &doc);
    let ns: Vec<u64> =
        doc["ktypeTables"][0]["rows"].as_array().unwrap().iter().map(|r| r["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, [1, 5, 9, 13, 17, 21]);
    assert_eq!(
        doc["patterns"][0]["progressions"],
        serde_json::json!([{"residue": 1, "modulus": 4, "multiplicity": 1}])
    );
}

#[test]
fn common_system_against_minus_minus_is_empty() {
    let doc = json(&["ktypes", "--lambda=-rho", "--u", "X,Y", "--sigma", "--", "--nmax", "20", "--format", "json"]);
    assert_eq!(doc["ktypeTables"][0]["rows"], serde_json::json!([]));
    assert_valid(&schema("report.schema.json"), &doc);
}

#[test]
fn output_is_byte_identical_across_runs_and_sinks() {
    let args = ["ktypes", "--lambda=-rho/2", "--u", "XcY", "--sigma", "--", "--nmax", "18", "--format", "json"];
    let a = sl3ido(&args);
    let b = sl3ido(&args);
    assert_eq!(a.stdout, b.stdout);
    let path = tmp("ktypes.json");
    let path_s = path.to_str().unwrap();
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path_s]);
    let c = sl3ido(&with_out);
    assert!(c.status.success() && c.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    std::fs::remove_file(path).ok();
}

#[test]
fn unwritable_out_path_fails() {
    let o = sl3ido(&["classify", "--lambda=-rho", "--out", "/nonexistent-dir/x.md"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("cannot write"));
}

#[test]
fn selftest_passes_and_is_deterministic() {
    let a = sl3ido(&["selftest"]);
    assert!(a.status.success(), "{}", stdout(&a));
    assert!(stdout(&a).lines().last().unwrap().starts_with("selftest passed"));
    let b = sl3ido(&["selftest"]);
    assert_eq!(a.stdout, b.stdout);
    let doc = json(&["selftest", "--format", "json"]);
    assert_eq!(doc["passed"], true);
    assert_valid(&schema("selftest.schema.json"), &doc);
}

#[test]
fn missing_required_flag_is_a_usage_error() {
    let o = sl3ido(&["ktypes", "--lambda=-rho", "--sigma", "++"]);
    assert!(!o.status.success());
    assert!(stderr(&o).contains("--u"));
}
