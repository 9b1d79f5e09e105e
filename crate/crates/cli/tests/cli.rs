use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_chromzero"))
        .args(args)
        .env_remove("CHROMZERO_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Runs with `--format json`, asserts exit 0 and schema validity.
fn json_ok(schema: &str, args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = run(&full);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_valid(schema, &v);
    v
}

fn assert_valid(schema: &str, v: &Value) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("schema").join(schema);
    let schema: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{errors:?}\n{v:#}");
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("chromzero-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn close(x: &Value, expected: f64, tol: f64) -> bool {
    (x.as_f64().unwrap() - expected).abs() <= tol
}

#[test]
fn bounds_for_a_degree() {
    let v = json_ok("bounds.schema.json", &["bounds", "--delta", "3"]);
    assert!(close(&v["sokal"], 21.14, 0.01));
    assert!(close(&v["cstar_delta"], 17.57, 0.01));
    assert_eq!(v["delta"], "3");
}

#[test]
fn bounds_for_k4() {
    let v = json_ok("bounds.schema.json", &["bounds", "--family", "complete", "--n", "4"]);
    assert!(close(&v["c_star_graph"], 15.746, 1e-3));
    assert!(close(&v["c_star_graph_series"], 15.746, 1e-3));
    assert!(close(&v["max_root_modulus"], 3.0, 1e-9));
    assert_eq!(v["zero_free_verified"], true);
}

#[test]
fn bounds_needs_a_source() {
    let o = run(&["bounds"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--delta"));
    assert!(stdout(&o).is_empty());
}

#[test]
fn conflicting_sources_are_usage_errors() {
    assert_eq!(run(&["bounds", "--family", "cycle", "--n", "5", "--delta", "3"]).status.code(), Some(2));
    assert_eq!(run(&["bounds", "--family", "cycle"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--delta", "3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--family", "petersen", "--a", "0.5"]).status.code(), Some(2));
}

#[test]
fn table1_csv_layout() {
    let o = run(&["table1"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows[0], ["delta", "sokal", "cstar_delta", "cstar_complete", "exact"]);
    assert_eq!(rows.len(), 6);
    let printed = [
        ("2", [13.23, 10.72, 9.90]),
        ("3", [21.14, 17.57, 15.75]),
        ("4", [29.08, 24.44, 21.58]),
        ("6", [44.98, 38.24, 33.24]),
        ("any", [7.96, 6.91, 5.83]),
    ];
    for (row, (delta, cells)) in rows[1..].iter().zip(printed) {
        assert_eq!(row[0], delta);
        for (got, want) in row[1..4].iter().zip(cells) {
            let got: f64 = got.parse().unwrap();
            assert!((got - want).abs() <= 0.01 + 1e-9, "Δ={delta}: {got} vs {want}");
        }
        assert_eq!(row[4], if delta == "any" { "1" } else { delta });
    }
}

#[test]
fn table1_json_and_env_format() {
    let v = json_ok("table1.schema.json", &["table1"]);
    assert_eq!(v["rows"][4]["multiple_of_delta"], true);
    let o = Command::new(env!("CARGO_BIN_EXE_chromzero"))
        .arg("table1")
        .env("CHROMZERO_FORMAT", "text")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("7.96Δ"));
}

#[test]
fn verify_petersen_passes() {
    let v = json_ok("verify.schema.json", &["verify", "--family", "petersen"]);
    assert_eq!(v["passed"], true);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["penrose-identity", "tree-chain", "partition-identity", "activity-bound", "zero-free"]);
}

#[test]
fn verify_k4_reports_signed_sum() {
    let v = json_ok("verify.schema.json", &["verify", "--family", "complete", "--n", "4"]);
    assert_eq!(v["penrose"][0]["s_value"], "-6");
    assert_eq!(v["penrose"][0]["penrose_count"], "6");
}

#[test]
fn verify_convergence_check() {
    // a = −ln(2 − Z(x*)) at the triangle's optimal x*
    let a = -(3.0 - 6f64.sqrt()).ln();
    let v = json_ok("verify.schema.json", &["verify", "--family", "complete", "--n", "3", "--q", "11", "--a", &a.to_string(), "--order", "64"]);
    assert_eq!(v["fp_condition"]["status"], "satisfied");

    let o = run(&["verify", "--family", "complete", "--n", "3", "--q", "1", "--a", "0.5"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("fp-condition"));
}

#[test]
fn verify_disconnected_graph_by_component() {
    let path = temp_file("two-triangles.txt", "6 6\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
    let v = json_ok("verify.schema.json", &["verify", "--graph", path.to_str().unwrap()]);
    assert_eq!(v["penrose"].as_array().unwrap().len(), 2);
    assert_eq!(v["passed"], true);
}

#[test]
fn unreadable_graph_file() {
    let o = run(&["verify", "--graph", "/definitely/not/here.txt"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("/definitely/not/here.txt"));
}

#[test]
fn malformed_graph_file_names_the_line() {
    let path = temp_file("bad.txt", "3 2\n0 1\n1 7\n");
    let o = run(&["bounds", "--graph", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn dimacs_input() {
    let path = temp_file("c5.col", "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
    let v = json_ok("bounds.schema.json", &["bounds", "--graph", path.to_str().unwrap()]);
    assert!(close(&v["c_star_graph"], v["c_star_delta"].as_f64().unwrap(), 1e-8));
    assert!(close(&v["c_star_graph_series"], 10.71, 0.01));
}

#[test]
fn vertex_cap_is_enforced() {
    let o = run(&["bounds", "--family", "complete", "--n", "8", "--max-vertices", "6"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("cap of 6"));
}

#[test]
fn series_coefficients() {
    let coeffs = |args: &[&str]| -> Vec<String> {
        let v = json_ok("series.schema.json", args);
        v["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap().to_owned()).collect()
    };
    assert_eq!(coeffs(&["series", "--delta", "3", "--order", "5"]), ["1", "3", "9", "28", "90"]);
    assert_eq!(coeffs(&["series", "--delta", "2", "--order", "4"]), ["1", "2", "3", "4"]);
    assert_eq!(coeffs(&["series", "--family", "complete", "--n", "4", "--order", "5"]), ["1", "3", "6", "12", "24"]);
}

#[test]
fn series_threshold() {
    let v = json_ok("series.schema.json", &["series", "--delta", "2", "--b", "2"]);
    // Z = (1+u)², Z̃ = 1+u: x* = (√2−1)/√2
    assert!(close(&v["threshold"]["x_star"], 1.0 - 0.5f64.sqrt(), 1e-10));
    assert!(close(&v["radius"]["r"], 1.0, 1e-12));
}

#[test]
fn series_csv() {
    let o = run(&["series", "--delta", "3", "--order", "3", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,coefficient\n1,1\n2,3\n3,9\n");
}

#[test]
fn random_regular_is_reproducible() {
    let args = ["bounds", "--family", "random-regular", "--n", "10", "--delta", "3", "--seed", "42", "--format", "json"];
    let a = stdout(&run(&args));
    assert_eq!(a, stdout(&run(&args)));
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["delta"], "3");
    assert_eq!(v["edges"], "15");
}
