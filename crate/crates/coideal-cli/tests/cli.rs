use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coideal-lab")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut a = args.to_vec();
    a.push("--json");
    let o = run(&a);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn phi_leading_term_and_regularity_flags() {
    let v = json(&["phi", "--n", "2", "--S", "1", "--k", "1", "--m", "3"]);
    assert_eq!(v["pbw"][0]["monomial"], serde_json::json!([["u[1,3]", 1]]));
    assert_eq!(v["pbw"][0]["coeff"], "1");

    let o = run(&["phi", "--n", "3", "--S", "1,2,3", "--k", "1", "--m", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("black (1,5)-regular"));

    let v = json(&["phi", "--n", "2", "--S", "", "--k", "1", "--m", "1"]);
    assert_eq!(v["value"]["terms"], serde_json::json!([{"word": [1], "coeff": "1"}]));
}

#[test]
fn classify_example() {
    let v = json(&["classify", "--n", "3", "--theta", "5,1,0"]);
    assert_eq!(v["T"]["1"], serde_json::json!([1, 2, 3, 5, 6]));
    assert_eq!(v["R"]["1"], serde_json::json!([1, 3, 5]));
    assert_eq!(v["R"]["2"], serde_json::json!([2]));
    assert_eq!(v["normalized_generators"].as_array().unwrap().len(), 4);
}

#[test]
fn enumerate_and_lattice() {
    let v = json(&["enumerate", "--n", "2"]);
    assert_eq!(v["subalgebras"].as_array().unwrap().len(), 8);
    let o = run(&["enumerate", "--n", "2"]);
    assert_eq!(stdout(&o).lines().count(), 9);
    let v = json(&["lattice", "--n", "2"]);
    let edges: usize = v["nodes"].as_array().unwrap().iter().map(|x| x["covered_by"].as_array().unwrap().len()).sum();
    assert_eq!(edges, 8);
}

#[test]
fn verify_suites_pass() {
    let o = run(&["verify", "--n", "2", "--suite", "serre"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("serre"));
    assert!(stdout(&o).contains("pass"));
    let v = json(&["verify", "--n", "2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 6);
    let v = json(&["verify", "--n", "2", "--t", "7", "--suite", "cyclotomic"]);
    assert_eq!(v["suites"][0]["status"], "pass");
}

#[test]
fn coproduct_and_decompose() {
    let v = json(&["coproduct", "--n", "2"]);
    let rows = v["coproducts"].as_array().unwrap();
    assert_eq!(rows.len(), 10);
    assert!(rows.iter().all(|r| r["matches"] == true));
    let v = json(&["decompose", "--n", "2", "--letters", "1,2,2"]);
    assert_eq!(v["pbw"].as_array().unwrap().len(), 3);
}

#[test]
fn json_output_is_reproducible() {
    let args = ["classify", "--n", "3", "--theta", "5,1,0", "--json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["enumerate", "--n", "3", "--json"]);
    let b = Command::new(env!("CARGO_BIN_EXE_coideal-lab"))
        .args(["enumerate", "--n", "3", "--json"])
        .env("COIDEAL_LAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_input_exits_with_two() {
    for args in [
        &["phi", "--n", "2", "--k", "1", "--m", "9"][..],
        &["classify", "--n", "3", "--theta", "9,0,0"],
        &["classify", "--n", "2", "--theta", "1,0,0"],
        &["verify", "--t", "3"],
        &["phi", "--k", "1"],
        &["decompose", "--n", "2", "--letters", "7"],
        &["lattice", "--degree-bound", "0"],
    ] {
        assert_eq!(run(args).status.code(), Some(2), "{args:?}");
    }
    let o = Command::new(env!("CARGO_BIN_EXE_coideal-lab"))
        .arg("enumerate")
        .env("COIDEAL_LAB_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn custom_bicharacter_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"n": 2, "parameters": ["q", "a"], "matrix": [["q^2", "q^-2*a"], ["a^-1", "q"]]}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    let v = json(&["verify", "--bicharacter", path]);
    assert_eq!(v["passed"], true);
    let statuses: Vec<&str> = v["suites"].as_array().unwrap().iter().map(|s| s["status"].as_str().unwrap()).collect();
    assert_eq!(statuses, ["pass", "pass", "pass", "pass", "skipped", "skipped"]);
    assert_eq!(run(&["verify", "--bicharacter", path, "--suite", "classification"]).status.code(), Some(2));
    assert_eq!(run(&["phi", "--bicharacter", path, "--n", "3", "--k", "1", "--m", "1"]).status.code(), Some(2));

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    write!(bad, r#"{{"n": 2, "parameters": [], "matrix": [["q", "q^-2"], ["1", "q"]]}}"#).unwrap();
    assert_eq!(
        run(&["phi", "--bicharacter", bad.path().to_str().unwrap(), "--k", "1", "--m", "1"]).status.code(),
        Some(2)
    );
}
