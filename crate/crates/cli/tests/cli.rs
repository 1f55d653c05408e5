//! End-to-end tests against the built binary: wire schema, exit codes,
//! diagnostics, and byte-for-byte determinism.

use std::io::Write;
use std::process::{Command, Output};

fn alg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alg"))
        .args(args)
        .env_remove("ALG_MAX_CARD")
        .output()
        .expect("binary runs")
}

fn write_fixture(content: &str) -> tempfile::NamedTempFile {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    file.write_all(content.as_bytes()).unwrap();
    file.flush().unwrap();
    file
}

const REDUCED_EXAMPLE: &str = "\
# Z/4 as a module over Z/4, odd scalars
ring R = zmod 4
module M = zmod 4 over R
set S in R = {1, 3}
sub P of M = {0}
query classify P S
";

#[test]
fn classify_reduced_example_json() {
    let file = write_fixture(REDUCED_EXAMPLE);
    let output = alg(&["classify", file.path().to_str().unwrap(), "--json"]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let query = &json["queries"][0];
    assert_eq!(query["kind"], "classify");
    assert_eq!(query["applicable"], true);
    assert_eq!(query["prime"], false);
    assert_eq!(query["primary"], true);
    assert_eq!(query["s_prime"]["holds"], false);
    assert_eq!(query["s_prime"]["witness"], serde_json::Value::Null);
    assert_eq!(query["s_primary"]["holds"], true);
    assert_eq!(query["s_primary"]["witness"], 1);
    assert_eq!(query["variants"]["b"], true);
    assert_eq!(query["variants"]["c"], true);
    assert_eq!(query["variants"]["d"], true);
}

#[test]
fn classify_output_is_byte_deterministic() {
    let file = write_fixture(REDUCED_EXAMPLE);
    let a = alg(&["classify", file.path().to_str().unwrap(), "--json"]);
    let b = alg(&["classify", file.path().to_str().unwrap(), "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn suite_query_from_a_document() {
    let file = write_fixture("query suite thm1-equivalences maxring=6 maxmod=6\n");
    let output = alg(&["classify", file.path().to_str().unwrap(), "--json"]);
    assert!(output.status.success(), "suite queries with passing laws exit 0");
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let query = &json["queries"][0];
    assert_eq!(query["kind"], "suite");
    assert_eq!(query["failures"].as_array().unwrap().len(), 0);
    assert!(query["instances"].as_u64().unwrap() > 0);
}

#[test]
fn suite_serial_and_parallel_agree() {
    let base = [
        "suite",
        "--property",
        "thm17-product",
        "--max-ring",
        "3",
        "--json",
    ];
    let parallel = alg(&base);
    let mut serial_args = base.to_vec();
    serial_args.push("--serial");
    let serial = alg(&serial_args);
    assert!(parallel.status.success() && serial.status.success());
    assert_eq!(parallel.stdout, serial.stdout);
}

#[test]
fn search_finds_and_reports_json() {
    let output = alg(&["search", "--target", "s-primary-not-primary", "--json"]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let query = &json["queries"][0];
    assert_eq!(query["kind"], "search");
    assert_eq!(query["exhausted"], false);
    let found = &query["found"]["submodule"];
    assert_eq!(found["module"]["regular"]["ring"]["zmod"]["n"], 6);
    assert_eq!(found["p"][0], 0);
}

#[test]
fn converse_search_from_document_reports_honestly() {
    let file = write_fixture("query search converse-4c-failure maxring=6\n");
    let output = alg(&["classify", file.path().to_str().unwrap(), "--json"]);
    assert!(output.status.success());
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let query = &json["queries"][0];
    let found = !query["found"].is_null();
    let exhausted = query["exhausted"].as_bool().unwrap();
    assert!(found || exhausted);
}

#[test]
fn check_only_parses() {
    let file = write_fixture(REDUCED_EXAMPLE);
    let output = alg(&["check", file.path().to_str().unwrap()]);
    assert!(output.status.success());
    assert_eq!(String::from_utf8_lossy(&output.stdout).trim(), "ok");
}

#[test]
fn malformed_file_exits_2_with_location() {
    let file = write_fixture("ring R = zmod\n");
    let output = alg(&["classify", file.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("line 1"), "diagnostic carries the line: {stderr}");
}

#[test]
fn invalid_set_is_a_construction_error() {
    let file = write_fixture("ring R = zmod 6\nset S in R = {0, 1}\n");
    let output = alg(&["classify", file.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("0 belongs"), "{stderr}");

    let file = write_fixture("ring R = zmod 6\nset S in R = {1, 2}\n");
    let output = alg(&["classify", file.path().to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("2*2 = 4"), "non-closed pair is named: {stderr}");
}

#[test]
fn env_cap_applies() {
    let file = write_fixture(REDUCED_EXAMPLE);
    let output = Command::new(env!("CARGO_BIN_EXE_alg"))
        .args(["classify", file.path().to_str().unwrap()])
        .env("ALG_MAX_CARD", "3")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&output.stderr).contains("cap"));
}

#[test]
fn idealization_document_end_to_end() {
    let file = write_fixture(
        "\
ring R = zmod 2
module M = zmod 2 over R
ring E = idealization(R, M)
module N = regular E
sub Z of N = gen {(1,1)}
set T in E = {(1,0), (1,1)}
query s_prime Z T
",
    );
    let output = alg(&["classify", file.path().to_str().unwrap(), "--json"]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let query = &json["queries"][0];
    assert_eq!(query["kind"], "s_prime");
    // (1,1) is a unit, so it generates everything: P = N, not applicable
    assert_eq!(query["applicable"], false);
}

#[test]
fn product_and_quotient_document() {
    let file = write_fixture(
        "\
ring A = zmod 4
module MA = regular A
sub I of MA = {0, 2}
ring Q = quotient(A, I)
ring B = zmod 2
ring P = product(Q, B)
module M = regular P
sub Z of M = gen {}
set S in P = {(1,1)}
query s_primary Z S
",
    );
    let output = alg(&["classify", file.path().to_str().unwrap(), "--json"]);
    assert!(
        output.status.success(),
        "{}",
        String::from_utf8_lossy(&output.stderr)
    );
    let json: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let query = &json["queries"][0];
    // (0) in Z/2 x Z/2 is not primary: (1,0)(0,1) = (0,0)
    assert_eq!(query["holds"], false);
}
