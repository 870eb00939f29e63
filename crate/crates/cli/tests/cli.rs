use std::path::Path;
use std::process::{Command, Output};

fn sumrank(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sumrank")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn construct_msrd_and_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("m.sr");
    let o = sumrank(&["construct", "msrd", "--q", "2", "--sizes", "4,2", "--d", "3", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("K = 12"));

    let o = sumrank(&["verify", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verified d = 3"));
}

#[test]
fn construct_rs_pair_to_stdout() {
    let o = sumrank(&["construct", "thm25", "--q", "2", "--t", "4", "--k", "1"]);
    assert_eq!(code(&o), 0);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("K = 8") && err.contains("claimed d = 4"), "{err}");
    assert!(stdout(&o).contains("#! claimed 4"));
}

#[test]
fn verify_rs_pair_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.sr");
    let o = sumrank(&["construct", "rs-pair", "--q", "2", "--t", "4", "--k", "1", "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let o = sumrank(&["--json", "verify", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["verified_distance"], 4);
    assert_eq!(v["claimed_distance"], 4);
    assert_eq!(v["defect"], 2);
}

#[test]
fn dependent_component_rows_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.gm", "2 1 2 4 2\n1 1 1 1\n2 2 2 2\n");
    let b = write(dir.path(), "b.gm", "2 1 2 4 1\n1 1 1 1\n");
    let o = sumrank(&["construct", "construct2", "--q", "2", "--n", "2", "--codes", &format!("{a},{b}")]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stderr).contains("rank"));
}

#[test]
fn components_from_reed_solomon_files() {
    let dir = tempfile::tempdir().unwrap();
    let a = write(dir.path(), "a.gm", "2 1 2 4 2\n1 1 1 1\n0 1 2 3\n");
    let b = write(dir.path(), "b.gm", "2 1 2 4 1\n1 1 1 1\n");
    let out = dir.path().join("c.sr");
    let codes = format!("{a},{b}");
    let o = sumrank(&["construct", "components", "--q", "2", "--n", "2", "--codes", &codes, "-o", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("K = 6, claimed d = 4"));
    assert_eq!(code(&sumrank(&["verify", out.to_str().unwrap()])), 0);
}

#[test]
fn tampered_claim_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    // Repetition-like code in two 1 × 1 blocks: true distance 2, claimed 4.
    let f = write(dir.path(), "bad.sr", "#! claimed 4\n2 1 2\n1 1\n1 1\n1\n1 1\n");
    let o = sumrank(&["verify", &f]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).contains("verified d = 2"));
}

#[test]
fn budget_refusal() {
    let o = sumrank(&["construct", "msrd", "--q", "2", "--sizes", "4,2", "--d", "3"]);
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "m.sr", &stdout(&o));
    let o = sumrank(&["--budget", "100", "verify", &f]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn bounds_examples() {
    let o = sumrank(&["bounds", "singleton", "--q", "2", "--t", "7", "--n", "2", "--m", "2", "--d", "5"]);
    assert_eq!(stdout(&o).trim(), "20");
    let o = sumrank(&["bounds", "volume", "--q", "2", "--t", "2", "--n", "2", "--m", "2", "--r", "1"]);
    assert_eq!(stdout(&o).trim(), "19");
    let o = sumrank(&["bounds", "gamma", "--q", "3"]);
    assert!(stdout(&o).starts_with("1.785"));
    let o = sumrank(&["bounds", "singleton", "--q", "2", "--sizes", "4x4,2x2", "--d", "3"]);
    assert_eq!(stdout(&o).trim(), "12");
}

#[test]
fn as_printed_volume_differs() {
    let args = ["bounds", "volume", "--q", "2", "--t", "1", "--n", "2", "--m", "2", "--r", "1"];
    assert_eq!(stdout(&sumrank(&args)).trim(), "10");
    let mut printed = vec!["--as-printed"];
    printed.extend(args);
    assert_eq!(stdout(&sumrank(&printed)).trim(), "7");
}

#[test]
fn table_singleton_columns() {
    let o = sumrank(&["table", "--q", "2", "--t", "7", "--n", "2", "--to", "7"]);
    let text = stdout(&o);
    for s in ["2·13", "2·12", "2·11", "2·10", "2·9", "2·8"] {
        assert!(text.contains(s), "{s} missing");
    }
    assert!(text.contains("needs external component codes"));

    let o = sumrank(&["--json", "table", "--q", "2", "--t", "31", "--n", "2", "--from", "4", "--to", "4"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["singleton"], 118);

    let o = sumrank(&["--json", "table", "--q", "2", "--t", "17", "--n", "2", "--from", "17", "--to", "17"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["singleton"], 36);
}

#[test]
fn table_fills_from_formulas() {
    let o = sumrank(&["--json", "table", "--q", "2", "--t", "4", "--n", "2", "--fill", "rs-pair", "--from", "4", "--to", "4"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["dimension"], 8);
    assert_eq!(v["gap"], 2);

    let o = sumrank(&[
        "--json", "table", "--q", "2", "--t", "255", "--n", "2", "--fill", "bch", "--u", "4", "--from", "8", "--to", "8",
    ]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert!(v["dimension"].as_u64().unwrap() > 0);

    let o = sumrank(&["table", "--q", "2", "--t", "10", "--n", "2", "--fill", "bch", "--u", "4"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn convert_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let o = sumrank(&["construct", "thm25", "--q", "2", "--t", "4", "--k", "1"]);
    let original = stdout(&o);
    let f = write(dir.path(), "r.sr", &original);
    let o = sumrank(&["convert", &f]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), original);

    let o = sumrank(&["convert", &f, "--to", "json"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["kind"], "sum-rank");
    assert_eq!(v["dimension"], 8);

    let g = write(dir.path(), "a.gm", "#! distance 3 verified\n2 1 2 4 2\n1 1 1 1\n0 1 2 3\n");
    let o = sumrank(&["--json", "convert", &g]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["distance"]["verified"], 3);
    assert_eq!(code(&sumrank(&["convert", &write(dir.path(), "x", "1 2\n")])), 1);
}

#[test]
fn argument_errors_exit_one() {
    assert_eq!(code(&sumrank(&["construct", "msrd", "--q", "2"])), 1);
    assert_eq!(code(&sumrank(&["construct", "msrd", "--q", "2", "--sizes", "2,4", "--d", "2"])), 1);
    assert_eq!(code(&sumrank(&["--help"])), 0);
}
