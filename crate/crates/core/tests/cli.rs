use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spechtcoh"))
        .args(args)
        .env_remove("SPECHTCOH_CACHE_DIR")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn h0_examples() {
    for (p, lambda, want) in [("3", "8,3", "H0: nonzero"), ("3", "3,3", "H0: zero"), ("5", "7", "H0: nonzero")] {
        let o = run(&["h0", "--p", p, "--lambda", lambda]);
        assert_eq!(o.status.code(), Some(0));
        assert!(stdout(&o).contains(want), "{lambda}: {}", stdout(&o));
    }
}

#[test]
fn h1_examples_and_exit_codes() {
    let o = run(&["h1", "--p", "3", "--lambda", "8,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H1: nonzero"));

    let o = run(&["h1", "--p", "3", "--lambda", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H1: zero"));

    let o = run(&["h1", "--p", "2", "--lambda", "3,3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("odd characteristic"));

    let o = run(&["h1", "--p", "3", "--lambda", "9,9"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("48620"), "{}", stderr(&o));

    let o = run(&["h1", "--p", "4", "--lambda", "3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["h1", "--p", "3", "--lambda", "2,3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["h1", "--p", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn certificate_round_trip_and_tampering() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let path_s = path.to_str().unwrap();
    let o = run(&["h1", "--p", "3", "--lambda", "3,3", "--certificate-out", path_s]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("H1: nonzero"));

    let o = run(&["verify", "--certificate", path_s]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("verdict: PASS"));
    assert!(stdout(&o).contains("dim U = 6"));

    let o = run(&["verify", "--certificate", path_s, "--lambda", "4,2"]);
    assert_eq!(o.status.code(), Some(2));

    let mut record: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let first = record["u"][0][1].as_u64().unwrap();
    record["u"][0][1] = serde_json::json!((first + 1) % 3);
    let tampered = dir.path().join("t.json");
    std::fs::write(&tampered, record.to_string()).unwrap();
    let o = run(&["verify", "--certificate", tampered.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("verdict: FAIL"));
    assert!(text.contains("first violation: ψ_(1,"), "{text}");
}

#[test]
fn family_verification() {
    let o = run(&["verify", "--family", "eq-4.1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("(eq-4.1)"));
    let o = run(&["verify", "--family", "papa", "--p", "5", "--a", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", "--family", "thm-5.11", "--p", "3", "--a", "1", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not needed"));
    let o = run(&["verify", "--family", "papa", "--p", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify", "--family", "papa", "--p", "2", "--a", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["verify"]);
    assert_eq!(o.status.code(), Some(2));
}

fn scan_json(args: &[&str]) -> serde_json::Value {
    let o = run(args);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn record<'a>(scan: &'a serde_json::Value, lambda: &[usize]) -> &'a serde_json::Value {
    scan["records"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["lambda"] == serde_json::json!(lambda))
        .unwrap()
}

#[test]
fn scan_contents() {
    let six = scan_json(&["scan", "--d", "6", "--p", "3", "--format", "json"]);
    assert_eq!(six["records"].as_array().unwrap().len(), 11);
    assert_eq!(record(&six, &[3, 3])["h1"], true);
    assert_eq!(six["records"][0]["lambda"], serde_json::json!([6]));

    let two = scan_json(&["scan", "--d", "2", "--p", "3", "--format", "json", "--no-meta"]);
    let records = two["records"].as_array().unwrap();
    assert_eq!(records.len(), 2);
    assert!(records.iter().all(|r| r["status"] == "decided"));
    assert_eq!(record(&two, &[2])["h1"], false);
    assert!(two.get("meta").is_none());
    assert!(records.iter().all(|r| r.get("seconds").is_none()));
}

#[test]
fn scan_cache_is_incremental() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let cold = scan_json(&["scan", "--d", "5", "--p", "3", "--cache", cache, "--format", "json"]);
    assert_eq!(cold["meta"]["computed"], 7);
    assert_eq!(cold["meta"]["cached"], 0);
    assert!(Path::new(cache).join("3/5/3-2.json").is_file());
    assert_eq!(record(&cold, &[2, 2, 1])["h1"], true);
    let cached: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(Path::new(cache).join("3/5/2-2-1.json")).unwrap()).unwrap();
    assert_eq!(cached["certificate"]["lambda"], serde_json::json!([2, 2, 1]));
    assert_eq!(cached["certificate"]["provenance"], "searched");
    let warm = scan_json(&["scan", "--d", "5", "--p", "3", "--cache", cache, "--format", "json"]);
    assert_eq!(warm["meta"]["computed"], 0);
    assert_eq!(warm["meta"]["cached"], 7);
    assert_eq!(cold["records"].as_array().unwrap().len(), warm["records"].as_array().unwrap().len());
    for (a, b) in cold["records"].as_array().unwrap().iter().zip(warm["records"].as_array().unwrap()) {
        assert_eq!(a["h1"], b["h1"]);
        assert_eq!(a["certificate_sha256"], b["certificate_sha256"]);
    }

    // A different elimination cap is a different configuration.
    let other = scan_json(&["scan", "--d", "5", "--p", "3", "--cache", cache, "--format", "json", "--elimination-cap", "100"]);
    assert_eq!(other["meta"]["cached"], 0);
    assert_eq!(record(&other, &[1, 1, 1, 1, 1])["status"], "over-cap");

    // The environment variable supplies the default directory.
    let env_dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_spechtcoh"))
        .args(["scan", "--d", "3", "--p", "5"])
        .env("SPECHTCOH_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    assert!(env_dir.path().join("5/3/2-1.json").is_file());
}

#[test]
fn scan_csv_and_text() {
    let o = run(&["scan", "--d", "3", "--p", "3", "--format", "csv", "--no-meta"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("lambda,p,dim_M,dim_S,h0,h1,diagnostic_dim,seconds"));
    assert_eq!(lines.next(), Some("3,3,1,1,true,false,0,"));
    assert_eq!(lines.count(), 2);

    let o = run(&["scan", "--d", "3", "--p", "3"]);
    assert!(stdout(&o).contains("(2,1)"));
    assert_eq!(run(&["scan", "--d", "3", "--p", "2"]).status.code(), Some(2));
}

#[test]
fn selftest_passes() {
    let o = run(&["selftest", "--max-d", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("selftest: PASS"));
}
