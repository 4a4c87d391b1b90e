//! End-to-end runs of the `lrc4` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

fn lrc4(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_lrc4"));
    cmd.args(args).env_remove("LRC4_MAX_SCAN");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lrc4-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

fn build_to_file(name: &str, args: &[&str]) -> String {
    let path = scratch(name);
    let p = path.to_str().unwrap().to_string();
    let mut full = vec!["build"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", &p]);
    let o = lrc4(&full, &[]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    p
}

#[test]
fn build_then_verify_json() {
    let o = lrc4(&["build", "--family", "C1", "--l", "2", "--variant", "b"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("4 9\n") && text.ends_with('\n'), "{text}");
    assert_eq!(text.lines().count(), 5);

    let p = build_to_file("c1b.txt", &["--family", "C1", "--l", "2", "--variant", "b"]);
    assert_eq!(std::fs::read_to_string(&p).unwrap(), text);
    let o = lrc4(&["verify", "--parity", &p, "--r", "3", "--delta", "3", "--json"], &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let json = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["params"], serde_json::json!({"n": 9, "k": 5, "d": 3}));
    assert_eq!(v["d_optimal"], true);
    assert_eq!(v["r_optimal"], true);
    assert_eq!(v["family"], "C1");
    assert_eq!(v["status"], "constructed");
    for g in v["locality"]["groups"].as_array().unwrap() {
        let s: Vec<u64> = g["support"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
        assert!(s.windows(2).all(|w| w[0] < w[1]) && s[0] >= 1 && *s.last().unwrap() <= 9);
    }
    // top-level keys in the documented order
    let keys = ["\"params\"", "\"locality\"", "\"bound_d\"", "\"d_optimal\"", "\"r_optimal\"", "\"checks\"", "\"family\"", "\"status\""];
    let pos: Vec<usize> = keys.iter().map(|k| json.find(k).unwrap()).collect();
    assert!(pos.windows(2).all(|w| w[0] < w[1]), "{json}");
    let checks = ["h_prime_mds", "rows_per_group", "punctured_mds", "disjointness", "distance_cap"];
    for c in checks {
        assert_eq!(v["checks"][c]["pass"], true, "{c}");
    }
}

#[test]
fn verify_failures_exit_one() {
    let p = build_to_file("c4.txt", &["--family", "C4", "--l", "2"]);
    let o = lrc4(&["verify", "--parity", &p, "--r", "1", "--delta", "3", "--json"], &[]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["error"], "locality");

    // a generator matrix read as a parity-check matrix is a different code
    let g = build_to_file("c4g.txt", &["--family", "C4", "--l", "2", "--as", "generator"]);
    let o = lrc4(&["verify", "--parity", &g, "--r", "3", "--delta", "3"], &[]);
    assert_ne!(o.status.code(), Some(0));
    let o = lrc4(&["verify", "--generator", &g, "--r", "3", "--delta", "3"], &[]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn format_errors_exit_two() {
    let p = scratch("bad.txt");
    std::fs::write(&p, "2 3\n1 0 w\n0 W 1").unwrap();
    let o = lrc4(&["distance", "--parity", p.to_str().unwrap()], &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("trailing newline"));
    assert_eq!(lrc4(&["verify", "--r", "3"], &[]).status.code(), Some(2));
}

#[test]
fn scan_budget_env() {
    // [9,5,3]: k > n − k, so the distance comes from a column scan
    let p = build_to_file("c1.txt", &["--family", "C1", "--l", "2"]);
    let o = lrc4(&["distance", "--parity", &p], &[("LRC4_MAX_SCAN", "1")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("LRC4_MAX_SCAN"));
    let o = lrc4(&["distance", "--parity", &p, "--full"], &[("LRC4_MAX_SCAN", "1")]);
    assert_eq!(stdout(&o), "n=9 k=5 d=3\n");
    let o = lrc4(&["distance", "--parity", &p, "--json"], &[]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["params"]["d"], 3);
}

#[test]
fn classify_json() {
    let o = lrc4(&["classify", "--n-max", "10", "--json"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let tuples: Vec<[u64; 5]> = v["tuples"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| ["n", "k", "d", "r", "delta"].map(|f| t[f].as_u64().unwrap()))
        .collect();
    assert!(tuples.contains(&[9, 5, 3, 3, 3]));
    assert!(tuples.contains(&[10, 2, 5, 1, 5]));
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 4);
    assert!(reports.iter().all(|r| r["holds"] == true && r["conclusion"] == "nonexistent"));
    assert_eq!(lrc4(&["classify", "--n-max", "500"], &[]).status.code(), Some(2));
}

#[test]
fn repair_and_pg() {
    let o = lrc4(&["repair", "--family", "C6", "--l", "2", "--erase", "6,9", "--trials", "100", "--seed", "4", "--json"], &[]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["recovered"], 100);
    assert_eq!(v["trace"][0]["group"], 2);
    let again = lrc4(&["repair", "--family", "C6", "--l", "2", "--erase", "6,9", "--trials", "100", "--seed", "4", "--json"], &[]);
    assert_eq!(stdout(&again), stdout(&o));

    let o = lrc4(&["pg", "--m", "3", "--points", "--json"], &[]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["count"], 21);
    assert_eq!(stdout(&lrc4(&["pg", "--m", "5", "--count-subspaces", "1"], &[])), "341\n");
}
