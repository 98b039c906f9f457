use std::process::{Command, Output};

use supercong_core::report::Report;

fn supercong(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_supercong"))
        .args(args)
        .env_clear()
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn zero_duration(json: &str) -> serde_json::Value {
    let mut v: serde_json::Value = serde_json::from_str(json).unwrap();
    v["duration_ms"] = 0.into();
    v
}

#[test]
fn b11_on_two_primes() {
    let out = supercong(&["verify", "--check", "b11", "--prime-min", "5", "--prime-max", "7", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["pass"], 2);
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["checks"][0]["name"], "b11");
    assert_eq!(v["checks"][0]["total"], 2);
}

#[test]
fn verbose_text_shows_each_prime() {
    let out = supercong(&["verify", "--check", "b11", "--prime-min", "5", "--prime-max", "7", "--verbose"]);
    let text = stdout(&out);
    assert!(text.contains("b11 [p=5] pass"), "{text}");
    assert!(text.contains("b11 [p=7] pass"), "{text}");
}

#[test]
fn config_errors_exit_with_2() {
    for args in [
        &["verify", "--prime-min", "10", "--prime-max", "9"][..],
        &["verify", "--prime-min", "1"],
        &["verify", "--max-n", "1"],
        &["verify", "--jobs", "0"],
        &["verify", "--check", "no_such_check"],
        &["verify", "--suite", "identities", "--check", "a3"],
        &["verify", "--suite", "bogus"],
    ] {
        assert_eq!(supercong(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn list_rows() {
    let text = stdout(&supercong(&["list"]));
    assert!(text.lines().any(|l| l == "a3 | Eq. (a-3) | p^3 | primes p ≥ 5"), "{text}");
    assert!(text.lines().any(|l| l == "c1 | Eq. (c-1) | exact identity | n ≥ 0"), "{text}");
    let json: serde_json::Value = serde_json::from_str(&stdout(&supercong(&["list", "--format", "json"]))).unwrap();
    let rows = json.as_array().unwrap();
    assert_eq!(rows.len(), text.lines().count());
    assert!(rows.iter().any(|r| r["name"] == "sun_euler" && r["modulus"] == "p^3"));
}

#[test]
fn json_round_trips_byte_identically() {
    let out = supercong(&["verify", "--suite", "congruences", "--prime-max", "23", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let json = stdout(&out);
    let top: Vec<_> = json
        .lines()
        .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
        .map(|l| l.trim().split('"').nth(1).unwrap())
        .collect();
    assert_eq!(top, ["version", "config", "checks", "failures", "skips", "summary", "duration_ms"]);
    assert_eq!(Report::from_json(&json).unwrap().to_json(), json);
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |jobs: &str| {
        let out = supercong(&[
            "verify", "--prime-max", "41", "--max-n", "20", "--format", "json", "--jobs", jobs,
        ]);
        assert_eq!(out.status.code(), Some(0));
        zero_duration(&stdout(&out))
    };
    assert_eq!(run("1"), run("8"));
}

#[test]
fn output_file_and_env_overrides() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = Command::new(env!("CARGO_BIN_EXE_supercong"))
        .args(["verify", "--check", "a3", "--format", "json", "--output"])
        .arg(&path)
        .env_clear()
        .env("SUPERCONG_PRIME_MAX", "13")
        .env("SUPERCONG_PRIME_MIN", "11")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["config"]["prime_min"], 11);
    assert_eq!(v["summary"]["pass"], 2);

    // flags win over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_supercong"))
        .args(["verify", "--check", "a3", "--format", "json", "--prime-max", "7"])
        .env_clear()
        .env("SUPERCONG_PRIME_MAX", "13")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["config"]["prime_max"], 7);
    assert_eq!(v["summary"]["pass"], 2);
}

#[test]
fn seed_accepts_hex() {
    let run = |seed: &str| {
        let out = supercong(&["verify", "--check", "new4", "--max-n", "3", "--format", "json", "--seed", seed]);
        zero_duration(&stdout(&out))["skips"].clone()
    };
    assert_eq!(run("0x5EED"), run("24301"));
}

#[test]
fn include_p3_is_informational() {
    let out = supercong(&[
        "verify", "--suite", "congruences", "--prime-min", "3", "--prime-max", "3", "--include-p3",
        "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    let skips = v["skips"].as_array().unwrap();
    assert!(skips
        .iter()
        .all(|r| r["note"].as_str().unwrap().starts_with("informational") || r["note"].as_str().unwrap().contains("valuation")));
}
