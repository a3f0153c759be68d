//! End-to-end tests of the command-line interface: exit codes, report
//! determinism under --stable-output, and cache soundness (warm and cold
//! runs agree bit for bit).

use std::process::Command;

fn yosp() -> Command {
    Command::new(env!("CARGO_BIN_EXE_yosp"))
}

#[test]
fn verify_passes_and_exits_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let status = yosp()
        .args(["verify", "--m", "1", "--order", "2", "--suite", "thm-odp", "--format", "json"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(report["suite"], "thm-odp");
    assert_eq!(report["totals"]["failed"], 0);
    // stable key order in the serialized report
    let text = std::fs::read_to_string(&out).unwrap();
    let suite_pos = text.find("\"suite\"").unwrap();
    let order_pos = text.find("\"order\"").unwrap();
    let checks_pos = text.find("\"checks\"").unwrap();
    let totals_pos = text.find("\"totals\"").unwrap();
    assert!(suite_pos < order_pos && order_pos < checks_pos && checks_pos < totals_pos);
}

#[test]
fn unknown_suite_exits_two_and_lists_ids() {
    let output = yosp().args(["verify", "--suite", "nosuch"]).output().unwrap();
    assert_eq!(output.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&output.stderr);
    assert!(stderr.contains("thm-odp"));
    assert!(stderr.contains("pbw"));
}

#[test]
fn invalid_rank_and_order_exit_two() {
    assert_eq!(
        yosp().args(["verify", "--m", "7"]).status().unwrap().code(),
        Some(2)
    );
    assert_eq!(
        yosp().args(["verify", "--order", "30"]).status().unwrap().code(),
        Some(2)
    );
    // suite valid but inapplicable at the rank
    assert_eq!(
        yosp()
            .args(["verify", "--m", "1", "--suite", "ospl4"])
            .status()
            .unwrap()
            .code(),
        Some(2)
    );
}

#[test]
fn negative_control_exits_one() {
    let status = yosp()
        .args(["verify", "--m", "1", "--order", "2", "--suite", "negative-control"])
        .arg("--out")
        .arg(tempfile::tempdir().unwrap().path().join("r.json"))
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(1));
}

#[test]
fn stable_output_is_byte_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let out = dir.path().join(name);
        let status = yosp()
            .args([
                "verify",
                "--m",
                "1",
                "--order",
                "3",
                "--suite",
                "all",
                "--seed",
                "11",
                "--stable-output",
            ])
            .arg("--out")
            .arg(&out)
            .status()
            .unwrap();
        assert_eq!(status.code(), Some(0));
        std::fs::read(&out).unwrap()
    };
    assert_eq!(run("a.json"), run("b.json"));
}

#[test]
fn cache_soundness_and_idempotence() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("table.cache");
    // cold run, no cache
    let cold = dir.path().join("cold.json");
    let status = yosp()
        .args(["verify", "--m", "1", "--order", "2", "--suite", "gauss-core", "--stable-output"])
        .arg("--out")
        .arg(&cold)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    // precompute the table, twice: identical bytes
    let status = yosp()
        .args(["table", "--m", "1", "--order", "4"])
        .arg("--cache")
        .arg(&cache)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let first = std::fs::read(&cache).unwrap();
    let status = yosp()
        .args(["table", "--m", "1", "--order", "4"])
        .arg("--cache")
        .arg(&cache)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert_eq!(first, std::fs::read(&cache).unwrap());
    // warm run through the cache: identical report
    let warm = dir.path().join("warm.json");
    let status = yosp()
        .args(["verify", "--m", "1", "--order", "2", "--suite", "gauss-core", "--stable-output"])
        .arg("--cache")
        .arg(&cache)
        .arg("--out")
        .arg(&warm)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert_eq!(std::fs::read(&cold).unwrap(), std::fs::read(&warm).unwrap());
    // the cache directory environment variable is honoured
    let envdir = dir.path().join("envcache");
    let status = yosp()
        .args(["table", "--m", "1", "--order", "2"])
        .env("YOSP_CACHE_DIR", &envdir)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    assert!(envdir.join("table.cache").exists());
}

#[test]
fn pbw_command_prints_rows() {
    let output = yosp().args(["pbw", "--m", "1", "--order", "2"]).output().unwrap();
    assert_eq!(output.status.code(), Some(0));
    let stdout = String::from_utf8_lossy(&output.stdout);
    assert!(stdout.contains("(0, 1, 1)"));
    assert!(stdout.contains("(1, 6, 6)"));
    assert!(stdout.contains("(2, 25, 25)"));
    // out-of-bounds degree is a usage error
    assert_eq!(
        yosp().args(["pbw", "--m", "1", "--order", "9"]).status().unwrap().code(),
        Some(2)
    );
}
