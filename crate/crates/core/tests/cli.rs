use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_diag-rees"))
        .args(args)
        .env_remove("DIAG_REES_BUDGET_SECS")
        .output()
        .unwrap()
}

#[test]
fn gens_prints_l() {
    let out = run(&["gens", "--params", "2,2,2,2,2,2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().any(|l| l.starts_with("f[1,2]:")));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["gens", "--params", "2,2,3,2,2,2"][..],
        &["gens", "--params", "2,2"],
        &["verify", "gb"],
        &["verify", "gb", "--params", "2,2,2,2,2,2", "--budget-secs", "0"],
        &["frobnicate"],
    ] {
        assert_eq!(run(args).status.code(), Some(64), "{args:?}");
    }
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "linear-type", "--params", "2,2,2,2,2,2"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "gb", "--params", "3,3,2,3,2,2"]).status.code(), Some(1));
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.json");
    let out = run(&[
        "verify",
        "nzd",
        "--params",
        "2,2,2,2,2,2",
        "--json",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let file: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let printed: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(file, printed);
    assert_eq!(file["schema"], 1);
    let checks = file["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 4);
    for c in checks {
        assert_eq!(c["verdict"], "pass");
        assert!(c["name"].is_string());
    }
    assert!(file["engine"]["pairs"].is_u64());
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["groebner", "--params", "2,3,2,3,2,3"][..],
        &["groebner", "--params", "2,2,2,2,2,2", "--order", "elim:t"],
        &["gens", "--params", "3,3,3,3,2,3", "--set", "g", "--dump-matrices"],
    ] {
        let a = run(args);
        let b = run(args);
        assert_eq!(a.status.code(), Some(0));
        assert!(!a.stdout.is_empty());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn stats_on_stderr() {
    let out = run(&["groebner", "--params", "2,2,2,2,2,2", "--stats"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["basis_size"].as_u64().unwrap() as usize, String::from_utf8(out.stdout).unwrap().lines().count());
}
