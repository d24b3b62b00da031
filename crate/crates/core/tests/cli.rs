use std::process::Command;

use p2q2::AutReport;

fn p2q2(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_p2q2")).args(args).env_remove("P2Q2_BUDGET").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn exit_codes() {
    assert_eq!(p2q2(&["verify", "t1:p=3,q=2"]).0, 0);
    assert_eq!(p2q2(&["verify", "t19:p=5,q=2", "--test-corrupt-predicted"]).0, 1);
    assert_eq!(p2q2(&["verify", "t19:q=2"]).0, 2);
    assert_eq!(p2q2(&["verify", "t20:p=5,q=3"]).0, 2);
    assert_eq!(p2q2(&["verify", "--budget", "lots", "t1:p=3,q=2"]).0, 2);
    assert_eq!(p2q2(&["table", "1"]).0, 0);
    assert_eq!(p2q2(&["list", "--format", "csv"]).0, 0);
}

#[test]
fn budget_exhaustion_is_skipped_not_failed() {
    let (code, out, _) = p2q2(&["verify", "t19:p=5,q=2", "--budget", "1e2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert!(out.contains("Skipped"));
    let out = Command::new(env!("CARGO_BIN_EXE_p2q2"))
        .args(["verify", "t19:p=5,q=2", "--format", "csv"])
        .env("P2Q2_BUDGET", "1e2")
        .output()
        .unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("Skipped"));
}

#[test]
fn json_round_trip_is_byte_identical() {
    let (code, out, _) = p2q2(&["verify", "t23:p=5,q=2", "t3:p=3,q=2", "--format", "json"]);
    assert_eq!(code, 0);
    let reports: Vec<AutReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0].brute.as_ref().unwrap().order, 160);
    let again = serde_json::to_string_pretty(&reports).unwrap() + "\n";
    assert_eq!(again, out);
}

#[test]
fn sweep_writes_file_and_build_reports_invariants() {
    let dir = std::env::temp_dir().join(format!("p2q2-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sweep.csv");
    let (code, _, _) = p2q2(&[
        "--threads",
        "2",
        "verify",
        "--sweep",
        "--pmax",
        "3",
        "--qmax",
        "2",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    let text = std::fs::read_to_string(&path).unwrap();
    // t10 is the one order-36 case where the oracle disagrees with the table.
    assert_eq!(code, 1);
    assert!(text.lines().any(|l| l.starts_with("\"t10:p=3,q=2\"") && l.contains("OrderMismatch")));
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert!(rows.len() > 14);
    let off: Vec<&&str> = rows.iter().filter(|l| !l.contains(",Match,")).collect();
    assert_eq!(off.len(), 1, "{off:?}");

    let (code, out, _) = p2q2(&["build", "t27:p=11,q=5", "--n", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], 3025);
    assert_eq!(v["spec"], "t27:p=11,q=5,n=2");
}
