use std::process::{Command, Output};

use serde_json::Value;

fn zetalab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zetalab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn epstein_sum_of_two_squares() {
    let out = zetalab(&["epstein", "--Q", "identity", "--r", "2", "--s", "2,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["value"][0].as_f64().unwrap() - 6.026_812_039_691_828).abs() < 1e-9);
    assert!(v["error_bound"].as_f64().unwrap() < 1e-10);
    assert_eq!(v["r"], 2);
}

#[test]
fn gram_from_file_matches_inline() {
    let dir = std::env::temp_dir().join(format!("zetalab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("q.json");
    std::fs::write(&path, r#"{"r": 2, "Q": [2.0, 1.0, 1.0, 2.0]}"#).unwrap();
    let from_file = zetalab(&["epstein", "--Q", &format!("@{}", path.display()), "--s", "1.7,0.4"]);
    let inline = zetalab(&["epstein", "--Q", "[[2,1],[1,2]]", "--s", "1.7,0.4"]);
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(from_file.stdout, inline.stdout);
    std::fs::remove_dir_all(dir).ok();
}

#[test]
fn exotic_roots_rows_match_the_phase_count() {
    let out = zetalab(&["exotic-roots", "--a", "10", "--t-max", "50", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let rows = text.lines().count() - 1;
    let diag = String::from_utf8(out.stderr).unwrap();
    let predicted: usize = diag
        .split("prediction: ")
        .nth(1)
        .and_then(|s| s.trim().parse().ok())
        .expect("prediction on stderr");
    assert!(rows.abs_diff(predicted) <= 1, "{rows} vs {predicted}");
    assert!(text.lines().next().unwrap().contains("error_bound"));
}

#[test]
fn small_cutoff_warns() {
    let out = zetalab(&["exotic-roots", "--a", "1.5", "--t-max", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8(out.stderr).unwrap().contains("warning"));
}

#[test]
fn bad_flags_exit_two() {
    assert_eq!(zetalab(&["epstein", "--s", "x"]).status.code(), Some(2));
    assert_eq!(zetalab(&["no-such-command"]).status.code(), Some(2));
    assert_eq!(zetalab(&["epstein", "--s", "2,0", "--tol", "1"]).status.code(), Some(2));
    assert_eq!(
        zetalab(&["eisenstein", "--s", "2,0", "--z", "0,-1"]).status.code(),
        Some(2)
    );
    assert_eq!(zetalab(&["exotic-roots", "--a", "0.5"]).status.code(), Some(2));
    assert_eq!(zetalab(&["heegner", "--D", "-5"]).status.code(), Some(2));
}

#[test]
fn tolerance_failure_exits_one() {
    // the direct series cannot reach 1e-10 with so few vectors
    let out = zetalab(&[
        "epstein", "--Q", "identity", "--r", "2", "--s", "2.5,0", "--direct", "100",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stdout.is_empty());
}

#[test]
fn output_is_deterministic() {
    let args = ["ground-state", "--seed", "5", "--points", "4"];
    let a = zetalab(&args);
    let b = zetalab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let other = zetalab(&["ground-state", "--seed", "6", "--points", "4"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn document_commands_in_both_formats() {
    let out = zetalab(&["kronecker", "--z", "0.3,1.7"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "kronecker_check");
    assert!(v["residual"].as_f64().unwrap() < 1e-6);

    let out = zetalab(&["eisenstein", "--z", "0,1", "--s", "2,0", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("kind,x,y,s_re,s_im,value_re,value_im,error_bound"));

    let out = zetalab(&["heegner", "--D", "-3", "--s", "2,0"]);
    let v = json(&out);
    let ratio = v["haas_ratio"][0].as_f64().unwrap();
    let pred = v["haas_prediction"][0].as_f64().unwrap();
    assert!((ratio - pred).abs() < 1e-10 * pred);

    let out = zetalab(&["terras", "--Q", "identity", "--r", "3", "--ell", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["rel_error"].as_f64().unwrap() < 1e-4);
}

#[test]
fn eisenstein_of_a_gram_matrix() {
    let out = zetalab(&["eisenstein", "--Q", "identity", "--r", "3", "--s", "1.5,0"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["kind"], "eisenstein_slr");
    assert!(v["value"][0].as_f64().unwrap().is_finite());
}

#[test]
fn potential_profile_table() {
    let out = zetalab(&["potential", "--y-min", "4", "--y-max", "20", "--points", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(text.starts_with("y,q,q_over_y2"));
}

#[test]
fn spacing_reports_without_failing_unless_asked() {
    let out = zetalab(&["spacing", "--a", "10", "--t-min", "20", "--t-max", "30"]);
    assert_eq!(out.status.code(), Some(0));
    let strict = zetalab(&[
        "spacing", "--a", "10", "--t-min", "20", "--t-max", "30", "--tol", "1e-3",
    ]);
    assert_eq!(strict.status.code(), Some(1));
}

#[test]
fn greens_check_at_short_height() {
    let out = zetalab(&[
        "greens-check",
        "--z",
        "0,1",
        "--s",
        "1.5,0",
        "--a",
        "3",
        "--T",
        "60",
        "--tol",
        "5e-3",
    ]);
    let v = json(&out);
    assert_eq!(v["T"], 60.0);
    assert!(v["tail_bound"].as_f64().unwrap() > 0.0);
    let err = v["rel_error"].as_f64().unwrap();
    assert_eq!(out.status.code(), Some(if err < 5e-3 { 0 } else { 1 }));
}

#[test]
fn selftest_single_criterion() {
    let out = zetalab(&["selftest", "--only", "4", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("4,Kronecker limit formula,true"));
    assert_eq!(zetalab(&["selftest", "--only", "15"]).status.code(), Some(2));
}
