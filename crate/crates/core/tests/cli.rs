//! Contract tests of the command-line surface: formats, file output,
//! exit codes, sweeps, and the stderr-only timing footer.

use std::process::{Command, Output};

fn defosc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_defosc"))
        .args(args)
        .output()
        .expect("binary should run")
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_owned)
        .collect()
}

#[test]
fn jsonl_is_the_default_and_carries_the_schema() {
    let out = defosc(&["spectrum1d", "--alpha", "0.1", "--beta", "0.1", "--levels", "3"]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 3);
    for (n, line) in lines.iter().enumerate() {
        let row: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(row["schema"], 1);
        assert_eq!(row["kind"], "spectrum1d");
        assert_eq!(row["mode"], "general");
        assert_eq!(row["n"], n as u64);
        assert!(row["energy"].as_f64().unwrap().is_finite());
    }
}

#[test]
fn csv_projection_has_a_header_of_matching_width() {
    let out = defosc(&[
        "spectrum1d", "--alpha", "0.1", "--beta", "0.2", "--levels", "4", "--format", "csv",
    ]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 5);
    let width = lines[0].split(',').count();
    assert!(lines[0].starts_with("schema,kind,mode,"));
    for row in &lines[1..] {
        assert_eq!(row.split(',').count(), width);
    }
}

#[test]
fn out_flag_writes_exactly_the_stdout_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rows.jsonl");
    let to_stdout = defosc(&["spectrumdd", "--beta", "0.05", "--nmax", "3"]);
    let to_file = defosc(&[
        "spectrumdd",
        "--beta",
        "0.05",
        "--nmax",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(to_stdout.status.success() && to_file.status.success());
    assert!(to_file.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), to_stdout.stdout);
}

#[test]
fn timing_footer_stays_on_stderr() {
    let out = defosc(&["spectrum1d", "--alpha", "0.2", "--beta", "0.1", "--levels", "2"]);
    let err = String::from_utf8(out.stderr.clone()).unwrap();
    assert!(err.contains("# wall_time_ms"));
    assert!(!String::from_utf8(out.stdout.clone()).unwrap().contains('#'));
}

#[test]
fn domain_and_usage_errors_exit_two() {
    // negative deformation parameter
    let out = defosc(&["spectrum1d", "--alpha", "-0.5", "--beta", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    // unparsable flag value
    let out = defosc(&["spectrum1d", "--alpha", "abc", "--beta", "0.1"]);
    assert_eq!(out.status.code(), Some(2));
    // unknown subcommand
    let out = defosc(&["no-such-command"]);
    assert_eq!(out.status.code(), Some(2));
    // missing sweep spec file
    let out = defosc(&["sweep", "--spec", "/nonexistent/spec.json"]);
    assert_eq!(out.status.code(), Some(2));
    // spec with an unknown kind
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"kind": "nope", "nmax": 2}"#).unwrap();
    let out = defosc(&["sweep", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // spec with an unknown field
    let bad = dir.path().join("typo.json");
    std::fs::write(&bad, r#"{"kind": "1d", "nmax": 2, "alfa": null}"#).unwrap();
    let out = defosc(&["sweep", "--spec", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // branch clash: the alpha0 branch with a nonzero alpha
    let out = defosc(&["spectrum1d", "--alpha", "0.1", "--beta", "0.1", "--mode", "alpha0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unreachable_verification_tolerance_exits_three() {
    let out = defosc(&[
        "spectrum1d", "--alpha", "0", "--beta", "0.2", "--efield", "0.3", "--levels", "3",
        "--verify", "--tol", "1e-18",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("verification failed"), "stderr was: {err}");
}

#[test]
fn verified_run_annotates_rows_and_exits_clean() {
    let out = defosc(&[
        "spectrumdd", "--dim", "4", "--l", "1", "--beta", "0.05", "--betap", "0.05", "--nmax",
        "2", "--verify", "--tol", "1e-4",
    ]);
    assert_eq!(out.status.code(), Some(0));
    for line in stdout_lines(&out) {
        let row: serde_json::Value = serde_json::from_str(&line).unwrap();
        assert_eq!(row["converged"], true);
        let delta = row["delta"].as_f64().unwrap();
        assert!(delta.abs() <= 1.0e-4);
        assert!(row["oracle_te"].as_f64().unwrap() > 0.0);
    }
}

#[test]
fn closed_form_check_is_reported_in_state_rows() {
    let out = defosc(&[
        "states1d", "--alpha", "0.15", "--beta", "0.25", "--efield", "0.4", "--n", "2",
        "--check-closed-form",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 1);
    let row: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(row["closed_form_match"], true);
    assert!(row["norm_n"].as_f64().unwrap() > 0.0);
    assert!(!row["coeffs"].as_array().unwrap().is_empty());
}

#[test]
fn sweeps_cover_both_kinds_and_ignore_thread_count() {
    let dir = tempfile::tempdir().unwrap();

    let spec1d = dir.path().join("grid1d.json");
    std::fs::write(
        &spec1d,
        r#"{
            "kind": "1d",
            "alpha": {"start": 0.05, "stop": 0.15, "steps": 3},
            "beta": {"start": 0.1, "stop": 0.1, "steps": 1},
            "efield": {"start": 0.0, "stop": 0.5, "steps": 2},
            "nmax": 2
        }"#,
    )
    .unwrap();
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_defosc"))
            .args(["sweep", "--spec", spec1d.to_str().unwrap()])
            .env("DOT_MAX_THREADS", threads)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("4");
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout, "thread count leaked into the bytes");
    // 3 alpha x 1 beta x 2 efield points, 3 levels each
    assert_eq!(stdout_lines(&a).len(), 18);

    let specrad = dir.path().join("gridrad.json");
    std::fs::write(
        &specrad,
        r#"{
            "kind": "radial",
            "beta": {"start": 0.02, "stop": 0.05, "steps": 2},
            "betap": {"start": 0.0, "stop": 0.0, "steps": 1},
            "dim": 3,
            "l_max": 1,
            "nmax": 1
        }"#,
    )
    .unwrap();
    let out = defosc(&["sweep", "--spec", specrad.to_str().unwrap()]);
    assert!(out.status.success());
    let lines = stdout_lines(&out);
    // 2 beta x 1 betap x 2 l values, 2 levels each
    assert_eq!(lines.len(), 8);
    let row: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(row["kind"], "spectrumdd");
    assert_eq!(row["dim"], 3);
}

#[test]
fn verify_all_reports_every_check_and_passes() {
    let out = defosc(&["verify-all"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    let ok = lines.iter().filter(|l| l.starts_with("[ ok ]")).count();
    let fail = lines.iter().filter(|l| l.starts_with("[FAIL]")).count();
    let skip = lines.iter().filter(|l| l.starts_with("[skip]")).count();
    assert!(ok >= 10, "only {ok} passing checks reported");
    assert_eq!(fail, 0);
    assert_eq!(skip, 1, "exactly the limit-circle channel is skipped");
    assert!(lines.last().unwrap().starts_with("verify-all:"));
}
