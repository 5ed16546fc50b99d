//! End-to-end tests of the `kgeo` binary: subcommand wiring, exit codes,
//! stdin/stdout conventions and file outputs.

use std::io::Write as _;
use std::process::{Command, Output, Stdio};

fn kgeo(args: &[&str], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_kgeo"));
    cmd.args(args).stdout(Stdio::piped()).stderr(Stdio::piped());
    match stdin {
        Some(input) => {
            cmd.stdin(Stdio::piped());
            let mut child = cmd.spawn().unwrap();
            child.stdin.as_mut().unwrap().write_all(input.as_bytes()).unwrap();
            child.wait_with_output().unwrap()
        }
        None => {
            cmd.stdin(Stdio::null());
            cmd.output().unwrap()
        }
    }
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn cages_pipe_into_check() {
    let cages = kgeo(&["cages", "--emit", "left"], None);
    assert_eq!(cages.status.code(), Some(0));
    let text = stdout(&cages);
    assert!(text.starts_with("n 9\n"));

    let check = kgeo(&["check", "-", "-d", "2", "-k", "2"], Some(&text));
    assert_eq!(check.status.code(), Some(0));
    let report = stdout(&check);
    assert!(report.contains("excess: 2"), "{report}");
    assert!(report.contains("geodetic: true"), "{report}");
    assert!(report.contains("diregular: true"), "{report}");
}

#[test]
fn cages_both_emits_two_documents() {
    let out = kgeo(&["cages"], None);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).matches("n 9\n").count(), 2);
}

#[test]
fn search_finds_both_cages_with_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("results");
    let out = kgeo(
        &[
            "search",
            "-d",
            "2",
            "-k",
            "2",
            "-e",
            "2",
            "--diregular",
            "--jobs",
            "2",
            "--out",
            out_dir.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let summary = stdout(&out);
    assert!(summary.contains("results: 2"), "{summary}");
    assert!(summary.contains("complete: true"), "{summary}");
    assert!(out_dir.join("result-000.dg").exists());
    assert!(out_dir.join("result-001.dg").exists());
    assert!(out_dir.join("summary.txt").exists());
    let json = std::fs::read_to_string(out_dir.join("summary.json")).unwrap();
    assert!(json.contains("\"result_count\": 2"));

    // Each result file reparses and checks out as a (2,2,+2) digraph.
    for i in 0..2 {
        let text = std::fs::read_to_string(out_dir.join(format!("result-{i:03}.dg"))).unwrap();
        let g = kgeo_cli::parse_digraph(&text).unwrap();
        assert!(g.is_diregular(2) && g.is_k_geodetic(2));
    }
}

#[test]
fn search_budget_truncation_exits_three() {
    let out = kgeo(
        &["search", "-d", "2", "-k", "3", "-e", "0", "--max-nodes", "10"],
        None,
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("complete: false"));
}

#[test]
fn expired_time_budget_exits_three() {
    let out = kgeo(
        &["search", "-d", "2", "-k", "3", "-e", "3", "--diregular", "--time-budget", "0"],
        None,
    );
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("complete: false"));
}

#[test]
fn audit_left_cage_exits_zero() {
    let cage = kgeo(&["cages", "--emit", "left"], None);
    let out = kgeo(&["audit", "-", "-d", "2", "-k", "2"], Some(&stdout(&cage)));
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout(&out);
    assert!(report.contains("neighbourhood-lemma"));
    assert!(report.contains("holds"));
    assert!(!report.contains(" fails\n"));
}

#[test]
fn parse_errors_exit_two_with_line_numbers() {
    let out = kgeo(&["check", "-", "-d", "2", "-k", "2"], Some("n 2\n0: 0 1\n1: 0\n"));
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "{err}");

    let missing = kgeo(&["check", "/nonexistent/file.dg", "-d", "2", "-k", "2"], None);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_one() {
    let out = kgeo(&["search", "-d", "2"], None);
    assert_eq!(out.status.code(), Some(1));
    let unknown = kgeo(&["frobnicate"], None);
    assert_eq!(unknown.status.code(), Some(1));
    let bad_format = kgeo(&["export", "-", "--format", "png"], Some("n 1\n0:\n"));
    assert_eq!(bad_format.status.code(), Some(1));
}

#[test]
fn help_and_version_exit_zero() {
    assert_eq!(kgeo(&["--help"], None).status.code(), Some(0));
    assert_eq!(kgeo(&["--version"], None).status.code(), Some(0));
}

#[test]
fn export_dot_via_stdin() {
    let out = kgeo(&["export", "-", "--format", "dot"], Some("n 3\n0: 1\n1: 2\n2: 0\n"));
    assert_eq!(out.status.code(), Some(0));
    let dot = stdout(&out);
    assert!(dot.starts_with("digraph G {\n"));
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 3);
}

#[test]
fn audit_detects_failures_with_exit_four() {
    // Every loop-free simple digraph is 1-geodetic, so this input passes the
    // identical-neighbourhoods gate with min out-degree 1 and excess 2.
    // Vertices 0 and 1 share both out-neighbours, but O(0) = {1} and
    // O(1) = {0} leave an empty shared set where size excess-1 = 1 is
    // required: a genuine fails verdict.
    let text = "n 4\n0: 2 3\n1: 2 3\n2: 3\n3: 2\n";
    let out = kgeo(&["audit", "-", "-d", "1", "-k", "1"], Some(text));
    assert_eq!(out.status.code(), Some(4));
    let report = stdout(&out);
    assert!(report.contains("identical-out-neighbourhoods"), "{report}");
    assert!(report.contains("fails"), "{report}");
}

#[test]
fn checkpointed_search_resumes_from_cli() {
    let dir = tempfile::tempdir().unwrap();
    let ckpt = dir.path().join("run.ckpt");
    let first = kgeo(
        &[
            "search",
            "-d",
            "2",
            "-k",
            "2",
            "-e",
            "2",
            "--split-depth",
            "8",
            "--max-nodes",
            "300",
            "--checkpoint",
            ckpt.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(first.status.code(), Some(3));
    assert!(ckpt.exists());

    let second = kgeo(
        &[
            "search",
            "-d",
            "2",
            "-k",
            "2",
            "-e",
            "2",
            "--split-depth",
            "8",
            "--checkpoint",
            ckpt.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(second.status.code(), Some(0), "{}", String::from_utf8_lossy(&second.stderr));
    assert!(stdout(&second).contains("results: 2"));

    // Resuming with different parameters is refused.
    let mismatched = kgeo(
        &[
            "search",
            "-d",
            "2",
            "-k",
            "2",
            "-e",
            "3",
            "--split-depth",
            "8",
            "--checkpoint",
            ckpt.to_str().unwrap(),
        ],
        None,
    );
    assert_eq!(mismatched.status.code(), Some(1));
}
