use std::process::{Command, Output};

use pretzel_lspace::cli::AnalyzeReport;
use pretzel_lspace::lspace::{Verdict, VerificationReport};

fn pretzel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pretzel"))
        .args(args)
        .env_remove("PRETZEL_WORKERS")
        .env_remove("PRETZEL_REPORT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn analyze_text() {
    let out = pretzel(&["analyze", "(-2,3,7)"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("verdict         LSpaceKnot"));
    assert!(text.contains("family          (-2,3,7)"));

    let text = stdout(&pretzel(&["analyze", "(3,-5,3,-2)"]));
    assert!(text.contains("NotLSpaceKnot"));
    assert!(text.contains("HFK dimension >= 2"));
    assert!(text.contains("M\\s"));

    let text = stdout(&pretzel(&["analyze", "(1,-1,3)"]));
    assert!(text.contains("normalized      (3)"));
}

#[test]
fn analyze_json_round_trips() {
    let out = pretzel(&["analyze", "(-2,5,5)", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let report: AnalyzeReport = serde_json::from_str(&text).unwrap();
    assert_eq!(report.classification.verdict, Verdict::NotLSpaceKnot);
    assert_eq!(serde_json::to_string_pretty(&report).unwrap() + "\n", text);
}

#[test]
fn dump_graphs_writes_dot() {
    let path = std::env::temp_dir().join(format!("pretzel-graphs-{}.dot", std::process::id()));
    let out = pretzel(&[
        "analyze",
        "(3,-3,1,3,2)",
        "--dump-graphs",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(dot.contains("graph"));
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["verify", "--max-tangles", "2", "--max-twist", "5"][..],
        &["verify", "--max-tangles", "3", "--max-twist", "0"],
        &[
            "verify",
            "--max-tangles",
            "3",
            "--max-twist",
            "3",
            "--workers",
            "0",
        ],
        &["analyze", "(1,0,3)"],
        &["analyze", "(2,2)"],
        &["analyze"],
        &["frobnicate"],
    ] {
        let out = pretzel(args);
        assert_eq!(out.status.code(), Some(1), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
    assert_eq!(pretzel(&["--help"]).status.code(), Some(0));
    assert_eq!(pretzel(&["--version"]).status.code(), Some(0));
}

#[test]
fn hidden_oracle_subcommand() {
    let out = pretzel(&["oracle", "(1,1,1)"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "t^-1 - 1 + t");
    assert!(!stdout(&pretzel(&["--help"])).contains("oracle"));
}

#[test]
fn verify_is_deterministic_across_workers() {
    let base = ["verify", "--max-tangles", "4", "--max-twist", "5"];
    for format in ["csv", "json", "text"] {
        let one = pretzel(&[&base[..], &["--format", format, "--workers", "1"]].concat());
        let four = pretzel(&[&base[..], &["--format", format, "--workers", "4"]].concat());
        assert_eq!(one.status.code(), Some(0));
        assert_eq!(four.status.code(), Some(0));
        assert_eq!(one.stdout, four.stdout, "{format}");
    }
}

#[test]
fn verify_json_round_trips() {
    let out = pretzel(&[
        "verify",
        "--max-tangles",
        "3",
        "--max-twist",
        "7",
        "--format",
        "json",
    ]);
    let text = stdout(&out);
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    assert!(report.counterexamples.is_empty());
    assert_eq!(report.to_json() + "\n", text);
}

#[test]
fn report_dir_from_environment() {
    let dir = std::env::temp_dir().join(format!("pretzel-reports-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_pretzel"))
        .args([
            "verify",
            "--max-tangles",
            "3",
            "--max-twist",
            "3",
            "--format",
            "csv",
        ])
        .env("PRETZEL_REPORT_DIR", &dir)
        .env("PRETZEL_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let csv = std::fs::read_to_string(dir.join("verify_r3_n3.csv")).unwrap();
    std::fs::remove_dir_all(&dir).ok();
    assert!(
        csv.starts_with("code,type,fibered,genus,det,coeff_ok,family,verdict,elimination_reason\n")
    );
}
