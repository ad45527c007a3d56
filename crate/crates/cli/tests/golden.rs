//! Golden files: `NAME.args` holds one argument per line, `NAME.stdout` the
//! exact expected standard output and `NAME.code` a nonzero exit code.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;

struct Case {
    name: String,
    args: Vec<String>,
    stdout: String,
    code: i32,
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn cases() -> Vec<Case> {
    let dir = golden_dir();
    let mut names: Vec<String> = fs::read_dir(&dir)
        .unwrap()
        .filter_map(|e| {
            let p = e.unwrap().path();
            (p.extension()? == "args").then(|| p.file_stem().unwrap().to_string_lossy().into_owned())
        })
        .collect();
    names.sort();
    names
        .into_iter()
        .map(|name| {
            let read = |ext: &str| fs::read_to_string(dir.join(format!("{name}.{ext}")));
            let args = read("args").unwrap().lines().map(str::to_string).collect();
            let stdout = read("stdout").unwrap();
            let code = read("code").map(|c| c.trim().parse().unwrap()).unwrap_or(0);
            Case { name, args, stdout, code }
        })
        .collect()
}

#[test]
fn binary_matches_golden_files() {
    let cases = cases();
    assert!(cases.len() >= 20, "only {} golden cases", cases.len());
    for case in &cases {
        let output = Command::new(env!("CARGO_BIN_EXE_posyring"))
            .args(&case.args)
            .env_remove(posyring_cli::ORACLE_ENV)
            .output()
            .unwrap();
        let stdout = String::from_utf8(output.stdout).unwrap();
        let stderr = String::from_utf8(output.stderr).unwrap();
        assert_eq!(stdout, case.stdout, "{}: stdout", case.name);
        assert_eq!(output.status.code(), Some(case.code), "{}: exit code, stderr {stderr}", case.name);
        if case.code == 0 {
            assert!(stderr.is_empty(), "{}: unexpected stderr {stderr}", case.name);
        } else {
            assert!(stderr.starts_with("error: "), "{}: stderr {stderr}", case.name);
        }
    }
}

#[test]
fn library_entry_point_matches_binary() {
    for case in cases() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let args = std::iter::once("posyring".to_string()).chain(case.args.iter().cloned());
        let code = posyring_cli::run_with(args, false, &mut out, &mut err);
        assert_eq!(String::from_utf8(out).unwrap(), case.stdout, "{}", case.name);
        assert_eq!(code, case.code, "{}", case.name);
    }
}

#[test]
fn every_subcommand_has_a_golden_case() {
    let cases = cases();
    for sub in
        ["member", "groebner", "saturate", "normalize", "scale", "pi", "generator", "eval", "proper", "unit", "atomic"]
    {
        assert!(
            cases.iter().any(|c| c.code == 0 && c.args.iter().find(|a| !a.starts_with("--")) == Some(&sub.to_string())),
            "no successful golden case for {sub}"
        );
    }
}

#[test]
fn usage_errors_print_usage_to_stderr() {
    for args in [&["frobnicate"][..], &["member", "--vars", "x", "x - 1"], &["atomic", "--bogus", "x"], &[]] {
        let output = Command::new(env!("CARGO_BIN_EXE_posyring")).args(args).output().unwrap();
        assert_eq!(output.status.code(), Some(1), "{args:?}");
        assert!(output.stdout.is_empty());
        assert!(String::from_utf8_lossy(&output.stderr).contains("Usage"), "{args:?}");
    }
}

#[test]
fn oracle_subcommand_is_gated() {
    let args = ["oracle", "--vars", "x,y", "y - 1", "--ideal", "x - 1; x*y - 1", "--lambda", "1", "--degree", "2"];
    let hidden =
        Command::new(env!("CARGO_BIN_EXE_posyring")).args(args).env_remove(posyring_cli::ORACLE_ENV).output().unwrap();
    assert_eq!(hidden.status.code(), Some(1));
    let help = Command::new(env!("CARGO_BIN_EXE_posyring")).arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    assert!(!String::from_utf8_lossy(&help.stdout).contains("oracle"));

    let shown =
        Command::new(env!("CARGO_BIN_EXE_posyring")).args(args).env(posyring_cli::ORACLE_ENV, "1").output().unwrap();
    assert_eq!(shown.status.code(), Some(0));
    assert_eq!(String::from_utf8(shown.stdout).unwrap(), "true\n");

    let (mut out, mut err) = (Vec::new(), Vec::new());
    let euclid = ["posyring", "oracle", "x - 1", "--ideal", "x^2 - 1; x^3 - 1", "--method", "euclid"];
    assert_eq!(posyring_cli::run_with(euclid, true, &mut out, &mut err), 0);
    assert_eq!(out, b"true\n");
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let over = ["posyring", "oracle", "x", "--ideal", "x", "--lambda", "7"];
    assert_eq!(posyring_cli::run_with(over, true, &mut out, &mut err), 1);
}

#[test]
fn output_is_deterministic() {
    let args = ["--json", "member", "--ring", "posy", "x^(1/2) - 1", "--ideal", "x^(1/6) - 1", "--certificate"];
    let runs: Vec<Vec<u8>> =
        (0..3).map(|_| Command::new(env!("CARGO_BIN_EXE_posyring")).args(args).output().unwrap().stdout).collect();
    assert!(runs.windows(2).all(|w| w[0] == w[1]));
    let v: serde_json::Value = serde_json::from_slice(&runs[0]).unwrap();
    assert_eq!(v["ok"], true);
    assert_eq!(v["result"], true);
    assert_eq!(v["witness"]["scale"], 6);
}
