use std::io::Write;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pattern-teach"))
        .args(args)
        .env_remove("PATTEACH_MAX_PATTERN_LEN")
        .env_remove("PATTEACH_MAX_WORD_LEN")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(contents.as_bytes()).unwrap();
    f
}

const PI: &str = "x1 0 x2 0 x3 1 x4 1 x5";

#[test]
fn match_exit_codes() {
    assert_eq!(run(&["match", "--alphabet", "01", "--pattern", PI, "--word", "00011"]).status.code(), Some(0));
    assert_eq!(run(&["match", "--alphabet", "01", "--pattern", PI, "--word", "01101"]).status.code(), Some(1));
    let o = run(&["match", "--pattern", "x1 0 x2", "--word", "0110", "--witness"]);
    assert!(stdout(&o).contains("x2 -> 110"));
}

#[test]
fn match_json_witness() {
    let o = run(&["--format", "json", "match", "--pattern", "x1 x2 x1", "--word", "01111101", "--witness"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["member"], true);
    assert_eq!(v["witness"]["intervals"].as_array().unwrap().len(), 3);
}

#[test]
fn teachset_examples() {
    let o = run(&["teachset", "--class", "noncross-td", "--pattern", "x1^4 x2^8 x3^9", "--m", "9"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 5);
    assert!(out.lines().any(|l| l == "- (01)^{1260}(001)^{1260}(0001)^{1260}"));

    let o = run(&["teachset", "--class", "sr", "--pattern", "x1 0 x2 0 x3"]);
    assert_eq!(stdout(&o), "+ 00\n- 0\n");

    let o = run(&["teachset", "--class", "x222-fixed"]);
    assert_eq!(stdout(&o), "+ eps\n+ 001100\n- 0\n- 0110\n- 000\n- (01)^2(001)^2(0001)^2(0^41)^2\n");

    let o = run(&["teachset", "--class", "sr-vs-regular", "--pattern", PI]);
    assert_eq!(stdout(&o), "+ 10101010\n+ 00011\n- 01101\n");
}

#[test]
fn teachset_errors() {
    assert_eq!(run(&["teachset", "--class", "sr-vs-all", "--pattern", "x1 0 x2"]).status.code(), Some(2));
    assert_eq!(run(&["teachset", "--class", "nope"]).status.code(), Some(2));
    assert_eq!(
        run(&["teachset", "--class", "qr-unary", "--alphabet", "0", "--pattern", "0 x1^2"]).status.code(),
        Some(2)
    );
}

#[test]
fn teachset_feeds_verify() {
    let set = run(&["teachset", "--class", "sr", "--pattern", "x1 0 x2 0 x3"]);
    let f = file(&stdout(&set));
    let path = f.path().to_str().unwrap();
    let o = run(&["verify", "--pattern", "x1 0 x2 0 x3", "--sample", path, "--class", "sbr"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("status: confirmed"));
}

#[test]
fn verify_outcomes() {
    let one = file("+ 0\n");
    let path = one.path().to_str().unwrap();
    let o = run(&["verify", "--pattern", "x1 0 x2", "--sample", path, "--class", "sbr"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("rival: x1\n"));
    let o = run(&["verify", "--pattern", "x1 0 x2", "--sample", path, "--class", "sbr", "--pbt", "sr"]);
    assert_eq!(o.status.code(), Some(0));

    let bad = file("+ 1\n");
    let o = run(&["verify", "--pattern", "x1 0 x2", "--sample", bad.path().to_str().unwrap(), "--class", "sbr"]);
    assert_eq!(o.status.code(), Some(4));
}

#[test]
fn verify_json_round_trip() {
    let one = file("+ 0\n");
    let o = run(&[
        "--format",
        "json",
        "verify",
        "--pattern",
        "x1 0 x2",
        "--sample",
        one.path().to_str().unwrap(),
        "--class",
        "sbr",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "refuted");
    assert_eq!(v["rival"], "x1");
    assert_eq!(v["bounds"]["max_pattern_len"], 8);
}

#[test]
fn td_examples() {
    let o = run(&[
        "td",
        "--pattern",
        "0 0 x1 x1",
        "--class",
        "qr",
        "--alphabet",
        "0",
        "--max-word-len",
        "6",
        "--max-pattern-len",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("size: 3\n"));
    let o = run(&["td", "--pattern", "x1", "--class", "sbr"]);
    assert!(stdout(&o).contains("size: 1\n"));
    let o = run(&["td", "--pattern", "x1 0 x2 1 x3", "--class", "regular", "--budget", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bounds_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_pattern-teach"))
        .args(["td", "--pattern", "x1", "--class", "sbr"])
        .env("PATTEACH_MAX_PATTERN_LEN", "3")
        .env("PATTEACH_MAX_WORD_LEN", "4")
        .output()
        .unwrap();
    assert!(stdout(&o).contains("bounds: max-pattern-len 3 max-word-len 4"));
}

#[test]
fn passepartout_outcomes() {
    let ok = file("001100\n");
    let o = run(&["passepartout", ok.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("accepts 001100: true"));
    assert!(out.contains("morphism from x1^2 x2^2 x3^2: true"));
    assert!(out.lines().any(|l| l.starts_with("separator: ") && !l.contains("none")));

    let odd = file("0\n");
    let o = run(&["passepartout", odd.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("`0`"));

    let empty = file("");
    assert_eq!(run(&["passepartout", empty.path().to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args =
        ["teachset", "--class", "sr-vs-regular", "--alphabet", "012", "--pattern", "x1 0 x2 1 x3 2 x4 1 x5 1 x6"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    assert_eq!(stdout(&run(&args)), "+ 012101\n+ 10211020110\n- 2111020202110011020010\n");
}
