use std::io::Write;
use std::process::{Command, Stdio};

use seifert_lens_core::cli::{run, Outcome};
use seifert_lens_core::SeifertFibration;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("seifert-lens").chain(args.iter().copied()))
}

fn ok(args: &[&str]) -> String {
    let out = cli(args);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    out.stdout
}

fn canonical(text: &str) -> String {
    SeifertFibration::parse(text).unwrap().normalize().unwrap().to_string()
}

#[test]
fn construct_prints_fibration_and_trace() {
    let out = ok(&["construct", "--lens", "7,2", "--weights", "5,2"]);
    let fibration = out
        .lines()
        .find_map(|l| l.strip_prefix("fibration: "))
        .expect("fibration line");
    assert_eq!(canonical(fibration), canonical("M(0;(35,-2),(14,1))"));
    assert!(out.lines().any(|l| l.starts_with("trace: u=1 ")), "{out}");
}

#[test]
fn recognize_projective_base() {
    assert_eq!(ok(&["recognize", "M(-1;(1,1))"]).trim(), "L(4,1)");
    assert_eq!(ok(&["recognize", "M(-1;(1,-1))"]).trim(), "L(4,3)");
}

#[test]
fn iso_mirror_pair() {
    let out = ok(&["iso", "M(0;(15,2),(10,-1))", "M(0;(15,-2),(10,1))"]);
    assert_eq!(out.trim(), "reversing");
    let out = ok(&["iso", "M(0;(3,-1),(3,2))", "M(0;(3,2),(3,-1),(1,0))"]);
    assert_eq!(out.trim(), "oriented");
}

#[test]
fn classify_two_classes_one_mirror_pair() {
    let out = ok(&["classify", "--lens", "2,1", "--pair", "5,3"]);
    assert!(out.contains("case: (4)"), "{out}");
    assert!(out.contains("classes: 2"), "{out}");
    assert!(out.contains("reversing pairs: 1"), "{out}");

    let json: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "classify", "--lens", "2,1", "--pair", "5,3"])).unwrap();
    assert_eq!(json["status"], "ok");
    assert_eq!(json["command"], "classify");
    assert_eq!(json["result"]["classes"].as_array().unwrap().len(), 2);
    assert_eq!(json["result"]["reversing_pairs"].as_array().unwrap().len(), 1);
}

#[test]
fn json_is_deterministic() {
    for args in [
        &["--json", "enumerate", "--lens", "7,2", "--max-mult", "12"][..],
        &["--json", "classify", "--lens", "7,2", "--pair", "5,2"],
        &["--json", "construct", "--lens", "5,2", "--weights", "3,-2"],
    ] {
        let first = ok(args);
        for _ in 0..3 {
            assert_eq!(ok(args), first);
        }
        let value: serde_json::Value = serde_json::from_str(&first).unwrap();
        assert_eq!(value["status"], "ok");
    }
}

#[test]
fn json_rationals_and_trace() {
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["--json", "construct", "--lens", "7,2", "--weights", "5,2"])).unwrap();
    assert_eq!(json["result"]["canonical"]["euler_number"]["num"], -1);
    assert_eq!(json["result"]["canonical"]["euler_number"]["den"], 70);
    assert_eq!(json["trace"]["u"], 1);
    assert_eq!(json["trace"]["s"], 4);
    assert_eq!(json["input"]["lens"]["p"], 7);
}

#[test]
fn normalize_and_invariants() {
    let out = ok(&["normalize", "M(0;(35,-2),(14,1))"]);
    assert_eq!(out, "M(0;(14,1),(35,33),(1,-1))\neuler: -1/70\n");
    assert_eq!(ok(&["homology", "M(0;(35,-2),(14,1))"]).trim(), "Z/7");
    assert_eq!(ok(&["homology", "M(0;(2,1),(2,-1))"]).trim(), "Z");
    assert_eq!(
        ok(&["pi1", "M(0;(3,-1),(2,5))"]).trim(),
        "< q1, q2, h | h central, q1^3 h^-1, q2^2 h^5, q1 q2 >"
    );
    assert_eq!(ok(&["isotropy", "--lens", "6,5", "--weights", "3,1"]).trim(), "2");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cli(&["bogus"]).code, 2);
    assert_eq!(cli(&["construct", "--lens", "7,2"]).code, 2);
    assert_eq!(cli(&[]).code, 2);
    let help = cli(&["--help"]);
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("construct"));
}

#[test]
fn domain_errors_exit_one() {
    let out = cli(&["parse-check", "M(0;(3,1)"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty());
    assert!(out.stderr.starts_with("error: "), "{}", out.stderr);

    assert_eq!(cli(&["construct", "--lens", "6,2", "--weights", "1,1"]).code, 1);
    assert_eq!(cli(&["construct", "--lens", "7,2", "--weights", "4,2"]).code, 1);
    assert_eq!(cli(&["recognize", "M(0;(2,1),(3,1),(5,1))"]).code, 1);
    assert_eq!(cli(&["normalize", "M(0;(4,2))"]).code, 1);

    let out = cli(&["--json", "recognize", "M(1;(2,1))"]);
    assert_eq!(out.code, 1);
    let json: serde_json::Value = serde_json::from_str(&out.stderr).unwrap();
    assert_eq!(json["status"], "error");
}

#[test]
fn printed_fibrations_reparse() {
    let outputs = [
        ok(&["enumerate", "--lens", "5,2", "--max-mult", "15"]),
        ok(&["enumerate", "--lens", "4,3", "--max-mult", "6"]),
        ok(&["one-singular", "--lens", "7,3", "--bound", "20"]),
        ok(&["classify", "--lens", "5,2", "--pair", "3,2"]),
        ok(&["model", "--lens", "9,2", "--weights", "4,-3"]),
    ];
    let mut seen = 0;
    for out in &outputs {
        for word in out.split_whitespace() {
            if word.starts_with("M(") {
                let again = SeifertFibration::parse(word).unwrap().to_string();
                assert_eq!(again, word);
                seen += 1;
            }
        }
    }
    assert!(seen > 20);
}

#[test]
fn binary_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_seifert-lens"))
        .args(["recognize", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"M(0;(5,-1),(3,1))\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "L(2,1)");
}

#[test]
fn int_guard_reports_overflow() {
    let bin = env!("CARGO_BIN_EXE_seifert-lens");
    let args = ["construct", "--lens", "7,2", "--weights", "5,2"];
    let plain = Command::new(bin).args(args).output().unwrap();
    assert_eq!(plain.status.code(), Some(0));

    let guarded = Command::new(bin)
        .args(args)
        .env("SEIFERT_MAX_INT_GUARD", "20")
        .output()
        .unwrap();
    assert_eq!(guarded.status.code(), Some(1));
    let stderr = String::from_utf8(guarded.stderr).unwrap();
    assert!(stderr.contains("overflow"), "{stderr}");
}
