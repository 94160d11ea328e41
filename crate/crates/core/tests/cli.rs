//! Command-line behaviour: exit codes, listing, report formats.

use std::process::Command;

use x13::cli::{run, ReportDocument, EXIT_FAILED, EXIT_OK, EXIT_USAGE};
use x13::suites::Status;

fn invoke(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("x13check").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn report(args: &[&str]) -> (i32, ReportDocument) {
    let mut a = args.to_vec();
    a.push("--json");
    let (code, out, _) = invoke(&a);
    (code, serde_json::from_str(&out).expect("valid JSON report"))
}

#[test]
fn list_prints_every_suite() {
    let (code, out, _) = invoke(&["--list"]);
    assert_eq!(code, EXIT_OK);
    let names: Vec<&str> = out.lines().collect();
    assert_eq!(
        names,
        ["group", "symbolic", "modular-equations", "phi-identifications", "singularities", "hauptmodul", "klein-ade"]
    );
}

#[test]
fn usage_errors() {
    for args in [&["--suite", "nope"][..], &["--truncation", "4"], &["--jobs", "0"], &["--bogus"]] {
        let (code, out, err) = invoke(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty());
        assert!(!err.is_empty());
    }
    assert_eq!(invoke(&["--help"]).0, EXIT_OK);
}

#[test]
fn group_suite_reports_its_checks() {
    let (code, doc) = report(&["--suite", "group"]);
    assert_eq!(doc.results.len(), 7);
    // The printed relations that hold only up to −I fail, so the run fails.
    assert_eq!(code, EXIT_FAILED);
    assert_eq!(doc.summary.pass + doc.summary.fail + doc.summary.inconclusive, 7);
    for r in &doc.results {
        assert_eq!(r.truncation, "symbolic");
        assert_eq!(r.status == Status::Fail, r.witness.is_some(), "{}", r.name);
    }
}

#[test]
fn json_round_trips() {
    let (_, doc) = report(&["--suite", "group", "--jobs", "2"]);
    let again: ReportDocument = serde_json::from_str(&doc.to_json().unwrap()).unwrap();
    assert_eq!(doc, again);
    assert_eq!(doc.config.jobs, 2);
    assert_eq!(doc.config.truncation_margin, 30);
}

#[test]
fn modular_equations_pass_at_margin_20() {
    let (code, doc) = report(&["--suite", "modular-equations", "--truncation", "20"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(doc.results.len(), 23);
    assert!(doc.results.iter().all(|r| r.status == Status::Pass));
}

#[test]
fn reports_are_deterministic_apart_from_timing() {
    let strip = |mut d: ReportDocument| {
        d.results.iter_mut().for_each(|r| r.ms = 0);
        d
    };
    let args = ["--suite", "klein-ade", "--suite", "group", "--truncation", "8"];
    let (_, a) = report(&args);
    let (_, b) = report(&[&args[..], &["--jobs", "1"]].concat());
    let (a, mut b) = (strip(a), strip(b));
    b.config.jobs = a.config.jobs;
    assert_eq!(a, b);
    // Suite order, not command-line order.
    assert_eq!(a.results[0].name, "S_squared");
}

#[test]
fn self_test_adds_failing_controls() {
    let (_, doc) = report(&["--suite", "group", "--self-test"]);
    let controls: Vec<_> = doc.results.iter().filter(|r| r.control).collect();
    assert_eq!(controls.len(), 1);
    assert!(controls.iter().all(|r| r.status == Status::Fail && r.witness.is_some() && r.as_expected()));
}

#[test]
fn text_report_ends_with_summary() {
    let (_, out, _) = invoke(&["--suite", "klein-ade", "--truncation", "10"]);
    let last = out.lines().last().unwrap();
    assert_eq!(last, "18 pass, 0 fail, 0 inconclusive");
    assert!(out.lines().next().unwrap().starts_with("PASS"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_x13check");
    let ok = Command::new(bin).args(["--suite", "klein-ade", "--truncation", "10"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    let bad = Command::new(bin).args(["--suite", "nope"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(EXIT_USAGE));
    let failing = Command::new(bin).args(["--suite", "group"]).output().unwrap();
    assert_eq!(failing.status.code(), Some(EXIT_FAILED));
}
