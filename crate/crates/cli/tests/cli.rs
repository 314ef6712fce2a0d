use std::process::Command as Process;

use proptest::prelude::*;
use serde_json::json;

use verma_cli::{emit, run, Command, Format, Job, Report};

fn bin(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_verma")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

fn first_line(s: &str) -> &str {
    s.lines().next().unwrap_or("")
}

fn squash(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

#[test]
fn u_prime_rows() {
    let rows = [
        (vec!["--p", "1", "--hW", "0", "--c-sym"], "W(-1).v"),
        (vec!["--p", "2", "--symbolic", "hW"], "(W(-2) - 3/(4*hW) W(-1)^2).v"),
        (vec!["--p", "3", "--symbolic", "hW"], "(W(-3) - 2/hW W(-2)W(-1) + 1/hW^2 W(-1)^3).v"),
        (
            vec!["--p", "4", "--symbolic", "hW"],
            "(W(-4) - 5/(2*hW) W(-3)W(-1) - 15/(16*hW) W(-2)^2 + 125/(32*hW^2) W(-2)W(-1)^2 - 375/(256*hW^3) W(-1)^4).v",
        ),
    ];
    for (args, expect) in rows {
        let mut all = vec!["singular", "--algebra", "w22"];
        all.extend(args);
        let (code, out, _) = bin(&all);
        assert_eq!(code, 0);
        assert_eq!(first_line(&out), expect);
    }
}

#[test]
fn u_prime_latex_cell() {
    let (code, out, _) = bin(&["singular", "--p", "3", "--symbolic", "hW", "--format", "latex"]);
    assert_eq!(code, 0);
    let cell = r"\left(  W_{-3}-\frac{2}{h_{W}}W_{-2}W_{-1}+\frac{1}{h_{W}^{2}
}W_{-1}^{3}\right)  v";
    let row = out.lines().find(|l| l.contains("W_{-3}")).unwrap();
    assert!(row.starts_with("$c=-3h_{W}$ & $"));
    assert!(squash(row).contains(&squash(cell)));
}

#[test]
fn subsingular_example() {
    let (code, out, _) = bin(&["subsingular", "--c-sym", "--h", "-1/2", "--hW", "0", "--p", "1", "--r", "2"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "(L(-1)^2 + 6/c W(-2)).v"), "{out}");
}

#[test]
fn subsingular_defaults_to_the_necessary_h() {
    let job = Job::new(Command::Subsingular).with("p", 2).with("r", 1).with("symbolic", "hW");
    let report = run(&job).unwrap();
    assert_eq!(report.results["weight"]["h"], "hW + 9/4");
    assert_eq!(report.results["weight"]["c"], "-8*hW");
    assert_eq!(report.results["found"], true);
}

#[test]
fn empty_singular_space() {
    let job = Job::new(Command::Singular).with("c", 1).with("h", "1/3").with("hW", 1).with("level", 2);
    let report = run(&job).unwrap();
    assert_eq!(report.results, json!({ "vectors": [] }));
}

#[test]
fn character_text() {
    let (code, out, _) = bin(&["character", "--order", "5"]);
    assert_eq!(code, 0);
    assert_eq!(first_line(&out), "V: 1 + 2q + 5q^2 + 10q^3 + 20q^4 + 36q^5");
}

#[test]
fn character_quotients() {
    let job = Job::new(Command::Character).with("p", 1).with("r", 1).with("order", 4);
    let text = emit(&run(&job).unwrap(), Format::Text);
    assert!(text.contains("L': 1 + q + 3q^2 + 5q^3 + 10q^4"), "{text}");
}

#[test]
fn scan_example() {
    let (code, out, _) = bin(&["scan", "--pmax", "3", "--rmax", "3", "--offsets", "1/3,-2"]);
    assert_eq!(code, 0);
    assert!(out.contains("all pass: true"), "{out}");
    assert_eq!(out.lines().filter(|l| l.ends_with(" true") && !l.starts_with("all")).count(), 9);
}

#[test]
fn scan_is_independent_of_the_worker_count() {
    let args = ["scan", "--pmax", "2", "--rmax", "2", "--offsets", "1", "--format", "json"];
    let run_with = |n: &str| {
        let out = Process::new(env!("CARGO_BIN_EXE_verma")).args(args).env("VERMA_WORKERS", n).output().unwrap();
        assert!(out.status.success());
        out.stdout
    };
    assert_eq!(run_with("1"), run_with("4"));
}

#[test]
fn tensor_checks() {
    let (code, out, _) = bin(&[
        "tensor", "--c", "1", "--h", "17/8", "--hW", "-1/8", "--alpha", "0", "--beta", "1/2", "--check", "-1,0,1",
    ]);
    assert_eq!(code, 0);
    assert!(out.contains("verdict: Irreducible"), "{out}");
    assert_eq!(out.matches(": true").count(), 3, "{out}");
}

#[test]
fn exit_codes() {
    assert_eq!(bin(&["subsingular", "--p", "0", "--r", "1", "--hW", "1"]).0, 2);
    assert_eq!(bin(&["classify", "--c", "1", "--h", "0"]).0, 2);
    assert_eq!(bin(&["singular", "--p", "2", "--hW", "x"]).0, 2);
    assert_eq!(bin(&["tensor", "--c", "1", "--h", "0", "--hW", "0"]).0, 2);
    let unknown =
        ["hv-decide", "--c", "1", "--cLI", "1", "--h", "0", "--hI", "3", "--alpha", "0", "--beta", "0", "--F", "-1"];
    let (code, out, _) = bin(&unknown);
    assert_eq!(code, 3);
    assert!(out.contains("verdict: Unknown"));
}

#[test]
fn validation() {
    let job = Job::new(Command::Character).with("alpha", 0);
    assert!(run(&job).is_err());
    let job = Job::new(Command::Classify).with("symbolic", "a,b,c,d");
    assert!(run(&job).is_err());
    assert!(run(&Job::new(Command::Tensor)).is_err());
}

fn jobs() -> Vec<Job> {
    vec![
        Job::new(Command::Singular).with("p", 3).with("symbolic", "hW"),
        Job::new(Command::Subsingular).with("p", 1).with("r", 2).with("hW", 0).with("symbolic", "c"),
        Job::new(Command::Classify).with("c", 1).with("h", "17/8").with("hW", "-1/8"),
        Job::new(Command::Character).with("p", 2).with("r", 2),
        Job::new(Command::Tensor).with("c", 1).with("h", 0).with("hW", 0).with("alpha", 0).with("beta", 1),
        Job::new(Command::HvDecide)
            .with("c", 1)
            .with("cLI", 2)
            .with("h", 0)
            .with("hI", 4)
            .with("alpha", "1/2")
            .with("beta", 0),
        Job::new(Command::Scan).with("pmax", 2).with("rmax", 1).with("offsets", "1/3"),
    ]
}

#[test]
fn json_round_trip() {
    for job in jobs() {
        let report = run(&job).unwrap();
        let text = emit(&report, Format::Json);
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, report, "{}", job.command);
    }
}

#[test]
fn json_is_deterministic() {
    for job in jobs() {
        let a = emit(&run(&job).unwrap(), Format::Json);
        let b = emit(&run(&job).unwrap(), Format::Json);
        assert_eq!(a, b, "{}", job.command);
    }
}

#[test]
fn every_format_renders() {
    for job in jobs() {
        let report = run(&job).unwrap();
        for format in [Format::Text, Format::Latex] {
            assert!(!emit(&report, format).trim().is_empty(), "{} {format:?}", job.command);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn character_reports_round_trip(n in -20i64..20, d in 1i64..6, p in 1u32..4, r in 1u32..4, order in 0usize..12) {
        let job = Job::new(Command::Character)
            .with("h", format!("{n}/{d}"))
            .with("p", p)
            .with("r", r)
            .with("order", order);
        let report = run(&job).unwrap();
        let back: Report = serde_json::from_str(&emit(&report, Format::Json)).unwrap();
        prop_assert_eq!(back, report);
    }

    #[test]
    fn tensor_reports_round_trip(a in 0i64..4, b in 0i64..3, sign in prop::bool::ANY) {
        let alpha = format!("{}{a}/2", if sign { "-" } else { "" });
        let job = Job::new(Command::Tensor)
            .with("c", 1).with("h", "-1/2").with("hW", 0)
            .with("alpha", alpha).with("beta", format!("{b}/2"));
        let report = run(&job).unwrap();
        let back: Report = serde_json::from_str(&emit(&report, Format::Json)).unwrap();
        prop_assert_eq!(back, report);
    }
}
