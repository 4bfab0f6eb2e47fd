use std::path::PathBuf;
use std::process::{Command, Output};

use hetcat::render::dot_counts;
use hetcat_cli::report::{RunReport, Status, SCHEMA};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hetcat"))
        .args(args)
        .env_remove("HETCAT_CAPACITY")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

/// Run with `--json -` and parse the report from stdout.
fn report(args: &[&str]) -> (i32, RunReport) {
    let mut all = args.to_vec();
    all.extend(["--json", "-"]);
    let out = run(&all);
    let r = RunReport::from_json(&stdout(&out)).expect("valid report");
    assert_eq!(r.status.exit_code(), code(&out));
    (code(&out), r)
}

fn check<'a>(r: &'a RunReport, name: &str) -> &'a hetcat_cli::report::CheckResult {
    r.checks
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("no check `{name}` in {:?}", r.checks.iter().map(|c| &c.name).collect::<Vec<_>>()))
}

fn artifact<'a>(r: &'a RunReport, name: &str) -> &'a str {
    &r.artifacts.iter().find(|a| a.name == name).expect("artifact present").text
}

#[test]
fn check_finset_passes() {
    let (c, r) = report(&["check", "--instance", "finset:2"]);
    assert_eq!(c, 0);
    assert_eq!(r.schema, SCHEMA);
    assert_eq!(r.checks.len(), 6);
    assert!(r.checks.iter().all(|c| c.passed));
}

#[test]
fn broken_associativity_fails_with_witness() {
    let (c, r) = report(&["check", &fixture("bad_assoc.hc")]);
    assert_eq!(c, 1);
    assert_eq!(r.status, Status::Fail);
    let a = check(&r, "category Bad: associativity");
    assert!(!a.passed);
    assert!(a.witnesses.iter().any(|w| w.contains("[b, a, b]")), "{:?}", a.witnesses);
    assert!(check(&r, "category Bad: left-identity").passed);
}

#[test]
fn file_checks_run_declared_adjunctions() {
    let (c, r) = report(&["check", &fixture("hom_arrow.hc")]);
    assert_eq!(c, 0, "{}", r.summary());
    assert!(check(&r, "adjunction from Hom: het-square").passed);

    let (c, r) = report(&["check", &fixture("arrow.hc")]);
    assert_eq!(c, 1);
    assert!(check(&r, "adjunction from H: left-representable").passed);
    let right = check(&r, "adjunction from H: right-representable");
    assert!(right.witnesses.iter().any(|w| w.contains("`s`")));
}

#[test]
fn hom_het_instance_is_lawful() {
    assert_eq!(code(&run(&["check", "--instance", "hom:finset:1"])), 0);
}

#[test]
fn product_het_is_represented_on_both_sides() {
    let (c, r) = report(&["represent", "--instance", "product-het:1"]);
    assert_eq!(c, 0);
    assert!(check(&r, "left-representable").passed);
    assert!(check(&r, "right-representable").passed);
    // G(X, Y) = X x Y
    let right = artifact(&r, "objects-right");
    assert!(right.contains("(s1,s1) -> s1"), "{right}");
    assert!(right.contains("(s0,s1) -> s0"), "{right}");
}

#[test]
fn hom_het_is_represented_by_the_identity() {
    let (c, r) = report(&["represent", "--instance", "hom:finset:1", "--side", "left"]);
    assert_eq!(c, 0);
    assert_eq!(artifact(&r, "objects-left"), "s0 -> s0\ns1 -> s1\n");
    assert!(r.checks.iter().all(|c| !c.name.starts_with("right")));
}

#[test]
fn forgetful_poset_het_has_no_right_representation() {
    let (c, r) = report(&["represent", "--instance", "poset-forgetful", "--side", "right"]);
    assert_eq!(c, 1);
    let w = &check(&r, "right-representable").witnesses;
    assert!(w.iter().any(|l| l.contains("`s2`")), "{w:?}");
}

#[test]
fn adjoint_synthesis() {
    let (c, r) = report(&["adjoint", "--instance", "product-het:1"]);
    assert_eq!(c, 0, "{}", r.summary());
    assert!(artifact(&r, "adjunction").contains("check adjunction from het"));

    let (c, r) = report(&["adjoint", "--instance", "pacioli:demo"]);
    assert_eq!(c, 0, "{}", r.summary());
    assert!(artifact(&r, "pacioli-unit").contains("[0//"));
    let out = run(&["adjoint", "--instance", "pacioli:demo"]);
    assert!(stdout(&out).contains("Z3 -> P_Z3: 0 -> [0//0] = class 0, 1 -> [0//1] = class 1"));

    let (c, r) = report(&["adjoint", "--instance", "poset-forgetful"]);
    assert_eq!(c, 1);
    assert!(check(&r, "left-representable").passed);
    assert!(!check(&r, "right-representable").passed);
}

#[test]
fn synthesized_documents_check_again() {
    let (_, r) = report(&["adjoint", "--instance", "product-het:1"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("adj.hc");
    std::fs::write(&path, artifact(&r, "adjunction")).unwrap();
    let (c, again) = report(&["check", path.to_str().unwrap()]);
    assert_eq!(c, 0, "{}", again.summary());
    assert!(again.checks.iter().any(|c| c.name.ends_with("het-square")));
}

#[test]
fn gentzen_goes_to_stdout() {
    let out = run(&["adjoint", "--instance", "identity:2chain", "--gentzen"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("==="));
    assert!(text.contains("c0 -> c1"), "{text}");
}

#[test]
fn theorem_holds_on_instances() {
    for inst in ["identity:2chain", "product-het:1", "pacioli:demo"] {
        let (c, r) = report(&["verify-theorem", "--instance", inst]);
        assert_eq!(c, 0, "{inst}: {}", r.summary());
        assert!(!r.checks.is_empty());
    }
}

#[test]
fn dot_output() {
    let out = run(&["emit-dot", &fixture("terminal.hc")]);
    assert_eq!(code(&out), 0);
    assert_eq!(dot_counts(&stdout(&out)), (1, 0));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sq.dot");
    let out = run(&[
        "emit-dot",
        "--instance",
        "product-het:1",
        "--kind",
        "het-square",
        "--dot",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert_eq!(dot_counts(&dot), (4, 5));
    assert_eq!(dot.matches("black:white:black").count(), 3);

    let out = run(&["emit-dot", "--instance", "hom:finset:1", "--kind", "square"]);
    assert_eq!(code(&out), 0);
    assert_eq!(dot_counts(&stdout(&out)), (4, 5));
}

#[test]
fn parse_errors_exit_two_with_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.hc");
    std::fs::write(&path, "category C { objects: a b; }").unwrap();
    let (c, r) = report(&["check", path.to_str().unwrap()]);
    assert_eq!(c, 2);
    assert_eq!(r.status, Status::Error);
    let d = &r.diagnostics[0];
    assert_eq!((d.line, d.column), (1, 25));

    assert_eq!(code(&run(&["check", "/nonexistent/file.hc"])), 2);
    assert_eq!(code(&run(&["check"])), 2);
    assert_eq!(code(&run(&["check", "--instance", "no-such-thing"])), 2);
}

#[test]
fn reports_are_deterministic_and_round_trip() {
    let args = ["represent", "--instance", "poset-forgetful"];
    let (_, a) = report(&args);
    let (_, b) = report(&args);
    assert_eq!(a.without_timings(), b.without_timings());
    assert_eq!(a.without_timings().to_json(), b.without_timings().to_json());
    let back = RunReport::from_json(&a.to_json()).unwrap();
    assert_eq!(back.to_json(), a.to_json());
}

#[test]
fn capacity_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hetcat"))
        .args(["check", "--instance", "finset:3", "--json", "-"])
        .env("HETCAT_CAPACITY", "2")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let r = RunReport::from_json(&stdout(&out)).unwrap();
    assert_eq!(r.inputs.max_objects, Some(2));
    assert!(!r.errors.is_empty());
    assert_eq!(code(&run(&["check", "--instance", "finset:3"])), 0);
}
