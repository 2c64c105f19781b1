use std::path::PathBuf;
use std::process::{Command, Output};

use qhakit::format::parse_structure;
use qhakit::render::{render_run, Format};
use qhakit::suites::{Options, Run, Suite, SuiteOutcome};
use qhakit::{builtin_document, exit_status, EXIT_CHECKS_FAILED, EXIT_PASS, EXIT_UNUSABLE};
use qhakit_core::report::{Check, Report};

fn qhakit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qhakit")).args(args).env_remove("QHAKIT_SEED").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

/// Compares against `tests/golden/{name}`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}; run with UPDATE_GOLDEN=1", path.display()));
    assert_eq!(actual, expected, "{name} differs from its golden copy");
}

#[test]
fn verify_text_report() {
    let o = qhakit(&["verify", "z2_triangular", "--samples", "2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    golden("verify_z2_triangular.txt", &stdout(&o));
}

#[test]
fn verify_structured_report() {
    let o = qhakit(&["verify", "group_zn(2)", "--suite", "axioms", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"][0]["suite"], "axioms");
    golden("verify_group_z2_axioms.json", &text);
}

#[test]
fn compute_reports() {
    let o = qhakit(&["compute", "z2_triangular", "u"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("u = [0, 1]\n"));
    golden("compute_z2_u.txt", &stdout(&o));

    let o = qhakit(&["compute", "semion", "invariants", "-1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    golden("compute_semion_invariants.txt", &stdout(&o));
}

#[test]
fn export_is_canonical() {
    let o = qhakit(&["export", "semion"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    golden("export_semion.json", &text);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("semion.json");
    std::fs::write(&path, &text).unwrap();
    let again = qhakit(&["export", path.to_str().unwrap()]);
    assert_eq!(stdout(&again), text);
}

#[test]
fn unusable_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    let cases: Vec<(Vec<&str>, &str)> = vec![
        (vec!["verify", "no_such_thing"], "not-found error"),
        (vec!["verify", bad.to_str().unwrap()], "syntax error"),
        (vec!["verify", "group_zn(2)", "--suite", "dynamical"], "does not apply"),
        (vec!["verify", "group_zn(2)", "--suite", "qtriangular"], "does not apply"),
        (vec!["compute", "group_zn(2)", "u"], "not applicable"),
        (vec!["compute", "semion", "invariants"], "exponent"),
        (vec!["twist", "semion", "--output", "/dev/null"], "--twist"),
    ];
    for (args, needle) in cases {
        let o = qhakit(&args);
        assert_eq!(o.status.code(), Some(EXIT_UNUSABLE as i32), "{args:?}");
        assert!(stderr(&o).starts_with("qhakit: "), "{args:?}");
        assert!(stderr(&o).contains(needle), "{args:?}: {}", stderr(&o));
        assert!(o.stdout.is_empty(), "{args:?}");
    }
}

#[test]
fn verification_failure_on_load_exits_2() {
    let mut v: serde_json::Value = serde_json::from_str(&stdout(&qhakit(&["export", "semion"]))).unwrap();
    v["phi"][0]["scalar"][0] = serde_json::json!("1/3");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, v.to_string()).unwrap();
    let o = qhakit(&["verify", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("verification error"), "{}", stderr(&o));
    assert!(stderr(&o).contains("pentagon"), "{}", stderr(&o));
}

#[test]
fn reports_are_deterministic() {
    let args = ["verify", "semion", "--suite", "twist", "--samples", "3", "--seed", "11"];
    let a = qhakit(&args);
    let b = qhakit(&args);
    assert_eq!(a.stdout, b.stdout);
    let c = Command::new(env!("CARGO_BIN_EXE_qhakit"))
        .args(["verify", "semion", "--suite", "twist", "--samples", "3"])
        .env("QHAKIT_SEED", "11")
        .output()
        .unwrap();
    assert_eq!(c.stdout, a.stdout);
    assert!(stdout(&a).starts_with("input semion seed 11 samples 3\n"));
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = qhakit(&["verify", "trivial", "--suite", "axioms", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.ends_with("result: pass\n"));
}

#[test]
fn twisting_by_a_twist_and_its_inverse_restores() {
    let dir = tempfile::tempdir().unwrap();
    let p = |n: &str| dir.path().join(n).to_str().unwrap().to_string();
    let o = qhakit(&["twist", "sweedler_h4", "--generator-seed", "5", "--save-twist", &p("f.json"), "--output", &p("tw.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(qhakit(&["verify", &p("tw.json"), "--samples", "1"]).status.success());

    // the twist that undoes f is f^{-1}, as a twist of the twisted structure
    let doc = builtin_document("sweedler_h4").unwrap();
    let q = doc.structure.qha().qba();
    let f = qhakit::format::parse_twist(&std::fs::read_to_string(p("f.json")).unwrap(), q).unwrap();
    let twisted = parse_structure(&std::fs::read_to_string(p("tw.json")).unwrap()).unwrap();
    let inv = f.inverse();
    std::fs::write(p("finv.json"), qhakit::format::serialize_twist(twisted.structure.qha().qba(), &inv)).unwrap();
    let o = qhakit(&["twist", &p("tw.json"), "--twist", &p("finv.json"), "--output", &p("back.json")]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let original = stdout(&qhakit(&["export", "sweedler_h4"]));
    assert_eq!(std::fs::read_to_string(p("back.json")).unwrap(), original);
}

#[test]
fn twisting_by_the_identity_changes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let twist = dir.path().join("one.json");
    std::fs::write(&twist, r#"{"field":{"kind":"rational"},"dimension":2,"f":[{"i":0,"j":0,"scalar":"1"}]}"#).unwrap();
    let out = dir.path().join("out.json");
    let o = qhakit(&["twist", "group_zn(2)", "--twist", twist.to_str().unwrap(), "--output", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(std::fs::read_to_string(&out).unwrap(), stdout(&qhakit(&["export", "group_zn(2)"])));
}

#[test]
fn twisting_by_r_reverifies() {
    let dir = tempfile::tempdir().unwrap();
    for by in ["r", "r-tilde"] {
        let out = dir.path().join(format!("{by}.json"));
        let o = qhakit(&["twist", "semion", "--by", by, "--output", out.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        let v = qhakit(&["verify", out.to_str().unwrap(), "--samples", "2"]);
        assert_eq!(v.status.code(), Some(0), "{}", stdout(&v));
    }
}

#[test]
fn failed_checks_map_to_exit_1() {
    assert_eq!(exit_status(true), EXIT_PASS);
    assert_eq!(exit_status(false), EXIT_CHECKS_FAILED);
    assert_eq!(EXIT_CHECKS_FAILED, 1);
    let mut report = Report::new();
    report.push(Check::from_bool("always-true", true, ""));
    report.push(Check::from_bool("planted-failure", false, "planted"));
    let run = Run {
        input: "planted".into(),
        options: Options::default(),
        outcomes: vec![SuiteOutcome { suite: Suite::Axioms, report, skipped: None }],
    };
    assert!(!run.passed());
    assert_eq!(exit_status(run.passed()), 1);
    let text = render_run(&run, Format::Text);
    assert!(text.contains("suite axioms: 1 of 2 checks passed\n"), "{text}");
    assert!(text.contains("  FAIL planted-failure  planted\n"), "{text}");
    assert!(text.ends_with("result: fail\n"));
    let v: serde_json::Value = serde_json::from_str(&render_run(&run, Format::Structured)).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["suites"][0]["status"], "fail");
}
