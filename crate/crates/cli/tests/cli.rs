use std::path::{Path, PathBuf};
use std::process::Command;

use tracedcat::model_order::FinPoset;
use tracedcat::Error;
use tracedcat_cli::loaders::{load_group, load_poset};
use tracedcat_cli::{catalogue, render_json, render_text, run_scenario, RunConfig, Scenario};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tracedcat"))
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tracedcat-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn sigma_file_loads_with_both_bounds() {
    let p = load_poset(&data("sigma.poset")).unwrap();
    assert!(p.has_bottom && p.has_top);
    assert_eq!(p.labels, FinPoset::sigma().labels);
    assert!(p.leq(0, 1) && !p.leq(1, 0));
    let d = load_poset(&data("diamond.poset")).unwrap();
    assert_eq!(d.size(), 4);
    assert!(d.leq(0, 3));
}

#[test]
fn group_files_load() {
    let c2 = load_group(&data("c2.group")).unwrap();
    assert_eq!(c2.order(), 2);
    let s3 = load_group(&data("s3.group")).unwrap();
    assert_eq!(s3.order(), 6);
    let nonabelian = (0..6).any(|a| (0..6).any(|b| s3.mul(a, b) != s3.mul(b, a)));
    assert!(nonabelian);
}

#[test]
fn non_associative_table_names_the_triple() {
    let path = scratch("loop.group");
    std::fs::write(&path, "elements: e a b\nmul: e e e\nmul: e a a\nmul: e b b\nmul: a e a\nmul: a a a\nmul: a b e\nmul: b e b\nmul: b a e\nmul: b b b\n").unwrap();
    let err = load_group(&path).unwrap_err().to_string();
    assert!(err.contains("associativ"), "{err}");
    assert!(err.contains('a') && err.contains('b'), "{err}");
}

#[test]
fn poset_errors_carry_line_numbers() {
    let path = scratch("cycle.poset");
    std::fs::write(&path, "elements: x y\nle: x y\nle: y x\n").unwrap();
    match load_poset(&path).unwrap_err() {
        Error::Parse { line, .. } => assert_eq!(line, 3),
        e => panic!("{e}"),
    }
}

#[test]
fn every_listed_scenario_parses_and_round_trips_its_name() {
    let all = catalogue();
    assert!(all.len() >= 25);
    for s in &all {
        let parsed: Scenario = s.name.parse().unwrap();
        assert_eq!(parsed.name(), s.name);
        assert!(!s.note.is_empty());
    }
    for bad in ["nope", "laws:", "laws:hilbert", "group-algebra:c0", "trace-meta:sigma-join", "mainthm-crosscheck:"] {
        assert!(matches!(bad.parse::<Scenario>(), Err(Error::Usage(_))), "{bad}");
    }
}

#[test]
fn reports_are_deterministic() {
    let config = RunConfig {
        cases: Some(20),
        ..RunConfig::seed(7)
    };
    let a = render_json(&run_scenario("group-algebra:c2", &config).unwrap());
    let b = render_json(&run_scenario("group-algebra:c2", &config).unwrap());
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["scenario"], "group-algebra:c2");
    assert_eq!(v["config"]["seed"], 7);
    assert_eq!(v["config"]["cases"], 20);
    assert_eq!(v["expected_match"], true);
    let suite = &v["suites"][0];
    for key in ["name", "verdict", "cases_run", "failures"] {
        assert!(suite.get(key).is_some(), "{key}");
    }
}

#[test]
fn binary_output_is_byte_identical_across_runs() {
    let (p, q) = (scratch("a.json"), scratch("b.json"));
    for out in [&p, &q] {
        let st = bin()
            .args(["run", "two-traces", "--seed", "3", "--cases", "20", "--max-size", "3", "--out"])
            .arg(out)
            .status()
            .unwrap();
        assert!(st.success());
    }
    assert_eq!(std::fs::read(&p).unwrap(), std::fs::read(&q).unwrap());
}

#[test]
fn failures_carry_witnesses() {
    let r = run_scenario("z-not-hopf", &RunConfig::seed(0)).unwrap();
    assert!(r.expected_match);
    let hopf = r.suite("hopf").unwrap();
    assert!(!hopf.passed());
    let first = &hopf.failures[0];
    assert_eq!(first.law, "fusion inverse");
    assert_eq!(first.witness["lhs"], 0);
    let text = render_text(&r);
    assert!(text.contains("pinned: fusion inverse fails at objects (-2, 1)"));
    assert!(text.ends_with("expected_match: true\n"));
}

#[test]
fn unknown_scenario_is_a_usage_error() {
    let out = bin().args(["run", "no-such-scenario"]).output().unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown scenario"));
}

#[test]
fn verdict_mismatch_exits_nonzero_with_diff() {
    // one sampled case is too few to reach the join witness
    let out = bin()
        .args(["run", "mainthm-crosscheck:sigma-join", "--cases", "1", "--format", "text"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("mismatch: traced monad: expected fail, got pass"));
}

#[test]
fn group_file_scenario_and_poset_option() {
    let path = data("s3.group");
    let name = format!("group-algebra:{}", path.display());
    let st = bin().args(["run", &name, "--cases", "5", "--format", "text"]).output().unwrap();
    assert!(st.status.success(), "{}", String::from_utf8_lossy(&st.stderr));
    let st = bin()
        .args(["run", "laws:fincppo", "--cases", "30", "--max-size", "4", "--poset"])
        .arg(data("diamond.poset"))
        .output()
        .unwrap();
    assert!(st.status.success(), "{}", String::from_utf8_lossy(&st.stderr));
}

#[test]
fn list_shows_every_family() {
    let out = bin().arg("list").output().unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    for family in [
        "z-not-hopf",
        "sierpinski-meet",
        "sierpinski-join",
        "group-algebra:",
        "two-traces",
        "diagonal-nonpreservation",
        "pfn-exception",
        "mainthm-crosscheck:",
        "trace-meta:",
        "laws:",
    ] {
        assert!(text.contains(family), "{family}");
    }
}
