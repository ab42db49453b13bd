use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use cmpreproj::classify::{parse_golden, pattern_matches};
use cmpreproj::DynkinSpec;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_cmpreproj"));
    c.env_remove("CMPREPROJ_SEED");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn examples() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("examples")
}

#[test]
fn table_a4_matches_golden() {
    let o = run(&["table", "A", "4", "--format", "tsv"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let golden_path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/tests/golden/A4.tsv");
    let golden = parse_golden(&std::fs::read_to_string(golden_path).unwrap());
    let spec: DynkinSpec = "A4".parse().unwrap();
    let rows: Vec<(String, String)> = stdout(&o)
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            let f: Vec<&str> = l.split('\t').collect();
            assert_eq!(f.len(), 5, "{l}");
            assert_eq!(f[3], "true", "{l}");
            (f[0].to_string(), f[1].to_string())
        })
        .collect();
    // 15 subsets, 3 of them fixed by the involution
    assert_eq!(rows.len(), 9);
    for (k, p) in &rows {
        assert!(golden.iter().any(|(gk, gp)| gk == k && pattern_matches(&spec, p, gp)), "{k} {p}");
    }
    for (gk, gp) in golden.iter().filter(|(_, p)| !p.contains('*')) {
        assert!(rows.iter().any(|(k, p)| k == gk && pattern_matches(&spec, p, gp)), "{gk} {gp}");
    }
}

#[test]
fn table_d4_is_selfinjective_throughout() {
    let o = run(&["table", "D", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(0, 0, inf): Any choice"), "{out}");
    assert!(out.contains("differs from prediction: none"));
}

#[test]
fn report_worked_example() {
    let o = run(&["report", "A6", "--J", "1,2,3,6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.contains("dim: 21"), "{out}");
    assert!(out.contains("(inf, 2, 0)"), "{out}");
}

#[test]
fn report_special_cases() {
    let out = stdout(&run(&["report", "A1", "--J", "1"]));
    assert!(out.contains("semisimple"), "{out}");
    let out = stdout(&run(&["report", "D5", "--J", "1,2"]));
    assert!(out.contains("selfinjective"), "{out}");
    assert!(out.contains("(0, 0, inf)"), "{out}");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["report", "A6", "--J", "9"][..],
        &["report", "A6", "--J", ""],
        &["report", "X3", "--J", "1"],
        &["report", "A3..A5", "--J", "1"],
        &["--char", "7", "report", "A3", "--J", "1"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn undetermined_exits_3() {
    let o = run(&["--bound", "1", "report", "A6", "--J", "1,2,3,6"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("?>=1"));
}

#[test]
fn certify_json_has_expected_keys() {
    let o = run(&["certify", "A6", "--J", "1,2,3,6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    for key in ["algebra", "conditions", "dims", "notes", "witness_h"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert_eq!(v["dims"]["fidim"], "2");
    assert_eq!(v["dims"]["idim"], "inf");
    for c in ["i", "ii", "iii"] {
        assert_eq!(v["conditions"][c], "pass");
    }
}

#[test]
fn certify_module_reports_failed_condition() {
    let alg = examples().join("nakayama.alg");
    let o = bin().args(["certify-module", alg.to_str().unwrap(), "--W", "nakayama_top.mod,P2,P3,P4"]).output().unwrap();
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("(iii)"), "{}", stderr(&o));
}

#[test]
fn certify_module_from_file() {
    let alg = examples().join("loop_contraction.alg");
    let pass =
        bin().args(["certify-module", alg.to_str().unwrap(), "--W", "I2,loop_contraction_x.mod"]).output().unwrap();
    assert_eq!(pass.status.code(), Some(0), "{}", stderr(&pass));
    assert!(stdout(&pass).contains("result: pass"));
    let fail =
        bin().args(["certify-module", alg.to_str().unwrap(), "--W", "I1,loop_contraction_x.mod"]).output().unwrap();
    assert_eq!(fail.status.code(), Some(1));
    assert!(stderr(&fail).contains("(i)"), "{}", stderr(&fail));
}

#[test]
fn axioms_hold_for_worked_example() {
    let o = run(&["axioms", "A6", "--J", "1,2,3,6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("all hold: yes"));
}

#[test]
fn build_prints_structure() {
    let o = run(&["build", "E6", "--J", "1,2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("dim: 14"), "{out}");
    assert!(out.contains("vertices: 1 2"), "{out}");
}

#[test]
fn output_is_deterministic_and_seed_flag_wins() {
    let args = ["certify", "A5", "--J", "1,2,5", "--format", "json"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let with_env = bin().env("CMPREPROJ_SEED", "7").args(args).output().unwrap();
    let with_flag = run(&["--seed", "7", "certify", "A5", "--J", "1,2,5", "--format", "json"]);
    assert_eq!(with_env.stdout, with_flag.stdout);
    let both = bin()
        .env("CMPREPROJ_SEED", "99")
        .args(["--seed", "7", "certify", "A5", "--J", "1,2,5", "--format", "json"])
        .output()
        .unwrap();
    assert_eq!(both.stdout, with_flag.stdout);
}

#[test]
fn rational_field_agrees_on_small_table() {
    let p = run(&["table", "A", "4", "--format", "tsv"]);
    let q = run(&["--char", "0", "table", "A", "4", "--format", "tsv"]);
    assert_eq!(q.status.code(), Some(0));
    assert_eq!(p.stdout, q.stdout);
}
