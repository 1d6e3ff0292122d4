use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn wsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wsys"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn write_family(dir: &Path, name: &str, family: &[&str], format: &str) -> String {
    let path = dir.join(name);
    let p = path.to_str().unwrap().to_string();
    let mut args = vec!["generate"];
    args.extend_from_slice(family);
    args.extend_from_slice(&["--format", format, "--out", &p]);
    assert!(wsys(&args).status.success());
    p
}

#[test]
fn generate_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let w5 = write_family(dir.path(), "w5.txt", &["wheel", "5"], "edge");
    let w6 = write_family(dir.path(), "w6.json", &["wheel", "6"], "json");
    let disk = write_family(dir.path(), "disk.txt", &["systolic-disk", "2"], "edge");
    assert_eq!(
        json_of(&wsys(&["classify", &w5]))["classification"],
        "weakly_bridged_not_bridged"
    );
    assert_eq!(
        json_of(&wsys(&["classify", &w6]))["classification"],
        "bridged"
    );
    assert_eq!(
        json_of(&wsys(&["classify", &disk]))["classification"],
        "bridged"
    );

    let c6 = write_family(dir.path(), "c6.txt", &["cycle", "6"], "edge");
    let dot = dir.path().join("c6.dot");
    let report = json_of(&wsys(&["classify", &c6, "--dot", dot.to_str().unwrap()]));
    assert_eq!(report["classification"], "not_weakly_bridged");
    assert!(fs::read_to_string(dot).unwrap().contains("fillcolor=red"));
}

#[test]
fn generation_is_deterministic_under_seed() {
    let a = wsys(&[
        "generate",
        "random-filtered",
        "7",
        "0.5",
        "weakly-bridged-not-bridged",
        "--seed",
        "11",
    ]);
    let b = wsys(&[
        "generate",
        "random-filtered",
        "7",
        "0.5",
        "weakly-bridged-not-bridged",
        "--seed",
        "11",
    ]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let g = wsys(&["generate", "grow", "12", "--seed", "3", "--format", "json"]);
    let v: Value = serde_json::from_slice(&g.stdout).unwrap();
    assert_eq!(v["n"], 12);
}

#[test]
fn certificates() {
    let dir = tempfile::tempdir().unwrap();
    let w5 = write_family(dir.path(), "w5.txt", &["wheel", "5"], "edge");
    let lex = json_of(&wsys(&[
        "lexbfs",
        &w5,
        "--root",
        "2",
        "--tie-break",
        "random",
        "--seed",
        "4",
    ]));
    assert_eq!(lex["dismantling"]["first_failure"], Value::Null);
    assert_eq!(lex["combing_violation"], Value::Null);

    let sdn = json_of(&wsys(&["sdn", &w5, "--base", "0,1"]));
    assert_eq!(sdn["holds"], false);
    assert_eq!(sdn["witness"]["sigma"], serde_json::json!([3]));
    assert_eq!(sdn["witness"]["descent"], serde_json::json!([2, 4, 5]));

    let fix = json_of(&wsys(&[
        "fixpoint",
        &w5,
        "--generator",
        "1,2,3,4,0,5",
        "--vertex",
        "0",
    ]));
    assert_eq!(fix["certificate"]["simplex"], serde_json::json!([5]));
    assert_eq!(fix["group_order"], 5);

    let cop = json_of(&wsys(&["copwin", &w5]));
    assert_eq!(cop["cop_win"], true);
    let c4 = write_family(dir.path(), "c4.txt", &["cycle", "4"], "edge");
    let cop = json_of(&wsys(&["copwin", &c4]));
    assert_eq!(cop["cop_win"], false);
    assert_eq!(cop["check"]["escape_verified"], true);
    assert_eq!(json_of(&wsys(&["dismantle", &c4]))["dismantlable"], false);

    let w6 = write_family(dir.path(), "w6.txt", &["wheel", "6"], "edge");
    let round = json_of(&wsys(&["round-audit", &w6]));
    assert_eq!(round["farber_holds"], true);
    assert!(!wsys(&["round-audit", &w5]).status.success());
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.txt");
    fs::write(&bad, "0 1\n1 2\n2 two\n").unwrap();
    let out = wsys(&["classify", bad.to_str().unwrap()]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn suites_report_and_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let run = wsys(&[
        "suite",
        "bfs_counterexample",
        "--quick",
        "--jobs",
        "2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(run.status.success());
    let v: Value = serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
    assert!(!wsys(&["suite", "no_such_suite"]).status.success());
}
