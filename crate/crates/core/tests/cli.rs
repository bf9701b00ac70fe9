use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn demazure(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_demazure"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn char_json_worked_example() {
    let o = demazure(&[
        "char",
        "--algebra",
        "A1^1",
        "--level",
        "1",
        "--coweight",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["algebra"], "A1^1");
    assert_eq!(v["level"], 1);
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["weight"], serde_json::json!([-1]));
    assert_eq!(terms[1]["mult"], 1);
}

#[test]
fn tsv_and_json_agree() {
    let base = [
        "char",
        "--algebra",
        "C2",
        "--level",
        "2",
        "--coweight",
        "1,1",
    ];
    let json = demazure(&[&base[..], &["--format", "json"]].concat());
    let tsv = demazure(&[&base[..], &["--format", "tsv"]].concat());
    let v: Value = serde_json::from_str(&stdout(&json)).unwrap();
    let from_json: BTreeSet<(Vec<i64>, i64)> = v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| {
            let w = t["weight"]
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.as_i64().unwrap())
                .collect();
            (w, t["mult"].as_i64().unwrap())
        })
        .collect();
    let from_tsv: BTreeSet<(Vec<i64>, i64)> = stdout(&tsv)
        .lines()
        .map(|l| {
            let mut xs: Vec<i64> = l.split('\t').map(|x| x.parse().unwrap()).collect();
            let m = xs.pop().unwrap();
            (xs, m)
        })
        .collect();
    assert_eq!(from_json.len(), v["terms"].as_array().unwrap().len());
    assert_eq!(from_json, from_tsv);
}

#[test]
fn decompose_and_word() {
    let o = demazure(&[
        "decompose",
        "--algebra",
        "C2",
        "--level",
        "1",
        "--coweight",
        "1,0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let dims: i64 = v["parts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| p["dim"].as_i64().unwrap())
        .sum();
    assert_eq!(dims, 11);
    let o = demazure(&["word", "--algebra", "A1^1", "--coweight", "2"]);
    assert_eq!(stdout(&o).trim(), r#"{"letters":[1,0],"sigma":"id"}"#);
}

#[test]
fn verify_reports_and_exit_codes() {
    let o = demazure(&[
        "verify",
        "thm1",
        "--algebra",
        "C2",
        "--level",
        "1",
        "--parts",
        "1,0;0,1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["lhs"]["dim"], 55);
    assert!(v.get("elapsed_ms").is_none());

    let o = demazure(&[
        "verify",
        "thm2",
        "--algebra",
        "C2",
        "--node",
        "1",
        "--level",
        "1",
        "--timing",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["rhs"]["dim"], 11);
    assert!(v.get("elapsed_ms").is_some());

    let o = demazure(&[
        "verify",
        "thm2",
        "--algebra",
        "E8",
        "--node",
        "1",
        "--level",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("not covered"));

    let o = demazure(&[
        "limit",
        "--algebra",
        "C2",
        "--level",
        "1",
        "--lambda",
        "1,0",
        "-n",
        "2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lhs"]["dim"], 484);
}

#[test]
fn diagnostics_are_distinct() {
    let cases: [(&[&str], &str); 5] = [
        (
            &["char", "--algebra", "Q3", "--level", "1", "--coweight", "1"],
            "column 1",
        ),
        (
            &[
                "char",
                "--algebra",
                "A2",
                "--level",
                "1",
                "--coweight",
                "1,-1",
            ],
            "not dominant",
        ),
        (
            &["char", "--algebra", "A2", "--level", "1", "--coweight", "1"],
            "expected 2",
        ),
        (
            &[
                "verify",
                "thm1",
                "--algebra",
                "A2",
                "--level",
                "1",
                "--parts",
                "1,0;0,y",
            ],
            "--parts: column 7",
        ),
        (
            &[
                "verify",
                "thm2",
                "--algebra",
                "A2",
                "--node",
                "5",
                "--level",
                "1",
            ],
            "out of range",
        ),
    ];
    for (args, needle) in cases {
        let o = demazure(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(needle), "{args:?}: {err}");
    }
    assert_eq!(demazure(&["bogus"]).status.code(), Some(2));
    assert_eq!(demazure(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_all_is_deterministic() {
    let run = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_demazure"))
            .args(["verify", "all", "--max-rank", "2", "--max-level", "1"])
            .env("DEMAZURE_WORKERS", workers)
            .output()
            .unwrap()
    };
    let a = run("1");
    let b = run("4");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let lines = stdout(&a);
    assert!(lines.lines().count() > 10);
    for l in lines.lines() {
        let v: Value = serde_json::from_str(l).unwrap();
        assert_eq!(v["status"], "pass", "{l}");
    }
}
