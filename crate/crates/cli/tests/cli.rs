use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_circum-turan"))
        .args(args)
        .env_remove("CIRCUM_TURAN_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.unwrap_or("").as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.extend(["--format", "json"]);
    let o = run(&all, None);
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

#[test]
fn exval_examples() {
    let v = json(&["exval", "cycles", "9", "5", "4"]);
    assert_eq!(v["value"], 15);
    assert_eq!(v["status"], "Exact");
    assert_eq!(v["achiever_names"][0], "G1(9,5)");

    let v = json(&["exval", "paths", "9", "5", "3"]);
    assert_eq!(
        (v["value"].as_u64(), v["status"].as_str()),
        (Some(8), Some("Exact"))
    );

    let v = json(&["exval", "cycles", "12", "9", "4"]);
    assert_eq!(v["status"], "LowerBoundOnly");
    assert_eq!(v["value"], 36);

    let o = run(&["exval", "cycles", "5", "7", "3"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("requires 3 <= r < k <= n"));
}

#[test]
fn exval_csv_parses() {
    let o = run(
        &["exval", "cycles2conn", "9", "7", "5", "--format", "csv"],
        None,
    );
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let headers = rdr.headers().unwrap().clone();
    let row = rdr.records().next().unwrap().unwrap();
    let value = headers.iter().position(|h| h == "value").unwrap();
    assert_eq!(&row[value], "21");
}

#[test]
fn construct_and_check_round_trip() {
    let o = run(&["construct", "F", "13", "7", "5", "--verify"], None);
    assert!(o.status.success());
    let g6 = stdout(&o);
    let v = json(&["construct", "F", "13", "7", "5", "--verify"]);
    assert_eq!(v["edges"], 29);
    assert_eq!(v["verified"], true);

    let o = run(
        &["check", "--family", "K5,C>=7", "--expect-free"],
        Some(&g6),
    );
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "free");

    let k23 = stdout(&run(&["construct", "turan", "5", "2"], None));
    assert_eq!(k23.trim(), "DFw");

    let v = json(&["construct", "G2", "100", "9", "4", "--verify"]);
    assert_eq!(v["edges"], 388);
    let g2 = stdout(&run(&["construct", "G2", "12", "9", "4"], None));
    let o = run(&["check", "--family", "K4,C>=9"], Some(&g2));
    assert_eq!(stdout(&o).trim(), "free");
}

#[test]
fn construct_usage_errors() {
    assert_eq!(
        run(&["construct", "F", "13", "7"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["construct", "nope", "3"], None).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["construct", "G2", "12", "9", "7"], None)
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn check_verdicts_and_errors() {
    let o = run(&["check", "--family", "K4,C>=9"], Some("C~\n"));
    assert_eq!(stdout(&o).trim(), "violation clique 0 1 2 3");
    assert!(o.status.success());
    let o = run(
        &["check", "--family", "K4,C>=9", "--expect-free"],
        Some("C~\n"),
    );
    assert_eq!(o.status.code(), Some(1));

    let o = run(&["check", "--family", "K4,C>=9"], Some("C~\nbad!!\n"));
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));

    let o = run(
        &["check", "--family", "K3,P4", "--format", "json"],
        Some("Bo\nC~\n"),
    );
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["verdict"], "free");
    assert_eq!(v[1]["verdict"], "violation");

    let o = run(&["check", "--family", "K1,C>=3"], Some(""));
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn oracle_examples() {
    let v = json(&["oracle", "9", "--family", "K4,C>=5"]);
    assert_eq!(v["result"]["max_edges"], 15);
    assert_eq!(v["formula"]["value"], 15);
    assert_eq!(v["verdict"], "MATCH");

    let v = json(&["oracle", "8", "--family", "K3,C>=5"]);
    assert_eq!(v["verdict"], "NOT-APPLICABLE");
    assert_eq!(v["formula"]["status"], "LowerBoundOnly");

    let o = run(&["oracle", "6", "--family", "K3,C>=4"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("oracle:") && text.contains(" 5\n"));
    assert!(text.contains("MATCH"));

    let v = json(&[
        "oracle",
        "9",
        "--family",
        "K5,C>=7",
        "--connectivity",
        "two_connected",
        "--workers",
        "1",
    ]);
    assert_eq!(v["result"]["max_edges"], 21);
    assert_eq!(v["verdict"], "MATCH");
}

#[test]
fn oracle_budget_and_cap() {
    let v = json(&["oracle", "9", "--family", "K4,C>=5", "--budget", "1000"]);
    assert_eq!(v["result"]["complete"], false);
    assert_eq!(v["verdict"], "INCOMPLETE");
    assert_eq!(run(&["oracle", "11"], None).status.code(), Some(2));
    let v = json(&[
        "oracle",
        "12",
        "--family",
        "K3,C>=5",
        "--lower-bound",
        "--seed",
        "1",
    ]);
    assert_eq!(v["result"]["complete"], false);
    assert!(v["result"]["max_edges"].as_u64().unwrap() >= 11);
}

#[test]
fn audit_passes() {
    let o = run(&["audit", "--k", "5..12", "--n-max", "80"], None);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).lines().filter(|l| l.contains(" pass")).count(),
        10
    );
    let v = json(&["audit", "--k", "5..8", "--n-max", "40"]);
    assert!(v.as_array().unwrap().iter().all(|r| r["failed"] == 0));
}

#[test]
fn tables() {
    let o = run(
        &[
            "table", "cycles", "--k", "7", "--r", "5", "--n", "7..30", "--format", "csv",
        ],
        None,
    );
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    let values: Vec<u64> = rdr
        .records()
        .map(|r| r.unwrap()[3].parse().unwrap())
        .collect();
    assert_eq!(values.len(), 24);
    assert!(values.windows(2).all(|w| w[0] <= w[1]));

    let v = json(&[
        "table",
        "cycles2conn",
        "--k",
        "8",
        "--r",
        "5",
        "--n",
        "8..40",
    ]);
    let rows = v.as_array().unwrap();
    let cross: Vec<&Value> = rows.iter().filter(|r| r["crossover"] == true).collect();
    assert_eq!(cross.len(), 1);
    let first = rows
        .iter()
        .position(|r| r["g_2"].as_u64() <= r["g_t"].as_u64())
        .unwrap();
    assert_eq!(rows[first]["crossover"], true);

    assert_eq!(
        run(
            &["table", "paths", "--k", "6", "--r", "4", "--n", "3..9"],
            None
        )
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn output_file() {
    let dir = std::env::temp_dir().join(format!("circum-turan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("ex.json");
    let o = run(
        &[
            "exval",
            "cycles",
            "9",
            "5",
            "4",
            "--format",
            "json",
            "--output",
            path.to_str().unwrap(),
        ],
        None,
    );
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["value"], 15);
    std::fs::remove_dir_all(dir).unwrap();
}
