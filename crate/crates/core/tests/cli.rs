use std::process::{Command, Output};

fn groupring(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_groupring")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_json_has_schema_and_is_deterministic() {
    let a = groupring(&["--json", "analyze", "A4"]);
    assert_eq!(a.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["schema"], 1);
    assert_eq!(v["group"]["order"], 12);
    assert_eq!(v["properties"]["ssn"], true);
    let b = groupring(&["--json", "analyze", "A4"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn exit_codes() {
    assert_eq!(groupring(&["analyze", "Foo("]).status.code(), Some(2));
    assert_eq!(groupring(&["--cap", "10", "analyze", "A4"]).status.code(), Some(3));
    assert_eq!(groupring(&["sweep", "nosuch"]).status.code(), Some(2));
}

#[test]
fn sweep_repunit_rows() {
    let o = groupring(&["--json", "sweep", "repunit", "--n", "2..5", "--max", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r["predicted_one_matrix"] == true));
}

#[test]
fn verify_single_criterion() {
    let o = groupring(&["verify-theorems", "--only", "amitsur"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("PASS [4]")), "{out}");
}

#[test]
fn catalog_lists_names() {
    let o = groupring(&["catalog"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for name in ["A5", "C3^2:C8", "BJ9"] {
        assert!(out.lines().any(|l| l.split_whitespace().next() == Some(name)), "{name}");
    }
}
