use std::process::{Command, Output};

use serde_json::Value;

fn rainbow_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rainbow-lab"))
        .args(args)
        .env_remove("RAINBOW_LAB_LIMIT")
        .output()
        .expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("json line"))
        .collect()
}

#[test]
fn rb_prints_value_and_regime() {
    let out = rainbow_lab(&["rb", "3", "3", "3"]);
    assert!(out.status.success());
    let v = &json_lines(&out)[0];
    assert_eq!(v["rb"], 5);
    assert_eq!(v["regime"], "MAIN");
}

#[test]
fn extremal_coloring_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (m, n, k) in [("3", "3", "3"), ("4", "5", "4"), ("2", "2", "2")] {
        let path = dir.path().join(format!("c{m}{n}{k}.json"));
        let path = path.to_str().unwrap();
        let out = rainbow_lab(&["build-extremal-coloring", m, n, k, "--output", path]);
        assert!(out.status.success());
        let summary = &json_lines(&out)[0];
        assert_eq!(summary["swapped"], m < n);

        let out = rainbow_lab(&["find-rainbow", "--k", k, "--input", path]);
        assert_eq!(out.status.code(), Some(0));
        assert_eq!(json_lines(&out)[0]["found"], false);
    }
}

#[test]
fn find_rainbow_on_monochromatic_input() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mono.json");
    let colors: Vec<[usize; 3]> = (0..3)
        .flat_map(|a| (0..3).map(move |b| [a, b, 7]))
        .collect();
    let doc = serde_json::json!({ "m": 3, "n": 3, "colors": colors });
    std::fs::write(&path, doc.to_string()).unwrap();
    let path = path.to_str().unwrap();

    let out = rainbow_lab(&["find-rainbow", "--k", "2", "--input", path]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["found"], false);

    let out = rainbow_lab(&["find-rainbow", "--k", "1", "--input", path]);
    let v = &json_lines(&out)[0];
    assert_eq!(v["found"], true);
    assert_eq!(v["matching"].as_array().unwrap().len(), 1);
}

#[test]
fn malformed_inputs_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let partial = dir.path().join("partial.json");
    std::fs::write(
        &partial,
        r#"{"m": 2, "n": 2, "colors": [[0,0,1],[0,1,1],[1,0,2]]}"#,
    )
    .unwrap();
    let out = rainbow_lab(&[
        "find-rainbow",
        "--k",
        "2",
        "--input",
        partial.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let dup = dir.path().join("dup.json");
    std::fs::write(&dup, r#"{"m": 2, "n": 2, "edges": [[0,0],[0,0]]}"#).unwrap();
    let out = rainbow_lab(&["ext", "2", "2", "1", "--input", dup.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn domain_errors_exit_1() {
    assert_eq!(rainbow_lab(&["rb", "3", "3", "4"]).status.code(), Some(1));
    assert_eq!(rainbow_lab(&["ext", "2", "5", "3"]).status.code(), Some(1));
}

#[test]
fn ext_inspects_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    let path = path.to_str().unwrap();
    let out = rainbow_lab(&["build-extremal-graph", "5", "3", "3", "--output", path]);
    assert!(out.status.success());
    assert_eq!(json_lines(&out)[0]["edge_count"], 10);

    let v = &json_lines(&rainbow_lab(&["ext", "5", "3", "3", "--input", path]))[0];
    assert_eq!(v["ext"], 10);
    assert_eq!(v["is_extremal"], true);
    assert_eq!(v["isomorphic_to_canonical"], true);
    assert_eq!(v["witness"], Value::Null);

    let v = &json_lines(&rainbow_lab(&["ext", "5", "3", "2", "--input", path]))[0];
    assert_eq!(v["is_extremal"], false);
    assert_eq!(v["witness"].as_array().unwrap().len(), 2);
}

#[test]
fn verify_reports_agreement() {
    let out = rainbow_lab(&["verify", "--limit", "12", "--jobs", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let rows = json_lines(&out);
    assert!(rows.iter().all(|r| r["agree"] == true));
    let row = |m: u64, n: u64, k: u64| {
        rows.iter()
            .find(|r| r["m"] == m && r["n"] == n && r["k"] == k)
            .unwrap_or_else(|| panic!("missing ({m},{n},{k})"))
    };
    assert_eq!(row(3, 3, 2)["oracle_rb"], 2);
    assert_eq!(row(3, 3, 3)["oracle_rb"], 5);
    assert_eq!(row(4, 3, 3)["formula_rb"], 6);
    assert_eq!(row(4, 3, 3)["oracle_rb"], 6);
}

#[test]
fn limit_from_environment() {
    let run = |limit: &str| {
        Command::new(env!("CARGO_BIN_EXE_rainbow-lab"))
            .args(["oracle", "3", "3", "3"])
            .env("RAINBOW_LAB_LIMIT", limit)
            .output()
            .unwrap()
    };
    assert_eq!(run("8").status.code(), Some(1));
    let ok = run("9");
    assert!(ok.status.success());
    let v = &json_lines(&ok)[0];
    assert_eq!(v["f"], 4);
    assert_eq!(v["rb"], 5);
    assert_eq!(run("nine").status.code(), Some(2));
}
