//! Process-level tests of the halinpack binary: exit codes, JSON round-trips,
//! and the color -> verify pipeline.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn halinpack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_halinpack"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, content: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn gen_export_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let gen = halinpack(&["gen", "--internal", "5", "--seed", "42"]);
    assert_eq!(gen.status.code(), Some(0));
    let graph_json = stdout_str(&gen);
    let path = write(dir.path(), "g.json", &graph_json);
    let export = halinpack(&["export", "--format", "json", "--graph", &path]);
    assert_eq!(export.status.code(), Some(0));
    assert_eq!(stdout_str(&export), graph_json);
}

#[test]
fn solve_exit_codes_match_status() {
    let dir = tempfile::tempdir().unwrap();
    let g1 = stdout_str(&halinpack(&["gen", "--name", "G1"]));
    let path = write(dir.path(), "g1.json", &g1);

    let unsat = halinpack(&["solve", "--schedule", "1-1-3-3", "--graph", &path]);
    assert_eq!(unsat.status.code(), Some(3));
    let doc: Value = serde_json::from_str(&stdout_str(&unsat)).unwrap();
    assert_eq!(doc["status"], "Unsat");
    assert_eq!(doc["format_version"], 1);

    let sat = halinpack(&["solve", "--schedule", "1-1-2-3", "--graph", &path]);
    assert_eq!(sat.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&stdout_str(&sat)).unwrap();
    assert_eq!(doc["status"], "Sat");
    assert!(doc["coloring"].is_object());

    let unknown = halinpack(&[
        "solve",
        "--schedule",
        "1-1-3-3",
        "--graph",
        &path,
        "--node-limit",
        "2",
    ]);
    assert_eq!(unknown.status.code(), Some(4));
}

#[test]
fn color_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for (gen_args, schedule, verify_schedule) in [
        (["gen", "--internal", "6", "--seed", "7"], "1123", "1-1-2-3"),
        (["gen", "--internal", "6", "--seed", "8"], "122222", "1-2-2-2-2-2"),
    ] {
        let graph = stdout_str(&halinpack(&gen_args));
        let gpath = write(dir.path(), "graph.json", &graph);
        let colored = halinpack(&["color", "--schedule", schedule, "--in", &gpath]);
        assert_eq!(colored.status.code(), Some(0));
        let cpath = write(dir.path(), "coloring.json", &stdout_str(&colored));
        let verify = halinpack(&[
            "verify",
            "--schedule",
            verify_schedule,
            "--graph",
            &gpath,
            "--coloring",
            &cpath,
        ]);
        assert_eq!(verify.status.code(), Some(0), "{schedule} did not verify");
        let doc: Value = serde_json::from_str(&stdout_str(&verify)).unwrap();
        assert_eq!(doc["valid"], true);
    }
}

#[test]
fn lemma1_verifies_against_tree_distances() {
    let dir = tempfile::tempdir().unwrap();
    let graph = stdout_str(&halinpack(&["gen", "--internal", "5", "--seed", "1"]));
    let gpath = write(dir.path(), "graph.json", &graph);
    let colored = halinpack(&["color", "--schedule", "lemma1", "--in", &gpath]);
    assert_eq!(colored.status.code(), Some(0));
    let cpath = write(dir.path(), "coloring.json", &stdout_str(&colored));
    let verify = halinpack(&[
        "verify",
        "--schedule",
        "1-2-2-2",
        "--graph",
        &gpath,
        "--coloring",
        &cpath,
        "--tree",
    ]);
    assert_eq!(verify.status.code(), Some(0));
}

#[test]
fn invalid_coloring_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let graph = stdout_str(&halinpack(&["gen", "--name", "K4"]));
    let gpath = write(dir.path(), "graph.json", &graph);
    let cpath = write(
        dir.path(),
        "bad.json",
        r#"{"schedule": [1, 1, 2, 3], "colors": {"0": 1, "1": 1, "2": 2, "3": 3}}"#,
    );
    let verify = halinpack(&[
        "verify",
        "--schedule",
        "1-1-2-3",
        "--graph",
        &gpath,
        "--coloring",
        &cpath,
    ]);
    assert_eq!(verify.status.code(), Some(3));
    let doc: Value = serde_json::from_str(&stdout_str(&verify)).unwrap();
    assert_eq!(doc["valid"], false);
    assert!(!doc["violations"].as_array().unwrap().is_empty());
}

#[test]
fn usage_and_data_errors() {
    let dir = tempfile::tempdir().unwrap();
    // Unknown vertex in a coloring is a usage-class error.
    let graph = stdout_str(&halinpack(&["gen", "--name", "K4"]));
    let gpath = write(dir.path(), "graph.json", &graph);
    let cpath = write(
        dir.path(),
        "bad.json",
        r#"{"schedule": [1, 2], "colors": {"99": 1}}"#,
    );
    let verify = halinpack(&[
        "verify",
        "--schedule",
        "1-2",
        "--graph",
        &gpath,
        "--coloring",
        &cpath,
    ]);
    assert_eq!(verify.status.code(), Some(64));

    // Structurally bad graph: degree-2 tree vertex.
    let bad = write(
        dir.path(),
        "bad_graph.json",
        r#"{"tree_edges": [[0,1],[1,2],[1,3],[0,4]], "cycle": [2,3,4]}"#,
    );
    let color = halinpack(&["color", "--schedule", "1123", "--in", &bad]);
    assert_eq!(color.status.code(), Some(65));

    // Unknown flags are usage errors.
    let nonsense = halinpack(&["solve", "--no-such-flag"]);
    assert_eq!(nonsense.status.code(), Some(64));

    // Named instances reject unknown names.
    let unknown = halinpack(&["gen", "--name", "nosuch"]);
    assert_eq!(unknown.status.code(), Some(64));
}

#[test]
fn enum_streams_one_json_per_line() {
    let out = halinpack(&["enum", "--max", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3); // K4, prism6, and the order-8 instance
    for line in lines {
        let doc: Value = serde_json::from_str(line).unwrap();
        assert!(doc["tree_edges"].is_array());
        assert!(doc["cycle"].is_array());
    }
}

#[test]
fn export_dot_styles() {
    let dir = tempfile::tempdir().unwrap();
    let graph = stdout_str(&halinpack(&["gen", "--name", "prism6"]));
    let gpath = write(dir.path(), "graph.json", &graph);
    let colored = stdout_str(&halinpack(&["color", "--schedule", "1123", "--in", &gpath]));
    let cpath = write(dir.path(), "coloring.json", &colored);
    let dot = halinpack(&[
        "export",
        "--format",
        "dot",
        "--graph",
        &gpath,
        "--coloring",
        &cpath,
    ]);
    assert_eq!(dot.status.code(), Some(0));
    let text = stdout_str(&dot);
    assert!(text.starts_with("graph halin {"));
    assert_eq!(text.matches("style=dashed").count(), 4);
    assert_eq!(text.matches(" -- ").count(), 9);
    assert!(text.contains("1'") || text.contains("\\n2") || text.contains("\\n3"));
}

#[test]
fn survey_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("rows.csv");
    let run = halinpack(&[
        "survey",
        "--max",
        "8",
        "--schedules",
        "1-1-2-3,1-2-2-2-2-2",
        "--mode",
        "crosscheck",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(run.status.code(), Some(0));
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("graph_id,n,schedule,status,elapsed_ms"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().all(|r| r.contains("ConstructiveValid")));
}
