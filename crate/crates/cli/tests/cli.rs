use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn leechlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leechlab"))
        .args(args)
        .env_remove("LEECHLAB_WORKERS")
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn tgp_reports_counts() {
    let out = leechlab(&["tgp", "--family", "cycle:10", "--closed-form"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("t_gp: 50"));

    let out = leechlab(&["tgp", "--family", "wheel:6", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "leechlab.report.v1");
    assert_eq!(v["census"]["total"], 20);

    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "edge.txt", "2 1\n0 1\n");
    let out = leechlab(&["tgp", &g]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("t_gp: 1"));
}

#[test]
fn tgp_reads_graph6() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "claw.g6", ">>graph6<<Cs\n");
    let out = leechlab(&["tgp", &g]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    assert!(stdout(&out).contains("t_gp: 6"));
}

#[test]
fn formula_domain_is_a_usage_error() {
    let out = leechlab(&["tgp", "--family", "wheel:4", "--closed-form"]);
    assert_eq!(code(&out), 64);
    assert!(stderr(&out).contains("n >= 5"));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [("1 2 3\n", 0), ("1 2 2\n", 10), ("2 2 2\n", 20), ("1 2\n", 65), ("1 0 3\n", 65)];
    for (labels, expected) in cases {
        let l = write(dir.path(), "labels.txt", labels);
        let out = leechlab(&["verify", "--family", "cycle:3", &l]);
        assert_eq!(code(&out), expected, "{labels:?}: {}", stderr(&out));
    }
    let l = write(dir.path(), "short.txt", "1 2\n");
    let out = leechlab(&["verify", "--family", "cycle:3", &l]);
    let err = stderr(&out);
    assert!(err.contains('2') && err.contains('3'), "{err}");
}

#[test]
fn verify_with_graph_file_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "c4.txt", "# square\n4 4\n0 1\n1 2\n2 3\n0 3\n");
    let l = write(dir.path(), "l.txt", "1 6 2 3\n");
    let out = leechlab(&["verify", &g, &l, "--json"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["report"]["verdict"], "GeodesicLeech");
    assert_eq!(v["report"]["t_gp"], 8);
}

#[test]
fn missing_file_is_unreadable_input() {
    let out = leechlab(&["tgp", "/nonexistent/graph.txt"]);
    assert_eq!(code(&out), 66);
}

#[test]
fn malformed_graph_is_a_data_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "bad.txt", "3 2\n0 1\n");
    assert_eq!(code(&leechlab(&["tgp", &g])), 65);
    let g = write(dir.path(), "loop.txt", "3 1\n1 1\n");
    assert_eq!(code(&leechlab(&["tgp", &g])), 65);
}

#[test]
fn search_c10_is_exhausted() {
    let out = leechlab(&["search", "--family", "cycle:10", "--max-label", "31", "--sum", "85", "--workers", "4"]);
    assert_eq!(code(&out), 30, "{}", stderr(&out));
    assert!(stdout(&out).contains("certificate"));
}

#[test]
fn search_finds_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("w5.txt");
    let out = leechlab(&["search", "--family", "wheel:5", "--output", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let out = leechlab(&["verify", "--family", "wheel:5", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));

    // the text report is itself a valid labeling file
    let out = leechlab(&["search", "--family", "cycle:3"]);
    assert_eq!(code(&out), 0);
    let report = write(dir.path(), "report.txt", &stdout(&out));
    assert_eq!(code(&leechlab(&["verify", "--family", "cycle:3", &report])), 0);
    let labels: Vec<u64> = stdout(&out)
        .lines()
        .find(|l| !l.starts_with('#'))
        .unwrap()
        .split_whitespace()
        .map(|x| x.parse().unwrap())
        .collect();
    let mut sorted = labels.clone();
    sorted.sort_unstable();
    assert_eq!(sorted, vec![1, 2, 3]);
}

#[test]
fn search_presets_and_limits() {
    let out = leechlab(&["search", "--preset", "W7", "--json"]);
    assert_eq!(code(&out), 0);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["reports"][0]["verdict"], "AlmostGeodesicLeech");

    let out = leechlab(&["search", "--family", "cycle:10", "--node-limit", "500"]);
    assert_eq!(code(&out), 41);
    let out = leechlab(&["search", "--family", "cycle:10", "--time-limit", "20ms"]);
    assert_eq!(code(&out), 40);
    let out = leechlab(&["search", "--preset", "C11"]);
    assert_eq!(code(&out), 64);
    let out = leechlab(&["search", "--family", "cycle:4", "--sum", "3"]);
    assert_eq!(code(&out), 64);
}

#[test]
fn workers_come_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_leechlab"))
        .args(["search", "--family", "cycle:4", "--json"])
        .env("LEECHLAB_WORKERS", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["config"]["workers"], 3);
    let out = Command::new(env!("CARGO_BIN_EXE_leechlab"))
        .args(["search", "--family", "cycle:4", "--json", "--workers", "2"])
        .env("LEECHLAB_WORKERS", "3")
        .output()
        .unwrap();
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["config"]["workers"], 2);
}

#[test]
fn feasibility_reports() {
    let out = leechlab(&["feasible", "--family", "knn:3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("378 not divisible by 5"), "{}", stdout(&out));

    let out = leechlab(&["feasible", "--family", "cycle:n", "--range", "3..200"]);
    assert!(stdout(&out).lines().last().unwrap().ends_with("3 4 10"));

    let out = leechlab(&["feasible", "--family", "knn:n", "--range", "1..200", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["feasible"], serde_json::json!([1, 2, 5]));
}

#[test]
fn census_over_bundled_forbidden_subgraphs() {
    let corpus = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/assets/beineke.g6");
    let out = leechlab(&["census", corpus, "--workers", "2"]);
    assert_eq!(code(&out), 0);
    assert!(stderr(&out).contains("leech=8 almost=1"), "{}", stderr(&out));
    let lines: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 10);
    for (i, row) in lines[..9].iter().enumerate() {
        assert_eq!(row["index"], i);
        assert!(row["labels"].is_array());
    }
    assert_eq!(lines[9]["summary"]["leech"], 8);
}

#[test]
fn census_keeps_going_past_bad_lines() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = write(dir.path(), "mixed.g6", "Bw\n!!!\nCs\n");
    let out = leechlab(&["census", &corpus]);
    assert_eq!(code(&out), 0);
    let rows: Vec<Value> = stdout(&out).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows[0]["verdict"], "leech");
    assert_eq!(rows[1]["verdict"], "error");
    assert_eq!(rows[2]["index"], 2);
    assert_eq!(rows[3]["summary"]["error"], 1);
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(code(&leechlab(&["search", "--bogus"])), 64);
    assert_eq!(code(&leechlab(&["tgp", "--family", "hexagon:3"])), 64);
    assert_eq!(code(&leechlab(&["--help"])), 0);
}
