use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn mi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mi")).args(args).output().unwrap()
}

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("corpus")
        .join(name)
        .to_str()
        .unwrap()
        .to_string()
}

fn write_temp(dir: &tempfile::TempDir, name: &str, contents: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn bipartite_report_matches_golden() {
    let out = mi(&["solve", &corpus("bipartite.json")]);
    assert_eq!(out.status.code(), Some(0));
    let golden = include_str!("golden/bipartite_solve.json");
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn stats_file_equals_stdout() {
    let dir = tempfile::tempdir().unwrap();
    let stats = dir.path().join("stats.json");
    let out = mi(&[
        "solve",
        &corpus("rainbow_triangle.json"),
        "--stats",
        stats.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read(&stats).unwrap(), out.stdout);
}

#[test]
fn uniform_pair_never_builds_exchange_arcs() {
    let out = mi(&["solve", &corpus("uniform_4_2_vs_4_3.json"), "--check-bounds"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["solution_size"], 2);
    for side in ["matroid1", "matroid2"] {
        assert_eq!(report["calls"][side]["case1"], 0);
        assert_eq!(report["calls"][side]["case2"], 0);
    }
}

#[test]
fn all_flags_pass_on_small_corpus_instance() {
    let out = mi(&[
        "solve",
        &corpus("triangle_vs_uniform.json"),
        "--baseline",
        "--check-bounds",
        "--axiom-check",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["failures"], serde_json::json!([]));
}

#[test]
fn verify_reports_agreement() {
    let out = mi(&["verify", &corpus("rainbow_triangle.json")]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "solver: 2, brute force: 2, certificate: 2\n"
    );
}

#[test]
fn verify_refuses_large_instances() {
    let dir = tempfile::tempdir().unwrap();
    let out = mi(&["gen", "--family", "uniform_pair", "--n", "25", "--seed", "1"]);
    let path = write_temp(&dir, "big.json", &String::from_utf8(out.stdout).unwrap());
    let out = mi(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_inputs_exit_with_code_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("not_json.json", "{"),
        (
            "unknown_type.json",
            r#"{"n": 2, "matroid1": {"type": "bogus"}, "matroid2": {"type": "uniform", "n": 2, "k": 1}}"#,
        ),
        (
            "mismatch.json",
            r#"{"n": 3, "matroid1": {"type": "uniform", "n": 3, "k": 1}, "matroid2": {"type": "uniform", "n": 4, "k": 1}}"#,
        ),
        (
            "bad_edge.json",
            r#"{"n": 1, "matroid1": {"type": "graphic", "vertex_count": 2, "edges": [[0, 5]]}, "matroid2": {"type": "uniform", "n": 1, "k": 1}}"#,
        ),
    ];
    for (name, text) in cases {
        let path = write_temp(&dir, name, text);
        let out = mi(&["solve", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}");
        assert!(!out.stderr.is_empty(), "{name}");
    }
    let missing = mi(&["solve", dir.path().join("absent.json").to_str().unwrap()]);
    assert_eq!(missing.status.code(), Some(2));
    let family = mi(&["gen", "--family", "nope", "--n", "3", "--seed", "1"]);
    assert_eq!(family.status.code(), Some(2));
}

#[test]
fn ground_size_mismatch_is_named() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_temp(
        &dir,
        "mismatch.json",
        r#"{"n": 3, "matroid1": {"type": "uniform", "n": 3, "k": 1}, "matroid2": {"type": "uniform", "n": 4, "k": 1}}"#,
    );
    let out = mi(&["solve", path.to_str().unwrap()]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("ground size mismatch"));
}

#[test]
fn gen_is_deterministic_and_solvable() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.json");
    let a = mi(&["gen", "--family", "graphic_partition", "--n", "30", "--seed", "9"]);
    let b = mi(&[
        "gen",
        "--family",
        "graphic_partition",
        "--n",
        "30",
        "--seed",
        "9",
        "--out",
        file.to_str().unwrap(),
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(b.status.code(), Some(0));
    assert_eq!(std::fs::read(&file).unwrap(), a.stdout);
    let other = mi(&["gen", "--family", "graphic_partition", "--n", "30", "--seed", "10"]);
    assert_ne!(other.stdout, a.stdout);
    assert_eq!(
        mi(&["solve", file.to_str().unwrap(), "--check-bounds"]).status.code(),
        Some(0)
    );
}

#[test]
fn budget_flag_fails_when_exceeded() {
    let path = corpus("partition_matching-n16-s113.json");
    assert_eq!(mi(&["solve", &path, "--budget", "1000"]).status.code(), Some(0));
    let out = mi(&["solve", &path, "--budget", "0.0001"]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_ne!(report["failures"], serde_json::json!([]));
}

#[test]
fn bench_writes_csv() {
    let dir = tempfile::tempdir().unwrap();
    let config = write_temp(
        &dir,
        "bench.json",
        r#"{"runs": [{"family": "partition_matching", "n": [20, 40], "seeds": [1, 2]}]}"#,
    );
    let csv_path = dir.path().join("out.csv");
    let out = mi(&[
        "bench",
        "--config",
        config.to_str().unwrap(),
        "--out",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&csv_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "family,n,seed,r,p,calls_matroid1,calls_matroid2,total_calls,sum_path_length,total_length_bound,\
         augmentations,shortcut_additions,budget_ratio,certificate_ok,length_bounds_ok"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 4);
    assert!(rows
        .iter()
        .all(|r| r.starts_with("partition_matching,") && r.ends_with(",true,true")));
}
