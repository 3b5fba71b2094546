//! End-to-end tests of the command-line interface: file round trips,
//! byte-identical reruns, and the exit-code contract.

use std::path::Path;
use std::process::{Command, Output};

fn tdp(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tdp"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn gen_c5k_solve_tw_and_tree_chi() {
    let dir = tempfile::tempdir().unwrap();
    let out = tdp(&["gen", "c5k", "-k", "1", "-o", "g.gr"], dir.path());
    assert!(out.status.success());
    let out = tdp(&["solve", "--param", "tw", "-i", "g.gr"], dir.path());
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "4");
    let out = tdp(&["solve", "--param", "tree-chi", "-i", "g.gr"], dir.path());
    assert_eq!(stdout(&out).trim(), "2");
    let out = tdp(&["solve", "--param", "tree-alpha", "-i", "g.gr"], dir.path());
    assert_eq!(stdout(&out).trim(), "2");
}

#[test]
fn gen_output_round_trips_exactly() {
    let dir = tempfile::tempdir().unwrap();
    assert!(tdp(&["gen", "burling", "-n", "3", "-o", "g.gr", "--family", "f.txt", "--td", "d.td"], dir.path())
        .status
        .success());
    let text = std::fs::read_to_string(dir.path().join("g.gr")).unwrap();
    let g = tdp_core::fmt::parse_gr(&text).unwrap();
    assert_eq!(g.n(), 13);
    assert_eq!(tdp_core::fmt::write_gr(&g), text, "round trip is bit-exact");
    let (td, host) = tdp_core::fmt::parse_td(&std::fs::read_to_string(dir.path().join("d.td")).unwrap()).unwrap();
    assert_eq!(host, 13);
    assert!(td.validate(&g).is_valid());
    let family =
        tdp_core::fmt::parse_family(&std::fs::read_to_string(dir.path().join("f.txt")).unwrap()).unwrap();
    assert_eq!(family.len(), 8);
    assert!(family.all_stable(&g));
}

#[test]
fn identical_invocations_produce_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    assert!(tdp(&["gen", "crown", "-n", "5", "-o", "a.gr", "--td", "a.td"], dir.path()).status.success());
    assert!(tdp(&["gen", "crown", "-n", "5", "-o", "b.gr", "--td", "b.td"], dir.path()).status.success());
    assert_eq!(
        std::fs::read(dir.path().join("a.gr")).unwrap(),
        std::fs::read(dir.path().join("b.gr")).unwrap()
    );
    assert_eq!(
        std::fs::read(dir.path().join("a.td")).unwrap(),
        std::fs::read(dir.path().join("b.td")).unwrap()
    );
}

#[test]
fn validate_reports_missing_edge_with_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.gr"), "p tw 3 3\n1 2\n2 3\n1 3\n").unwrap();
    // decomposition covering only two of the three edges
    std::fs::write(dir.path().join("bad.td"), "s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 2\n").unwrap();
    let out = tdp(&["validate", "-g", "g.gr", "-t", "bad.td"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert!(text.contains("edge (1, 3)"), "names the uncovered edge: {}", text);
}

#[test]
fn solve_witness_validates() {
    let dir = tempfile::tempdir().unwrap();
    assert!(tdp(&["gen", "crown", "-n", "4", "-o", "g.gr"], dir.path()).status.success());
    let out = tdp(
        &["solve", "--param", "tree-alpha", "-i", "g.gr", "--witness", "w.td"],
        dir.path(),
    );
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "3");
    let out = tdp(&["validate", "-g", "g.gr", "-t", "w.td", "--param", "alpha"], dir.path());
    assert!(out.status.success());
    assert!(stdout(&out).contains("alpha measure: 3"));
}

#[test]
fn exit_codes_for_usage_malformed_budget_infeasible() {
    let dir = tempfile::tempdir().unwrap();
    // usage error -> 2 (clap)
    let out = tdp(&["solve", "--nonsense"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    // malformed input -> 4
    std::fs::write(dir.path().join("broken.gr"), "p tw 2 1\n").unwrap();
    let out = tdp(&["solve", "--param", "alpha", "-i", "broken.gr"], dir.path());
    assert_eq!(out.status.code(), Some(4));
    // infeasible weighting -> 1
    std::fs::write(dir.path().join("p2.gr"), "p tw 2 1\n1 2\n").unwrap();
    let out = tdp(
        &["weights", "-i", "p2.gr", "--bound", "1", "--target", "3", "-o", "w.txt"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("infeasible"));
    // budget exceeded -> 3 (a search large enough for the clock to bite)
    assert!(tdp(&["gen", "burling", "-n", "4", "-o", "g4.gr"], dir.path()).status.success());
    let out = tdp(
        &[
            "weights", "-i", "g4.gr", "--bound", "128", "--target", "320", "-o", "w4.txt",
            "--budget-ms", "1",
        ],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn weights_search_writes_verified_file() {
    let dir = tempfile::tempdir().unwrap();
    assert!(tdp(&["gen", "burling", "-n", "2", "-o", "g2.gr"], dir.path()).status.success());
    let out = tdp(
        &["weights", "-i", "g2.gr", "--bound", "2", "--target", "3", "-o", "w.txt"],
        dir.path(),
    );
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("w.txt")).unwrap();
    let g = tdp_core::fmt::read_gr_file(&dir.path().join("g2.gr")).unwrap();
    let (w, header) = tdp_core::fmt::parse_weights(&text, g.n()).unwrap();
    let header = header.unwrap();
    assert_eq!(header.bound, 2);
    assert_eq!(header.target, 3);
    assert_eq!(header.graph_hash, g.hash_hex());
    assert!(tdp_core::construct::verify_weighting(&g, &w, 2, 3).is_ok());
}

#[test]
fn verify_suite_emits_json_lines_and_exit_0() {
    let dir = tempfile::tempdir().unwrap();
    let out = tdp(
        &[
            "verify", "--suite", "crown", "--max-n", "4", "-o", "report.jsonl",
            "--witness-dir", "wit",
        ],
        dir.path(),
    );
    assert!(out.status.success());
    let report = std::fs::read_to_string(dir.path().join("report.jsonl")).unwrap();
    let lines: Vec<&str> = report.lines().collect();
    assert_eq!(lines.len(), 3); // n = 2, 3, 4
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["status"], "pass");
    }
    assert_eq!(stdout(&out).trim(), report.trim());
}

#[test]
fn gen_blowup_uses_cached_weighting() {
    let dir = tempfile::tempdir().unwrap();
    let out = tdp(&["gen", "blowup", "-k", "3", "-o", "h3.gr"], dir.path());
    assert!(out.status.success());
    let g = tdp_core::fmt::read_gr_file(&dir.path().join("h3.gr")).unwrap();
    assert_eq!(g.n(), 16);
    // completion of H_2 via the cached route
    let out = tdp(&["gen", "completion", "-k", "2", "-o", "ch2.gr"], dir.path());
    assert!(out.status.success());
    // completion of an input graph
    assert!(tdp(&["gen", "c5k", "-k", "1", "-o", "cc5.gr"], dir.path()).status.success());
    let out = tdp(&["gen", "completion", "-i", "cc5.gr", "-o", "ccc5.gr"], dir.path());
    assert!(out.status.success());
}
