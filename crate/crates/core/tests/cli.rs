use std::process::{Command, Output};

use fockspace::crystal::CrystalGraph;
use fockspace::fock::Combination;
use fockspace::qlaurent::LaurentPoly;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fockspace")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn act_f_on_vacuum() {
    let v: Combination = serde_json::from_str(&stdout(&["act", "--n", "2", "--phi", "--ops", "F0"])).unwrap();
    assert_eq!(v.len(), 1);
    let (y, c) = v.terms().next().unwrap();
    assert_eq!(y.depths(), &[1]);
    assert!(c.is_one());
}

#[test]
fn act_commutator_on_vacuum() {
    // [E_i, F_i] phi_k = [<h_i, Lambda_k>]_{q_i} phi_k
    for (n, k) in [("2", "0"), ("2", "1"), ("3", "3")] {
        let nn: usize = n.parse().unwrap();
        let kk: usize = k.parse().unwrap();
        for i in 0..=nn {
            let ef = format!("E{i} F{i}");
            let fe = format!("F{i} E{i}");
            let a: Combination = serde_json::from_str(&stdout(&["act", "--n", n, "--k", k, "--phi", "--ops", &ef])).unwrap();
            let b: Combination = serde_json::from_str(&stdout(&["act", "--n", n, "--k", k, "--phi", "--ops", &fe])).unwrap();
            assert!(b.is_zero());
            if i == kk {
                assert_eq!(a.len(), 1);
                assert_eq!(a.terms().next().unwrap().1, &LaurentPoly::one());
            } else {
                assert!(a.is_zero(), "n={n} k={k} i={i}");
            }
        }
    }
}

#[test]
fn act_torus_and_text_format() {
    // [2,1] at k = 0 has colours 0, 1 in column 0 and 1 in column 1.
    let text = stdout(&["act", "--n", "2", "--diagram", r#"{"columns":[2,1]}"#, "--ops", "Td", "--format", "text"]);
    assert_eq!(text, "q^-1\t0;2,1\n");
}

#[test]
fn signature_text_output() {
    let text = stdout(&["signature", "--n", "2", "--k", "0", "--diagram", r#"{"columns":[3,1]}"#, "--i", "1"]);
    assert_eq!(
        text,
        "sigma = 10\nJ = {1,2}\nepsilon = 1\nphi = 1\ne_tilde site = (2,-1)\nf_tilde site = (0,-3)\n"
    );
}

#[test]
fn signature_on_vacuum() {
    let text = stdout(&["signature", "--n", "3", "--k", "2", "--phi", "--i", "2"]);
    assert!(text.starts_with("sigma = 0\nJ = {1}\nepsilon = 0\nphi = 1\ne_tilde site = none\n"), "{text}");
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "--n", "1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "2", "--k", "5"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--n", "2", "--bogus"]).status.code(), Some(2));
    assert_eq!(run(&["act", "--n", "2", "--phi", "--ops", "X3"]).status.code(), Some(2));
    let out = run(&["verify", "--n", "2", "--k", "1", "--max-boxes", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report["checked"].as_u64().unwrap() > 0);
    assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    let out = run(&["verify", "--n", "3", "--k", "2", "--max-boxes", "4", "--convention", "lower"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn bad_diagram_is_usage_error() {
    let out = run(&["act", "--n", "2", "--diagram", r#"{"columns":[1,2]}"#, "--ops", "E0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("error:"));
    let out = run(&["act", "--n", "2", "--diagram", r#"{"n":3,"columns":[1]}"#, "--ops", "E0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn graph_formats() {
    let g = CrystalGraph::from_json(&stdout(&["graph", "--n", "2", "--k", "0", "--depth", "5"])).unwrap();
    assert_eq!(g.nodes().len(), 12);
    let dot = stdout(&["graph", "--n", "2", "--k", "1", "--depth", "5", "--format", "dot"]);
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("[label=\"1;").count(), 15);
    assert!(dot.contains("[label=\"1;\"]"));
}

#[test]
fn graph_is_deterministic_and_round_trips() {
    let args = ["graph", "--n", "3", "--k", "1", "--depth", "6"];
    let a = stdout(&args);
    assert_eq!(a, stdout(&args));
    let g = CrystalGraph::from_json(&a).unwrap();
    assert_eq!(g.to_json().unwrap() + "\n", a);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.dot");
    let p = path.to_str().unwrap();
    let printed = stdout(&["graph", "--n", "2", "--depth", "3", "--format", "dot", "--out", p]);
    assert!(printed.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&["graph", "--n", "2", "--depth", "3", "--format", "dot"]));
}

#[test]
fn multiplicities_sum_to_node_count() {
    let rows: Vec<serde_json::Value> =
        serde_json::from_str(&stdout(&["multiplicities", "--n", "2", "--k", "1", "--depth", "5"])).unwrap();
    let total: u64 = rows.iter().map(|r| r["count"].as_u64().unwrap()).sum();
    let g = CrystalGraph::from_json(&stdout(&["graph", "--n", "2", "--k", "1", "--depth", "5"])).unwrap();
    assert_eq!(total as usize, g.nodes().len());
}
