use packlab::graph::graph6_decode;
use packlab::recognize::*;
use std::process::{Command, Output};

fn packlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_packlab")).args(args).env_remove("PACKLAB_MAX_ORDER").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("packlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn realize_prints_a_five_cycle() {
    let o = packlab(&["realize", "2,2,2,2,2"]);
    assert_eq!(o.status.code(), Some(0));
    let g = graph6_decode(stdout(&o).trim()).unwrap();
    assert!(g.is_connected() && g.degrees() == vec![2; 5]);
    assert_eq!(packlab(&["realize", "3,3,1,1"]).status.code(), Some(2));
}

#[test]
fn pack_emits_a_certificate_that_validates() {
    let g1 = build_cycle_edges(5).unwrap().with_isolates(1).to_string();
    let g2 = build_disjoint_copies(2, &build_complete(3)).to_string();
    let o = packlab(&["--json", "pack", "--mode", "sequence", &g1, &g2]);
    assert_eq!(o.status.code(), Some(0));
    let cert: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert["schema"], "packlab/1");
    assert_eq!(cert["status"], "UNPACKABLE");
    assert_eq!(cert["exceptions"][0]["tag"], "F1");
    assert!(cert["witness"].is_null());

    let path = scratch("f1.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let v = packlab(&["validate", path.to_str().unwrap()]);
    assert_eq!((v.status.code(), stdout(&v).as_str()), (Some(0), "valid\n"));
}

#[test]
fn tampered_certificates_are_rejected() {
    let g1 = build_disjoint_copies(2, &build_complete(2)).to_string();
    let g2 = build_complete_bipartite(2, 2).to_string();
    let o = packlab(&["--json", "pack", "--mode", "embed", &g1, &g2]);
    let mut cert: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(cert["status"], "PACKED");

    // Put the witness on g2's own edges.
    let mut shared = cert.clone();
    shared["witness"] = serde_json::Value::String(build_disjoint_copies(2, &build_complete(2)).relabel(&[0, 2, 1, 3]).to_string());
    let path = scratch("shared.json");
    std::fs::write(&path, shared.to_string()).unwrap();
    let v = packlab(&["validate", path.to_str().unwrap()]);
    assert_eq!((v.status.code(), stdout(&v).as_str()), (Some(1), "invalid\n"));

    cert["witness"] = serde_json::Value::Null;
    let path = scratch("missing.json");
    std::fs::write(&path, cert.to_string()).unwrap();
    let v = packlab(&["validate", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&v.stderr).contains("schema violation"));
}

#[test]
fn malformed_graph6_is_an_input_error_with_offset() {
    let o = packlab(&["pack", "--mode", "embed", "C~", "C\x01"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte"));
    assert_eq!(packlab(&["pack", "--mode", "sideways", "A_", "A_"]).status.code(), Some(2));
    assert_eq!(packlab(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn check_prints_clauses() {
    let g1 = build_cycle_edges(5).unwrap().with_isolates(1).to_string();
    let g2 = build_disjoint_copies(2, &build_complete(3)).to_string();
    let o = packlab(&["check", "--theorem", "bec-half", &g1, &g2]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("9 <= 9") && text.contains("satisfied: true"), "{text}");
    let o = packlab(&["--json", "check", "--theorem", "thm7", "--k", "1", &g1, &g2]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_writes_the_report_and_honors_the_cap() {
    let path = scratch("report.json");
    let o = packlab(&["verify", "--theorem", "bec-half", "--max-order", "4", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(report["schema"], "packlab/1");

    let capped = Command::new(env!("CARGO_BIN_EXE_packlab"))
        .args(["verify", "--theorem", "cor4", "--max-order", "5"])
        .env("PACKLAB_MAX_ORDER", "4")
        .output()
        .unwrap();
    assert_eq!(capped.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&capped.stderr).contains("cap"));
    assert_eq!(packlab(&["verify", "--theorem", "cor4", "--max-order", "3", "--workers", "0"]).status.code(), Some(2));
}

#[test]
fn unigraph_and_census() {
    let o = packlab(&["--json", "unigraph", &build_cycle_edges(6).unwrap().to_string()]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["unigraph"], false);
    let o = packlab(&["unigraph", &build_cycle_edges(5).unwrap().to_string()]);
    assert!(stdout(&o).starts_with("unigraph: true"));

    let o = packlab(&["--json", "census", "--max-order", "6"]);
    let rows: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let classes: Vec<u64> = rows.as_array().unwrap().iter().map(|r| r["classes"].as_u64().unwrap()).collect();
    assert_eq!(classes, [1, 1, 2, 4, 11, 34, 156]);
}

#[test]
fn budget_exhaustion_exits_with_three() {
    let g1 = build_disjoint_copies(3, &build_complete(3)).with_isolates(1).to_string();
    let g2 = build_disjoint_copies(2, &build_complete(5)).to_string();
    let o = packlab(&["pack", "--mode", "embed", "--node-limit", "1", &g1, &g2]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("BUDGET_EXHAUSTED"));
}
