mod common;

use std::process::Command;

use common::check_fixture;
use fvr::experiment::Summary;

fn fvr(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_fvr")).env("FVR_THREADS", "1").args(args).output().unwrap()
}

#[test]
fn t1_3_exhaustive_summary_is_pinned() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("t1_3.cfg");
    std::fs::write(&cfg, "ring = zpr:p=3,r=2\ntheorem = T1_3\nf = a=1;R=0,0,0;S=0,0,0;T=0,1,0\nmode = exhaustive:2\n").unwrap();
    let out = dir.path().join("t1_3.jsonl");
    let run = fvr(&["sweep", cfg.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(run.status.code(), Some(0));
    let summary_bytes = std::fs::read(dir.path().join("t1_3.jsonl.summary.json")).unwrap();
    let summary: Summary = serde_json::from_slice(&summary_bytes).unwrap();
    // (9 + 36)^3 triples of non-empty subsets
    assert_eq!(summary.jobs, 91_125);
    assert_eq!(summary.verdicts["pass"], summary.reports);
    check_fixture("t1_3_z9_exhaustive2.summary.json", &summary_bytes).unwrap();
}

#[test]
fn check_subcommand_matches_sweep() {
    let single = fvr(&["check", "T1_3", "--ring", "zpr:p=3,r=2", "--f", "a=1;R=0,0,0;S=0,0,0;T=0,1,0", "--mode", "exhaustive:1"]);
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(String::from_utf8(single.stdout).unwrap().lines().count(), 729);
}

#[test]
fn full_families_in_z3() {
    let run = fvr(&["check", "T2_2", "--ring", "zpr:p=3,r=1", "--points", "all", "--planes", "all"]);
    assert_eq!(run.status.code(), Some(0));
    let rec: serde_json::Value = serde_json::from_slice(&run.stdout).unwrap();
    assert_eq!(rec["quantities"]["incidences"], "243");
    assert_eq!(rec["verdict"], "pass");
    let again = fvr(&["incidence", "--ring", "zpr:p=3,r=1"]);
    assert_eq!(again.stdout, run.stdout);
}

#[test]
fn ring_info_and_geometry() {
    let info = String::from_utf8(fvr(&["ring", "info", "fqxr:p=3,s=2,r=1"]).stdout).unwrap();
    assert!(info.contains("order       9"));
    assert!(info.contains("units       8"));
    let geo = String::from_utf8(fvr(&["geometry", "--ring", "zpr:p=3,r=1", "--A", "0,1"]).stdout).unwrap();
    assert!(geo.contains("triples      28"));
    assert!(geo.contains("lines        6"));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(fvr(&["ring", "info", "zpr:p=6,r=1"]).status.code(), Some(2));
    assert_eq!(fvr(&["check", "T1_5", "--ring", "zpr:p=3,r=2", "--A", "9"]).status.code(), Some(2));
}
