use std::path::Path;
use std::process::{Command, Output};

use kerdocklab::harness::{Report, Status};
use kerdocklab::{ComponentReport, DesignReport, IntersectionTensor, WeightDistribution};

fn kerdocklab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kerdocklab"))
        .args(args)
        .env("KERDOCKLAB_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn ok(args: &[&str]) -> String {
    let out = kerdocklab(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_string()
}

#[test]
fn build_then_weights() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = path(dir.path(), "k4.kcode");
    ok(&["build", "--family", "kerdock", "--m", "4", "--out", &k4]);
    let wd: WeightDistribution = serde_json::from_str(&ok(&["analyze", "weights", "--in", &k4])).unwrap();
    assert_eq!(wd, WeightDistribution::from_pairs([(0, 1), (6, 112), (8, 30), (10, 112), (16, 1)]));
    let distances: Vec<usize> = serde_json::from_str(&ok(&["analyze", "distances", "--in", &k4])).unwrap();
    assert_eq!(distances, vec![0, 6, 8, 10, 16]);
    let kernel: serde_json::Value = serde_json::from_str(&ok(&["analyze", "kernel", "--in", &k4])).unwrap();
    assert_eq!(kernel["dimension"], 5);
}

#[test]
fn punctured_kerdock_components() {
    let dir = tempfile::tempdir().unwrap();
    let k4 = path(dir.path(), "k4.kcode");
    let k4p = path(dir.path(), "k4p.kcode");
    ok(&["build", "--family", "kerdock", "--m", "4", "--out", &k4]);
    ok(&["derive", "puncture", "--in", &k4, "--coordinate", "15", "--out", &k4p]);
    let reports: Vec<ComponentReport> =
        serde_json::from_str(&ok(&["components", "--in", &k4p, "--all", "--method", "graph"])).unwrap();
    assert_eq!(reports.len(), 15);
    assert!(reports.iter().all(|r| r.component_count == 2));
}

#[test]
fn span_method_on_dual() {
    let dir = tempfile::tempdir().unwrap();
    let d5 = path(dir.path(), "d5.kcode");
    ok(&["build", "--family", "bch13-dual", "--m", "5", "--out", &d5]);
    let r: ComponentReport =
        serde_json::from_str(&ok(&["components", "--in", &d5, "--coordinate", "7", "--method", "span"])).unwrap();
    assert_eq!((r.component_count, r.rank), (1, Some(10)));

    let design: DesignReport =
        serde_json::from_str(&ok(&["design", "--in", &d5, "--weight", "12", "--max-t", "2"])).unwrap();
    assert_eq!(design.strength, 2);
    assert_eq!(design.lambdas, vec![120, 44]);

    let t: IntersectionTensor = serde_json::from_str(&ok(&[
        "scheme", "--in", &d5, "--sampled", "--seed", "1", "--trials", "200",
    ]))
    .unwrap();
    assert!(t.consistent);
}

#[test]
fn scheme_full_mode() {
    let dir = tempfile::tempdir().unwrap();
    let rm = path(dir.path(), "rm.kcode");
    ok(&["build", "--family", "rm1", "--m", "3", "--out", &rm]);
    let t: IntersectionTensor = serde_json::from_str(&ok(&["scheme", "--in", &rm])).unwrap();
    assert!(t.consistent);
    assert_eq!(t.relations, vec![0, 4, 8]);
}

#[test]
fn usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let k = path(dir.path(), "k.kcode");
    assert!(!kerdocklab(&["build", "--family", "kerdock", "--m", "5", "--out", &k]).status.success());
    assert!(!kerdocklab(&["build", "--family", "gold-dual", "--m", "5", "--e", "7", "--out", &k]).status.success());
    assert!(!kerdocklab(&["analyze", "weights", "--in", &path(dir.path(), "missing")]).status.success());
    assert!(!kerdocklab(&["components", "--in", &k]).status.success());
    assert!(!kerdocklab(&["frobnicate"]).status.success());
}

#[test]
fn large_bch_is_described() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "b7.json");
    let o = kerdocklab(&["build", "--family", "bch13", "--m", "7", "--out", &out]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("parity-check"));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dimension"], 113);
}

#[test]
fn verify_all_quick() {
    let dir = tempfile::tempdir().unwrap();
    let json = path(dir.path(), "report.json");
    let out = kerdocklab(&["verify-all", "--quick", "--json", &json]);
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    let saved: Report = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report.without_timings(), saved.without_timings());
    // the exit status reports exactly whether some claim failed
    assert_eq!(out.status.success(), report.all_passed());
    assert!(report.claims().iter().any(|c| matches!(c.status, Status::Skipped(_))));
    assert_eq!(report.get("kerdock/weight-distribution/m=4").unwrap().status, Status::Pass);
}
