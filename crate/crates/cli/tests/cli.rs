use std::process::{Command, Output};

fn fsys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsys")).args(args).output().expect("fsys runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn build_then_centralizer_on_the_stored_system() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s4.fsk");
    let o = fsys(&["build", "s4", "-p", "2", "--out", out.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("saturated: true"));
    let o = fsys(&["centralizer", out.to_str().unwrap(), "--normal-subgroup-of-order", "12", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["c_s_e_order"], 1);
    assert_eq!(v["model_order"], 24);
    assert_eq!(v["normal_model_order"], 12);
}

#[test]
fn centralizer_of_a_factor() {
    let o = fsys(&["centralizer", "a4xa4", "-p", "2", "--normal", "(1 2)(3 4), (1 2 3)", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["c_s_e_order"], 4);
    assert_eq!(v["model_order"], 144);
    assert_eq!(v["c_f_e"]["support_order"], 4);
}

#[test]
fn product_of_commuting_normal_subsystems() {
    let o = fsys(&["product", "q8oc4", "--f1", "O_p", "--f2", "center", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["report"]["centralize"], true);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn alperin_factorization_recomposes() {
    let o = fsys(&["alperin", "s4", "-p", "2", "--morphism", "(1 2 3)", "--on", "(1 2)(3 4)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("composite equals phi: true"));
}

#[test]
fn verify_corpus_writes_a_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("report.json");
    let o = fsys(&["verify", "corpus", "--checks", "Saturation,FocalOracle,FfEf", "--json", json.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    let reports: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let reports = reports.as_array().unwrap();
    assert!(reports.len() > 20);
    let keys: Vec<&str> = reports.iter().map(|r| r["entry"].as_str().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted, "reports come out in corpus order");
}

#[test]
fn usage_errors_exit_nonzero() {
    assert_eq!(fsys(&["verify", "s4", "-p", "2", "--checks", "NoSuchCheck"]).status.code(), Some(2));
    assert_eq!(fsys(&["centralizer", "s4", "-p", "2", "--normal", "(1 2)"]).status.code(), Some(2));
    assert_eq!(fsys(&["build", "no-such-group", "-p", "2"]).status.code(), Some(2));
    assert_eq!(fsys(&["centralizer", "s4"]).status.code(), Some(2));
    assert!(!fsys(&["frobnicate"]).status.success());
}
