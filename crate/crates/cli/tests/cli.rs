use std::process::{Command, Output};
use std::time::Instant;

fn modrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modrep")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn abacus_of_a_singular_partition() {
    let o = modrep(&["abacus", "--p", "5", "--partition", "2,2,2,2,2"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("label <2,1>"), "{s}");
    assert!(s.contains("singular"), "{s}");
    assert!(s.contains("weight 2"), "{s}");
}

#[test]
fn abacus_json_round_trips_the_label() {
    let o = modrep(&["abacus", "--p", "3", "--partition", "(3,3)", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["label"], "<3,2>");
    assert_eq!(v["p_regular"], true);
    assert_eq!(v["schema"], "1");
}

#[test]
fn abacus_outside_the_principal_block() {
    let o = modrep(&["abacus", "--p", "3", "--partition", "4,2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("not in the principal block"));
}

#[test]
fn symbolic_ledger_is_fast() {
    let t = Instant::now();
    let o = modrep(&["verify", "ledger", "--p", "7"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(t.elapsed().as_secs_f64() < 1.0);
    assert!(stdout(&o).contains("PASS symbolic ledger p = 7"));
}

#[test]
fn every_supported_prime_verifies() {
    for p in ["3", "5", "11", "13"] {
        assert!(modrep(&["verify", "ledger", "--p", p]).status.success(), "p = {p}");
    }
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(modrep(&["gldim", "--p", "3", "--bogus"]).status.code(), Some(2));
    assert_eq!(modrep(&["verify", "ledger", "--p", "5", "--mode", "exact"]).status.code(), Some(2));
    assert_eq!(modrep(&["verify", "ledger", "--p", "4"]).status.code(), Some(2));
    assert_eq!(modrep(&["gldim", "--p", "5"]).status.code(), Some(2));
    assert_eq!(modrep(&["abacus", "--p", "3", "--partition", "3,x"]).status.code(), Some(2));
    assert_eq!(modrep(&["ext", "--p", "3", "--from", "X<3>", "--to", "Y<3>"]).status.code(), Some(2));
    assert_eq!(modrep(&["verify", "p3-full", "--only", "16"]).status.code(), Some(2));
}

#[test]
fn global_dimension_is_eight() {
    let o = modrep(&["gldim", "--p", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "8");
}

#[test]
fn ext_into_the_dual_singular_specht_module() {
    let o = modrep(&["ext", "--p", "3", "--from", "Y<3>", "--to", "dS<2,1>", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["ext"], serde_json::json!([0, 0, 0, 1]));
}

#[test]
fn quiver_at_five_has_twenty_two_edges() {
    let o = modrep(&["quiver", "--p", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["edges"].as_array().unwrap().len(), 22);
}

#[test]
fn full_verification_report_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("modrep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a = dir.join("a.json");
    let b = dir.join("b.json");
    for f in [&a, &b] {
        let o = modrep(&["verify", "p3-full", "--seed", "7", "--only", "12,13,14", "--out", f.to_str().unwrap()]);
        assert!(o.status.success(), "{}", stdout(&o));
        assert!(stdout(&o).contains("PASS criterion 13"));
    }
    let (x, y) = (std::fs::read_to_string(&a).unwrap(), std::fs::read_to_string(&b).unwrap());
    assert_eq!(x, y);
    assert!(x.contains("\"schema\": \"1\""));
    std::fs::remove_dir_all(&dir).unwrap();
}
