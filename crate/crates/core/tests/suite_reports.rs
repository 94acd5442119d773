use std::time::Instant;

use modrep_core::suite::{run_criterion, run_suite, SuiteConfig, CRITERIA};

#[test]
fn symbolic_criteria_are_fast() {
    let t = Instant::now();
    let r = run_criterion(13, &SuiteConfig::default());
    assert!(r.passed, "{:?}", r.observations);
    assert!(t.elapsed().as_secs_f64() < 1.0, "symbolic suite took {:?}", t.elapsed());
}

#[test]
fn reports_are_deterministic() {
    let cfg = SuiteConfig { seed: 5, cutoff: 20 };
    let a = serde_json::to_string(&run_suite(&cfg, &[12, 13, 14, 15])).unwrap();
    let b = serde_json::to_string(&run_suite(&cfg, &[12, 13, 14, 15])).unwrap();
    assert_eq!(a, b);
    assert!(a.contains("\"schema\":\"1\""));
}

#[test]
fn unknown_criterion_fails() {
    let r = run_criterion(16, &SuiteConfig::default());
    assert!(!r.passed);
    assert_eq!(CRITERIA.len(), 15);
}
