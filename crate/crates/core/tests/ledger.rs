use std::time::Instant;

use modrep_core::ledger::*;
use modrep_core::partition::label_to_partition;
use modrep_core::BlockLabel;

fn label(s: &str) -> BlockLabel {
    s.parse().unwrap()
}

fn subject(s: &str) -> Subject {
    s.parse().unwrap()
}

fn hook_length_dim(parts: &[usize]) -> u128 {
    let n: usize = parts.iter().sum();
    let num: u128 = (1..=n as u128).product();
    let conj: Vec<usize> = (0..parts.first().copied().unwrap_or(0)).map(|j| parts.iter().filter(|&&r| r > j).count()).collect();
    let mut den: u128 = 1;
    for (i, &r) in parts.iter().enumerate() {
        for (j, &c) in conj.iter().enumerate().take(r) {
            den *= ((r - j) + (c - i) - 1) as u128;
        }
    }
    num / den
}

fn data_path(p: u32) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(format!("data/ledger_p{p}.json"))
}

#[test]
fn shipped_ledgers_match_generator() {
    let regenerate = std::env::var_os("MODREP_REGENERATE_LEDGER").is_some();
    for p in SUPPORTED_PRIMES {
        let fresh = generate_ledger(p).unwrap().to_json();
        if regenerate {
            std::fs::write(data_path(p), &fresh).unwrap();
        }
        let shipped = std::fs::read_to_string(data_path(p)).unwrap();
        assert_eq!(shipped, fresh, "ledger for p = {p} is stale; rerun with MODREP_REGENERATE_LEDGER=1");
    }
}

#[test]
fn ledger_round_trips_through_json() {
    let l = builtin_ledger(7).unwrap();
    assert_eq!(Ledger::from_json(&l.to_json()).unwrap(), l);
    for s in ["S<3,1>", "P<5>", "P0<4,2>", "Y<1>", "U<3,1>/<2,1>", "Om3Y<2>", "Z4", "W2"] {
        assert_eq!(subject(s).to_string(), s);
    }
}

#[test]
fn unknown_schema_and_prime_rejected() {
    let mut l = builtin_ledger(5).unwrap();
    l.schema = "0".into();
    assert!(Ledger::from_json(&l.to_json()).is_err());
    assert!(verify_ledger(&l).unwrap().failures.iter().any(|f| f.entry == "schema"));
    assert!(builtin_ledger(17).is_err());
    assert!(verify_symbolic(2).is_err());
}

#[test]
fn every_supported_prime_verifies_quickly() {
    let t = Instant::now();
    for p in SUPPORTED_PRIMES {
        let r = verify_symbolic(p).unwrap();
        assert!(r.passed, "p = {p}: {:?}", r.failures);
        assert!(r.coverage_missing.is_empty() && r.coverage_duplicated.is_empty() && r.coverage_unexpected.is_empty());
        assert_eq!(r.schema, LEDGER_SCHEMA);
    }
    assert!(t.elapsed().as_secs_f64() < 1.0, "symbolic verification took {:?}", t.elapsed());
}

#[test]
fn recorded_dimensions_match_hook_lengths() {
    for p in SUPPORTED_PRIMES {
        for f in &builtin_ledger(p).unwrap().filtrations {
            let total: u128 = f
                .layers
                .iter()
                .flatten()
                .map(|l| hook_length_dim(label_to_partition(*l, p).unwrap().parts()))
                .sum();
            assert_eq!(total, f.dimension, "p = {p}, {}", f.subject);
        }
    }
}

#[test]
fn hook_length_oracle_sanity() {
    assert_eq!(hook_length_dim(&[3, 2, 1]), 16);
    assert_eq!(hook_length_dim(&[4, 1, 1]), 10);
    assert_eq!(hook_length_dim(&[3, 3]), 5);
    assert_eq!(hook_length_dim(&[1, 1, 1, 1]), 1);
}

#[test]
fn repeat_labels_are_long_partitions() {
    for p in SUPPORTED_PRIMES {
        for v in 1..=p as usize {
            let l = BlockLabel::pair(v, v);
            assert!(matches!(l, BlockLabel::Repeat(_)));
            assert!(label_to_partition(l, p).unwrap().parts().len() > p as usize);
        }
    }
}

#[test]
fn top_projective_at_five() {
    let l = builtin_ledger(5).unwrap();
    let f = l.filtrations.iter().find(|f| f.subject == subject("P<5>")).unwrap();
    let mut got: Vec<BlockLabel> = f.layers.iter().flatten().copied().collect();
    got.sort();
    let mut want = vec![label("<5>"), label("<4>"), label("<5,3>"), label("<4,3>")];
    want.sort();
    assert_eq!(got, want);
    assert_eq!(f.layers[0], vec![label("<5>")]);
    assert_eq!(f.dimension % 25, 0);
}

#[test]
fn young_one_at_three() {
    let l = builtin_ledger(3).unwrap();
    let f = l.filtrations.iter().find(|f| f.subject == subject("Y<1>")).unwrap();
    assert_eq!(f.layers, vec![vec![label("<2>")], vec![label("<1>")]]);
}

#[test]
fn corner_resolution_at_seven() {
    let l = builtin_ledger(7).unwrap();
    let c = l.chains.iter().find(|c| c.source == "resolution/corner").unwrap();
    assert_eq!(c.role, ChainRole::Resolution);
    assert_eq!(c.terms.len(), 7);
    assert_eq!(c.terms[0], vec![subject("P0<3,2>")]);
    assert_eq!(c.terms[6], vec![subject("Y<1>")]);
    assert!(c.terms[1..6].iter().all(|t| matches!(t[..], [Subject::Projective(_)])));
}

#[test]
fn coresolution_shape() {
    for p in SUPPORTED_PRIMES {
        let l = builtin_ledger(p).unwrap();
        let c = l.chains.iter().find(|c| c.role == ChainRole::SpechtCoresolution).unwrap();
        assert_eq!(c.terms.len(), 2 * p as usize);
        assert_eq!(c.terms[0], vec![subject("S<2,1>")]);
        assert_eq!(c.terms.last().unwrap(), &vec![Subject::Young(BlockLabel::Single(p as usize))]);
    }
}

fn failing_sources(l: &Ledger) -> Vec<String> {
    verify_ledger(l).unwrap().failures.into_iter().map(|f| f.source).collect()
}

#[test]
fn corrupted_filtration_is_named() {
    let mut l = builtin_ledger(5).unwrap();
    let f = l.filtrations.iter_mut().find(|f| f.subject == subject("P<5>")).unwrap();
    f.layers[1].retain(|x| *x != label("<4>"));
    let r = verify_ledger(&l).unwrap();
    assert!(!r.passed);
    assert!(r.failures.iter().any(|x| x.source == "pim/top" && x.entry == "P<5>"), "{:?}", r.failures);
}

#[test]
fn wrong_dimension_is_named() {
    let mut l = builtin_ledger(7).unwrap();
    let f = l.filtrations.iter_mut().find(|f| f.source == "young/single/1").unwrap();
    f.dimension += 1;
    assert!(failing_sources(&l).contains(&"young/single/1".to_string()));
}

#[test]
fn shifted_syzygy_in_first_remainder_fails() {
    for p in [5u32, 7, 11] {
        let mut l = builtin_ledger(p).unwrap();
        let id = l.identities.iter_mut().find(|i| i.source == "coresolution-pieces/1").unwrap();
        assert_eq!(id.right, vec![Subject::Syzygy(p as usize - 3, label("<2>"))]);
        id.right = vec![Subject::Syzygy(p as usize - 2, label("<2>"))];
        let failed = failing_sources(&l);
        assert!(failed.iter().any(|s| s == "coresolution-step/1" || s == "coresolution-remainder/1"), "p = {p}: {failed:?}");
    }
}

#[test]
fn broken_chain_term_fails() {
    let mut l = builtin_ledger(7).unwrap();
    let c = l.chains.iter_mut().find(|c| c.source == "resolution/corner").unwrap();
    c.terms[2] = vec![subject("P<6,2>")];
    assert!(failing_sources(&l).contains(&"resolution/corner".to_string()));
}

#[test]
fn coverage_detects_missing_duplicate_and_unexpected() {
    let mut l = builtin_ledger(5).unwrap();
    let gone = l.identities.remove(0).source;
    let r = verify_ledger(&l).unwrap();
    assert!(!r.passed);
    assert_eq!(r.coverage_missing, vec![gone]);

    let mut l = builtin_ledger(5).unwrap();
    let dup = l.chains[0].clone();
    l.chains.push(dup.clone());
    let r = verify_ledger(&l).unwrap();
    assert!(!r.passed);
    assert_eq!(r.coverage_duplicated, vec![dup.source]);

    let mut l = builtin_ledger(5).unwrap();
    l.chains[0].source = "made-up".into();
    let r = verify_ledger(&l).unwrap();
    assert!(r.coverage_unexpected.contains(&"made-up".to_string()));
}

#[test]
fn manifest_matches_sources() {
    for p in SUPPORTED_PRIMES {
        let mut sources: Vec<String> = builtin_ledger(p).unwrap().sources().into_iter().map(String::from).collect();
        sources.sort();
        assert_eq!(sources, coverage_manifest(p).unwrap());
    }
}

#[test]
fn exact_p3_agrees_with_symbolic() {
    let r = verify_exact_p3(0).unwrap();
    let failed: Vec<_> = r.entries.iter().filter(|e| !e.passed).collect();
    assert!(r.passed, "{failed:#?}");
    let ledger = builtin_ledger(3).unwrap();
    for s in ledger.sources() {
        assert!(r.entries.iter().any(|e| e.source == s), "{s} not checked exactly");
    }
    let sym = verify_symbolic(3).unwrap();
    for (s, class) in &sym.derived {
        let Some(e) = r.entries.iter().find(|e| e.source == "class" && &e.entry == s) else { continue };
        assert_eq!(e.detail, format!("symbolic class {class}"));
    }
    assert!(r.entries.iter().any(|e| e.source == "singular-specht" && e.passed));
}

#[test]
fn exact_check_rejects_wrong_entries() {
    let mut l = builtin_ledger(3).unwrap();
    let f = l.filtrations.iter_mut().find(|f| f.source == "small/young/1").unwrap();
    f.layers = vec![vec![label("<1>")], vec![label("<2>")]];
    let id = l.identities.iter_mut().find(|i| i.source == "small/syzygy/hook").unwrap();
    id.right = vec![Subject::Syzygy(1, label("<1>"))];
    let r = verify_exact_ledger_p3(&l, 0).unwrap();
    assert!(!r.passed);
    let failed: Vec<&str> = r.entries.iter().filter(|e| !e.passed).map(|e| e.source.as_str()).collect();
    assert!(failed.contains(&"small/young/1"), "{failed:?}");
    assert!(failed.contains(&"small/syzygy/hook"), "{failed:?}");
    assert!(verify_exact_ledger_p3(&builtin_ledger(5).unwrap(), 0).is_err());
}
