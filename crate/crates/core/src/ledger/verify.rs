//! Symbolic verification: every chain must balance in the Grothendieck
//! group spanned by Specht classes, and every module must satisfy the
//! triangularity and divisibility constraints of its kind.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::{builtin_ledger, coverage_manifest, ChainEntry, ChainRole, Ledger, Multiset, Subject, show, LEDGER_SCHEMA};
use crate::error::Result;
use crate::partition::{dominance_lt, is_p_regular, label_to_partition, std_tableaux_count, BlockLabel, Partition};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryFailure {
    pub source: String,
    pub entry: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymbolicReport {
    pub schema: String,
    pub p: u32,
    pub filtrations: usize,
    pub identities: usize,
    pub chains: usize,
    /// Subject classes derived from chains and identities.
    pub derived: BTreeMap<String, String>,
    pub coverage_missing: Vec<String>,
    pub coverage_duplicated: Vec<String>,
    pub coverage_unexpected: Vec<String>,
    pub failures: Vec<EntryFailure>,
    pub passed: bool,
}

struct Ctx<'a> {
    ledger: &'a Ledger,
    classes: HashMap<Subject, Multiset>,
    failures: Vec<EntryFailure>,
}

impl Ctx<'_> {
    fn fail(&mut self, source: &str, entry: impl ToString, reason: impl Into<String>) {
        self.failures.push(EntryFailure { source: source.into(), entry: entry.to_string(), reason: reason.into() });
    }

    fn class(&self, s: &Subject) -> Option<Multiset> {
        match s {
            Subject::Specht(l) => Some(single(*l)),
            Subject::Induced(a, b) => {
                let mut m = single(*a);
                m.add(*b, 1);
                Some(m)
            }
            _ => self.classes.get(s).cloned(),
        }
    }

    fn sum(&self, terms: &[Subject]) -> Option<Multiset> {
        let mut m = Multiset::default();
        for t in terms {
            m.add_all(&self.class(t)?, 1);
        }
        Some(m)
    }

    fn define(&mut self, s: Subject, m: Multiset, source: &str) -> bool {
        match self.classes.get(&s) {
            Some(old) if *old != m => {
                let reason = format!("derived class {m} disagrees with {old}");
                self.fail(source, &s, reason);
                false
            }
            Some(_) => false,
            None => {
                self.classes.insert(s, m);
                true
            }
        }
    }

    /// Syzygies from resolutions and images from the Specht coresolution.
    fn derive_from_chain(&mut self, c: &ChainEntry) -> bool {
        let Some(classes) = c.terms.iter().map(|t| self.sum(t)).collect::<Option<Vec<_>>>() else {
            return false;
        };
        let mut changed = false;
        match c.role {
            ChainRole::Resolution => {
                let Some(Subject::Young(l)) = c.terms.last().and_then(|t| t.first()).cloned() else {
                    return false;
                };
                let n = classes.len() - 1;
                let mut cur = classes[n].clone();
                changed |= self.define(Subject::Syzygy(0, l), cur.clone(), &c.source);
                for j in 1..n {
                    let mut next = classes[n - j].clone();
                    next.add_all(&cur, -1);
                    changed |= self.define(Subject::Syzygy(j, l), next.clone(), &c.source);
                    cur = next;
                }
            }
            ChainRole::SpechtCoresolution => {
                let mut cur = classes[0].clone();
                for (r, cl) in classes.iter().enumerate().skip(1) {
                    let mut next = cl.clone();
                    next.add_all(&cur, -1);
                    changed |= self.define(Subject::Image(r), next.clone(), &c.source);
                    cur = next;
                }
            }
            ChainRole::Plain => {}
        }
        changed
    }

    /// An identity with exactly one unknown singleton side defines it.
    fn derive_from_identities(&mut self) -> bool {
        let ledger = self.ledger;
        let mut changed = false;
        for id in &ledger.identities {
            let (l, r) = (self.sum(&id.left), self.sum(&id.right));
            let target = match (l, r, &id.left[..], &id.right[..]) {
                (None, Some(m), [s], _) => Some((s.clone(), m)),
                (Some(m), None, _, [s]) => Some((s.clone(), m)),
                _ => None,
            };
            if let Some((s, m)) = target {
                if self.class(&s).is_none() {
                    changed |= self.define(s, m, &id.source);
                }
            }
        }
        changed
    }
}

fn single(l: BlockLabel) -> Multiset {
    let mut m = Multiset::default();
    m.add(l, 1);
    m
}

fn partition(l: BlockLabel, p: u32) -> Partition {
    label_to_partition(l, p).expect("validated label")
}

fn dim_of(m: &Multiset, p: u32) -> i128 {
    m.0.iter().map(|(l, k)| *k as i128 * std_tableaux_count(&partition(*l, p)) as i128).sum()
}

/// Every label other than `top` is strictly below it (or above it, for Young modules).
fn triangular(m: &Multiset, top: BlockLabel, p: u32, young: bool) -> std::result::Result<(), String> {
    if m.count(top) != 1 {
        return Err(format!("{top} occurs {} times", m.count(top)));
    }
    let lt = partition(top, p);
    for l in m.labels().filter(|&l| l != top) {
        let lp = partition(l, p);
        let ok = if young { dominance_lt(&lt, &lp) } else { dominance_lt(&lp, &lt) }.expect("same size");
        if !ok {
            let rel = if young { "dominate" } else { "be dominated by" };
            return Err(format!("{l} = {lp} does not {rel} {top} = {lt}"));
        }
    }
    Ok(())
}

fn check_kind(cx: &mut Ctx, s: &Subject, m: &Multiset, source: &str) {
    let p = cx.ledger.p;
    if !m.is_effective() {
        cx.fail(source, s, format!("class {m} has negative coefficients"));
        return;
    }
    let repeats = m.labels().any(|l| matches!(l, BlockLabel::Repeat(_)));
    match *s {
        Subject::Projective(l) => {
            if let Err(e) = triangular(m, l, p, false) {
                cx.fail(source, s, e);
            }
            if !is_p_regular(&partition(l, p), p) {
                cx.fail(source, s, "projective cover indexed by a p-singular label");
            }
            let d = dim_of(m, p);
            if d % (p as i128 * p as i128) != 0 {
                cx.fail(source, s, format!("dimension {d} is not divisible by p^2"));
            }
        }
        Subject::QuotientProjective(l) => {
            if let Err(e) = triangular(m, l, p, false) {
                cx.fail(source, s, e);
            }
            if repeats {
                cx.fail(source, s, "contains a Specht module with more than p rows");
            }
        }
        Subject::Young(l) => {
            if let Err(e) = triangular(m, l, p, true) {
                cx.fail(source, s, e);
            }
            if repeats {
                cx.fail(source, s, "contains a Specht module with more than p rows");
            }
        }
        _ => {}
    }
}

fn check_filtrations(cx: &mut Ctx) {
    let p = cx.ledger.p;
    let mut seen = BTreeSet::new();
    for f in &cx.ledger.filtrations {
        if !seen.insert(f.subject.clone()) {
            cx.fail(&f.source, &f.subject, "second filtration of the same subject");
            continue;
        }
        if let Some(l) = f.layers.iter().flatten().find(|l| l.validate(p).is_err()) {
            cx.fail(&f.source, &f.subject, format!("label {l} is not in the block"));
            continue;
        }
        if f.layers.is_empty() || f.layers.iter().any(|l| l.is_empty()) {
            cx.fail(&f.source, &f.subject, "empty layer");
            continue;
        }
        let m = f.specht_multiset();
        let d = dim_of(&m, p);
        if d != f.dimension as i128 {
            cx.fail(&f.source, &f.subject, format!("recorded dimension {} but Specht dimensions sum to {d}", f.dimension));
        }
        let (top, bottom) = (&f.layers[0], &f.layers[f.layers.len() - 1]);
        match f.subject {
            Subject::Projective(l) | Subject::QuotientProjective(l) if top[..] != [l] => {
                cx.fail(&f.source, &f.subject, format!("top layer is {top:?}, expected [{l}]"));
            }
            Subject::Young(l) if bottom[..] != [l] => {
                cx.fail(&f.source, &f.subject, format!("bottom layer is {bottom:?}, expected [{l}]"));
            }
            Subject::Projective(_) | Subject::QuotientProjective(_) | Subject::Young(_) => {}
            _ => cx.fail(&f.source, &f.subject, "filtrations are recorded only for projective and Young modules"),
        }
        cx.classes.insert(f.subject.clone(), m);
    }
}

fn check_chain(cx: &mut Ctx, c: &ChainEntry, young_like: &BTreeSet<Subject>) {
    let p = cx.ledger.p as usize;
    let Some(classes) = c.terms.iter().map(|t| cx.sum(t)).collect::<Option<Vec<_>>>() else {
        let missing: Vec<String> = c.terms.iter().flatten().filter(|s| cx.class(s).is_none()).map(|s| s.to_string()).collect();
        cx.fail(&c.source, &c.name, format!("unresolved subjects {missing:?}"));
        return;
    };
    if !c.exact {
        cx.fail(&c.source, &c.name, "chain is not claimed exact");
    }
    let mut balance = Multiset::default();
    let mut dims = 0i128;
    for (i, m) in classes.iter().enumerate() {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        balance.add_all(m, sign);
        dims += sign as i128 * dim_of(m, cx.ledger.p);
    }
    if !balance.is_zero() {
        cx.fail(&c.source, &c.name, format!("Grothendieck imbalance {balance}"));
    }
    if dims != 0 {
        cx.fail(&c.source, &c.name, format!("dimension imbalance {dims}"));
    }
    let singleton = |t: &Vec<Subject>| if t.len() == 1 { Some(t[0].clone()) } else { None };
    match c.role {
        ChainRole::Resolution => {
            if c.terms.len() != p {
                cx.fail(&c.source, &c.name, format!("{} terms; the Young module must sit at step p-2", c.terms.len()));
            }
            if !matches!(singleton(&c.terms[0]), Some(Subject::QuotientProjective(_))) {
                cx.fail(&c.source, &c.name, "first term is not a quotient projective");
            }
            if !matches!(c.terms.last().and_then(singleton), Some(Subject::Young(_))) {
                cx.fail(&c.source, &c.name, "last term is not a Young module");
            }
            for (t, m) in c.terms.iter().zip(&classes).skip(1).take(c.terms.len().saturating_sub(2)) {
                let proj = matches!(singleton(t), Some(Subject::Projective(_)));
                if !proj || m.labels().any(|l| matches!(l, BlockLabel::Repeat(_))) {
                    cx.fail(&c.source, &c.name, format!("middle term {t:?} is not projective over the quotient"));
                }
            }
        }
        ChainRole::SpechtCoresolution => {
            if c.terms.len() != 2 * p {
                cx.fail(&c.source, &c.name, format!("{} coresolution terms, expected 2p-1", c.terms.len() - 1));
            }
            if !matches!(singleton(&c.terms[0]), Some(Subject::Specht(_))) {
                cx.fail(&c.source, &c.name, "does not start at a Specht module");
            }
            for s in c.terms.iter().skip(1).flatten() {
                if !young_like.contains(s) {
                    cx.fail(&c.source, &c.name, format!("{s} is not a Young module"));
                }
            }
            if c.terms.last().and_then(singleton) != Some(Subject::Young(BlockLabel::Single(p))) {
                cx.fail(&c.source, &c.name, "does not end at the trivial Young module");
            }
        }
        ChainRole::Plain => {}
    }
}

fn resolve(cx: &mut Ctx) {
    check_filtrations(cx);
    loop {
        let mut changed = false;
        for c in &cx.ledger.chains {
            changed |= cx.derive_from_chain(c);
        }
        changed |= cx.derive_from_identities();
        if !changed {
            break;
        }
    }
}

/// Specht class of every subject the ledger determines.
pub(crate) fn resolved_classes(ledger: &Ledger) -> BTreeMap<Subject, Multiset> {
    let mut cx = Ctx { ledger, classes: HashMap::new(), failures: Vec::new() };
    resolve(&mut cx);
    cx.classes.into_iter().collect()
}

/// Run every symbolic check on a ledger.
pub fn verify_ledger(ledger: &Ledger) -> Result<SymbolicReport> {
    let mut cx = Ctx { ledger, classes: HashMap::new(), failures: Vec::new() };
    if ledger.schema != LEDGER_SCHEMA {
        cx.fail("", "schema", format!("unknown schema {}", ledger.schema));
    }
    resolve(&mut cx);
    let mut subjects: Vec<(Subject, Multiset)> = cx.classes.iter().map(|(s, m)| (s.clone(), m.clone())).collect();
    subjects.sort_by(|a, b| a.0.cmp(&b.0));
    for (s, m) in &subjects {
        check_kind(&mut cx, s, m, "derived");
        if let Subject::QuotientProjective(l) = s {
            if let Some(full) = cx.class(&Subject::Projective(*l)) {
                let mut cut = full.clone();
                for r in full.labels().filter(|l| matches!(l, BlockLabel::Repeat(_))) {
                    cut.add(r, -full.count(r));
                }
                if cut != *m {
                    cx.fail("derived", s, format!("{m} is not {full} with the long Specht modules removed"));
                }
            }
        }
    }
    for id in &ledger.identities {
        match (cx.sum(&id.left), cx.sum(&id.right)) {
            (Some(a), Some(b)) if a == b => {}
            (Some(a), Some(b)) => cx.fail(&id.source, format!("{} = {}", show(&id.left), show(&id.right)), format!("{a} != {b}")),
            _ => cx.fail(&id.source, format!("{} = {}", show(&id.left), show(&id.right)), "unresolved side"),
        }
    }
    let mut young_like: BTreeSet<Subject> =
        subjects.iter().filter(|(s, _)| matches!(s, Subject::Young(_))).map(|(s, _)| s.clone()).collect();
    for id in &ledger.identities {
        if let ([a], [b]) = (&id.left[..], &id.right[..]) {
            if matches!(b, Subject::Young(_)) {
                young_like.insert(a.clone());
            }
            if matches!(a, Subject::Young(_)) {
                young_like.insert(b.clone());
            }
        }
    }
    for c in &ledger.chains {
        check_chain(&mut cx, c, &young_like);
    }

    let expected = coverage_manifest(ledger.p)?;
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for s in ledger.sources() {
        *counts.entry(s).or_default() += 1;
    }
    let coverage_missing: Vec<String> = expected.iter().filter(|k| !counts.contains_key(k.as_str())).cloned().collect();
    let coverage_duplicated: Vec<String> = counts.iter().filter(|(_, &n)| n > 1).map(|(k, _)| k.to_string()).collect();
    let coverage_unexpected: Vec<String> =
        counts.keys().filter(|k| !expected.iter().any(|e| e == *k)).map(|k| k.to_string()).collect();

    let derived = subjects
        .iter()
        .filter(|(s, _)| !ledger.filtrations.iter().any(|f| &f.subject == s))
        .map(|(s, m)| (s.to_string(), m.to_string()))
        .collect();
    let mut failures = cx.failures;
    failures.dedup();
    let passed = failures.is_empty()
        && coverage_missing.is_empty()
        && coverage_duplicated.is_empty()
        && coverage_unexpected.is_empty();
    Ok(SymbolicReport {
        schema: LEDGER_SCHEMA.into(),
        p: ledger.p,
        filtrations: ledger.filtrations.len(),
        identities: ledger.identities.len(),
        chains: ledger.chains.len(),
        derived,
        coverage_missing,
        coverage_duplicated,
        coverage_unexpected,
        failures,
        passed,
    })
}

/// Verify the shipped ledger for `p`.
pub fn verify_symbolic(p: u32) -> Result<SymbolicReport> {
    verify_ledger(&builtin_ledger(p)?)
}
