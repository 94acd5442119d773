//! Expansion of the index-ranged structural statements into concrete
//! entries for one prime. The output is what the shipped JSON files hold.

use std::collections::BTreeMap;

use super::{ChainEntry, ChainRole, FiltrationEntry, IdentityEntry, Ledger, Subject, LEDGER_SCHEMA, SUPPORTED_PRIMES};
use crate::error::{Error, Result};
use crate::partition::{label_to_partition, std_tableaux_count, BlockLabel};

fn sg(v: usize) -> BlockLabel {
    BlockLabel::Single(v)
}

fn pr(u: usize, v: usize) -> BlockLabel {
    BlockLabel::pair(u, v)
}

use Subject::{Image, Induced, Projective as P, QuotientProjective as P0, Remainder, Specht as S, Syzygy, Young as Y};

struct Builder {
    p: usize,
    ledger: Ledger,
}

impl Builder {
    fn filtration(&mut self, subject: Subject, layers: Vec<Vec<BlockLabel>>, shape: &str, source: String) {
        let dimension = layers
            .iter()
            .flatten()
            .map(|l| std_tableaux_count(&label_to_partition(*l, self.p as u32).expect("valid label")))
            .sum();
        self.ledger.filtrations.push(FiltrationEntry { subject, layers, dimension, shape_note: shape.into(), source });
    }

    fn identity(&mut self, left: Vec<Subject>, right: Vec<Subject>, source: String) {
        self.ledger.identities.push(IdentityEntry { left, right, source });
    }

    fn chain(&mut self, name: String, terms: Vec<Vec<Subject>>, role: ChainRole, source: String) {
        self.ledger.chains.push(ChainEntry { name, terms, exact: true, role, source });
    }

    fn resolution(&mut self, name: &str, start: Subject, middle: Vec<Subject>, young: Subject, source: String) {
        let mut terms = vec![vec![start]];
        terms.extend(middle.into_iter().map(|s| vec![s]));
        terms.push(vec![young]);
        self.chain(name.to_string(), terms, ChainRole::Resolution, source);
    }
}

fn projective_covers(b: &mut Builder) {
    let p = b.p;
    b.filtration(
        P(sg(p)),
        vec![vec![sg(p)], vec![sg(p - 1), pr(p, p - 2)], vec![pr(p - 1, p - 2)]],
        "single Brauer-induced quotient U<p>/<p-1>",
        "pim/top".into(),
    );
    for s in 2..p {
        b.filtration(
            P(sg(s)),
            vec![vec![sg(s)], vec![sg(s - 1), pr(p, s)], vec![pr(p, s - 1)]],
            "two Brauer-induced quotients",
            format!("pim/single/{s}"),
        );
    }
    for s in 3..=p {
        b.filtration(
            P(pr(s, 1)),
            vec![vec![pr(s, 1)], vec![pr(s - 1, 1), pr(s, s)], vec![pr(s - 1, s - 1)]],
            "two Brauer-induced quotients",
            format!("pim/hook/{s}"),
        );
    }
    for s in 3..p {
        b.filtration(
            P(pr(s + 1, s)),
            vec![vec![pr(s + 1, s)], vec![pr(s + 1, s - 1), pr(s, s - 2)], vec![pr(s - 1, s - 2)]],
            "single Brauer-induced quotient U<s+1,s>/<s+1,s-1>",
            format!("pim/adjacent/{s}"),
        );
    }
    b.filtration(
        P(pr(3, 2)),
        vec![vec![pr(3, 2)], vec![pr(3, 1), pr(2, 2)], vec![pr(1, 1)]],
        "single Brauer-induced quotient U<3,2>/<3,1>",
        "pim/corner".into(),
    );
    for r in 4..=p {
        for s in 2..r - 1 {
            b.filtration(
                P(pr(r, s)),
                vec![vec![pr(r, s)], vec![pr(r - 1, s), pr(r, s - 1)], vec![pr(r - 1, s - 1)]],
                "two Brauer-induced quotients",
                format!("pim/generic/{r},{s}"),
            );
        }
    }
    b.filtration(
        P(sg(1)),
        vec![vec![sg(1)], vec![pr(p, 1)], vec![pr(p, p)]],
        "uniserial Specht filtration, induced from a simple projective",
        "pim/one".into(),
    );
}

fn quotient_projectives(b: &mut Builder) {
    let p = b.p;
    for s in 2..=p {
        b.identity(vec![P0(sg(s))], vec![P(sg(s))], format!("quotient-pim/unchanged-single/{s}"));
    }
    for u in 3..=p {
        for v in 2..u {
            if (u, v) != (3, 2) {
                b.identity(vec![P0(pr(u, v))], vec![P(pr(u, v))], format!("quotient-pim/unchanged-pair/{u},{v}"));
            }
        }
    }
    for s in 3..=p {
        b.filtration(
            P0(pr(s, 1)),
            vec![vec![pr(s, 1)], vec![pr(s - 1, 1)]],
            "uniserial",
            format!("quotient-pim/hook/{s}"),
        );
    }
    b.filtration(P0(pr(3, 2)), vec![vec![pr(3, 2)], vec![pr(3, 1)]], "uniserial", "quotient-pim/corner".into());
    b.filtration(P0(sg(1)), vec![vec![sg(1)], vec![pr(p, 1)]], "uniserial", "quotient-pim/one".into());
}

fn projective_young_modules(b: &mut Builder) {
    let p = b.p;
    for bb in 2..=p {
        for a in bb + 2..=p {
            b.identity(vec![P(pr(a, bb))], vec![Y(pr(a - 1, bb - 1))], format!("young-pim/gap/{a},{bb}"));
        }
    }
    for bb in 3..p {
        b.identity(vec![P(pr(bb + 1, bb))], vec![Y(pr(bb - 1, bb - 2))], format!("young-pim/adjacent/{},{bb}", bb + 1));
    }
    for a in 2..p {
        b.identity(vec![P(sg(a))], vec![Y(pr(p, a - 1))], format!("young-pim/single/{a}"));
    }
    b.identity(vec![P(sg(p))], vec![Y(pr(p - 1, p - 2))], "young-pim/top".into());
}

fn non_projective_young_modules(b: &mut Builder) {
    let p = b.p;
    b.filtration(Y(sg(p)), vec![vec![sg(p)]], "trivial module", "young/trivial".into());
    b.filtration(Y(pr(p, p - 1)), vec![vec![sg(p - 1)], vec![pr(p, p - 1)]], "uniserial", "young/top-pair".into());
    for a in 1..p {
        b.filtration(Y(sg(a)), vec![vec![sg(a + 1)], vec![sg(a)]], "Brauer induced", format!("young/single/{a}"));
    }
}

fn resolutions(b: &mut Builder) {
    let p = b.p;
    b.resolution(
        "resolution of Y<p,p-1>",
        P0(sg(1)),
        (2..p).map(|s| P(sg(s))).collect(),
        Y(pr(p, p - 1)),
        "resolution/one".into(),
    );
    let mut mid: Vec<Subject> = (4..=p).map(|u| P(pr(u, 2))).collect();
    mid.push(P(sg(2)));
    b.resolution("resolution of Y<1>", P0(pr(3, 2)), mid, Y(sg(1)), "resolution/corner".into());
    for a in 3..=p.saturating_sub(3) {
        let mut mid: Vec<Subject> = (2..a).map(|v| P(pr(a + 1, v))).collect();
        mid.extend((a + 2..=p).map(|u| P(pr(u, a + 1))));
        mid.push(P(sg(a + 1)));
        b.resolution(&format!("resolution of Y<{a}>"), P0(pr(a + 1, 1)), mid, Y(sg(a)), format!("resolution/hook/{a}"));
    }
    let mut mid: Vec<Subject> = (4..=p).map(|u| P(pr(u, 3))).collect();
    mid.push(P(sg(3)));
    b.resolution("resolution of Y<2>", P0(pr(3, 1)), mid, Y(sg(2)), "resolution/hook-two".into());
    let mut mid: Vec<Subject> = (2..=p - 3).map(|v| P(pr(p - 1, v))).collect();
    mid.push(P(pr(p, p - 1)));
    mid.push(P(sg(p - 1)));
    b.resolution(
        "resolution of Y<p-2>",
        P0(pr(p - 1, 1)),
        mid,
        Y(sg(p - 2)),
        "resolution/hook-penultimate".into(),
    );
    let mut mid: Vec<Subject> = (2..=p - 2).map(|v| P(pr(p, v))).collect();
    mid.push(P(sg(p)));
    b.resolution("resolution of Y<p-1>", P0(pr(p, 1)), mid, Y(sg(p - 1)), "resolution/hook-last".into());

    for a in 2..p {
        b.identity(vec![Syzygy(p - 2, sg(a))], vec![P0(pr(a + 1, 1))], format!("syzygy/hook/{a}"));
    }
    b.identity(vec![Syzygy(p - 2, sg(1))], vec![P0(pr(3, 2))], "syzygy/corner".into());
    b.identity(vec![Syzygy(p - 2, pr(p, p - 1))], vec![P0(sg(1))], "syzygy/one".into());
}

fn small_prime_data(b: &mut Builder) {
    b.identity(vec![P(sg(3))], vec![Y(pr(2, 1))], "small/pim-young/3".into());
    b.identity(vec![P(sg(2))], vec![Y(pr(3, 1))], "small/pim-young/2".into());
    let cases = [(pr(3, 2), pr(3, 1), sg(1), "corner"), (pr(3, 1), pr(2, 1), sg(2), "hook"), (sg(1), pr(3, 1), pr(3, 2), "one")];
    for (top, bottom, young, key) in cases {
        b.identity(vec![P0(top)], vec![Induced(top, bottom)], format!("small/quotient-pim/{key}"));
        b.identity(vec![P0(top)], vec![Syzygy(1, young)], format!("small/syzygy/{key}"));
    }
    b.filtration(Y(sg(3)), vec![vec![sg(3)]], "trivial module", "small/young/trivial".into());
    b.filtration(Y(sg(1)), vec![vec![sg(2)], vec![sg(1)]], "uniserial", "small/young/1".into());
    b.filtration(Y(sg(2)), vec![vec![sg(3)], vec![sg(2)]], "uniserial", "small/young/2".into());
    b.filtration(Y(pr(3, 2)), vec![vec![sg(2)], vec![pr(3, 2)]], "uniserial", "small/young/3,2".into());
    b.resolution("resolution of Y<1>", P0(pr(3, 2)), vec![P(sg(2))], Y(sg(1)), "small/resolution/corner".into());
    b.resolution("resolution of Y<2>", P0(pr(3, 1)), vec![P(sg(3))], Y(sg(2)), "small/resolution/hook".into());
    b.resolution("resolution of Y<3,2>", P0(sg(1)), vec![P(sg(2))], Y(pr(3, 2)), "small/resolution/one".into());
}

fn brauer_sequences(b: &mut Builder) {
    let p = b.p;
    for a in 1..=p - 2 {
        b.chain(
            format!("Brauer filtration of Y<{},{a}>", a + 1),
            vec![vec![Induced(pr(a + 2, a), pr(a + 1, a))], vec![Y(pr(a + 1, a))], vec![Syzygy(p - a - 2, sg(a + 1))]],
            ChainRole::Plain,
            format!("brauer-sequence/adjacent/{a}"),
        );
        b.chain(
            format!("Brauer filtration of Y<{},{a}>", a + 2),
            vec![vec![Induced(pr(a + 2, a + 1), pr(a + 2, a))], vec![Y(pr(a + 2, a))], vec![Syzygy(p - a - 2, sg(a))]],
            ChainRole::Plain,
            format!("brauer-sequence/gap/{a}"),
        );
    }
}

/// Distinguished Specht submodule of the r-th image.
fn distinguished(r: usize) -> BlockLabel {
    if r % 2 == 1 {
        let a = r.div_ceil(2);
        pr(a + 2, a)
    } else {
        let a = r / 2;
        pr(a + 2, a + 1)
    }
}

/// The ω shift: non-simple Young pieces vanish, syzygies move up one step.
fn omega_inverse((j, v): (usize, usize), p: usize) -> Result<Option<(usize, usize)>> {
    match j {
        0 if v < p => Ok(None),
        0 => Err(Error::Ledger(format!("cosyzygy of the simple Young module Y<{v}> is not tabulated"))),
        _ => Ok(Some((j - 1, v))),
    }
}

fn piece_subject((j, v): (usize, usize)) -> Subject {
    if j == 0 {
        Y(sg(v))
    } else {
        Syzygy(j, sg(v))
    }
}

fn specht_coresolution(b: &mut Builder) -> Result<()> {
    let p = b.p;
    let resolved: BTreeMap<BlockLabel, Vec<Subject>> = b
        .ledger
        .chains
        .iter()
        .filter(|c| c.role == ChainRole::Resolution)
        .filter_map(|c| match c.terms.last()?.first()? {
            Y(l) => Some((*l, c.terms.iter().map(|t| t[0].clone()).collect())),
            _ => None,
        })
        .collect();
    let hull = |(j, v): (usize, usize)| -> Result<Subject> {
        if j == 0 {
            return Ok(Y(sg(v)));
        }
        let terms = resolved.get(&sg(v)).ok_or_else(|| Error::Ledger(format!("no resolution of Y<{v}>")))?;
        terms.get(p - 1 - j).cloned().ok_or_else(|| Error::Ledger(format!("no hull for Om{j}Y<{v}>")))
    };
    let mut rterms: Vec<Vec<Subject>> = Vec::new();
    let mut pieces: Vec<(usize, usize)> = Vec::new();
    for r in 0..=2 * p - 4 {
        let mut term = vec![Y(distinguished(r))];
        for &pc in &pieces {
            term.push(hull(pc)?);
        }
        rterms.push(term);
        if r == 2 * p - 4 {
            break;
        }
        let a = if r % 2 == 0 { r / 2 + 1 } else { r.div_ceil(2) };
        let fresh = if r % 2 == 0 { (p - a - 2, a + 1) } else { (p - a - 2, a) };
        let shifted: Vec<(usize, usize)> =
            pieces.iter().map(|&pc| omega_inverse(pc, p)).collect::<Result<Vec<_>>>()?.into_iter().flatten().collect();
        let n = r + 1;
        b.chain(
            format!("distinguished Specht in Z{n}"),
            vec![vec![S(distinguished(n))], vec![Image(n)], vec![Remainder(n)]],
            ChainRole::Plain,
            format!("coresolution-step/{n}"),
        );
        b.chain(
            format!("layers of W{n}"),
            vec![vec![piece_subject(fresh)], vec![Remainder(n)], shifted.iter().map(|&pc| piece_subject(pc)).collect()],
            ChainRole::Plain,
            format!("coresolution-remainder/{n}"),
        );
        pieces = std::iter::once(fresh).chain(shifted).collect();
        b.identity(vec![Remainder(n)], pieces.iter().map(|&pc| piece_subject(pc)).collect(), format!("coresolution-pieces/{n}"));
    }
    b.chain(
        "last image before the tail".into(),
        vec![vec![S(pr(p, p - 1))], vec![Image(2 * p - 4)], vec![Y(sg(p - 2))]],
        ChainRole::Plain,
        "coresolution-final".into(),
    );
    b.identity(vec![Image(2 * p - 3)], vec![S(sg(p - 1))], "coresolution-tail/image".into());
    b.chain(
        "tail of the coresolution".into(),
        vec![vec![S(sg(p - 1))], vec![Y(sg(p - 1))], vec![Y(sg(p))]],
        ChainRole::Plain,
        "coresolution-tail/sequence".into(),
    );
    rterms.push(vec![Y(sg(p - 1))]);
    rterms.push(vec![Y(sg(p))]);
    let mut terms = vec![vec![S(pr(2, 1))]];
    terms.extend(rterms);
    b.chain("add-Q coresolution of S<2,1>".into(), terms, ChainRole::SpechtCoresolution, "specht-coresolution".into());
    Ok(())
}

/// Expand every statement for the prime `p`.
pub fn generate_ledger(p: u32) -> Result<Ledger> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(Error::Unsupported(format!("ledger for p = {p}")));
    }
    let mut b = Builder {
        p: p as usize,
        ledger: Ledger { schema: LEDGER_SCHEMA.into(), p, filtrations: vec![], identities: vec![], chains: vec![] },
    };
    projective_covers(&mut b);
    if p == 3 {
        small_prime_data(&mut b);
    } else {
        quotient_projectives(&mut b);
        projective_young_modules(&mut b);
        non_projective_young_modules(&mut b);
        resolutions(&mut b);
    }
    brauer_sequences(&mut b);
    specht_coresolution(&mut b)?;
    Ok(b.ledger)
}

/// Source keys every ledger for `p` must contain exactly once.
pub fn coverage_manifest(p: u32) -> Result<Vec<String>> {
    if !SUPPORTED_PRIMES.contains(&p) {
        return Err(Error::Unsupported(format!("ledger for p = {p}")));
    }
    let p = p as usize;
    let mut keys: Vec<String> = vec!["pim/top".into(), "pim/corner".into(), "pim/one".into()];
    keys.extend((2..p).map(|s| format!("pim/single/{s}")));
    keys.extend((3..=p).map(|s| format!("pim/hook/{s}")));
    keys.extend((3..p).map(|s| format!("pim/adjacent/{s}")));
    keys.extend((4..=p).flat_map(|r| (2..r - 1).map(move |s| format!("pim/generic/{r},{s}"))));
    if p == 3 {
        keys.extend(["small/pim-young/3", "small/pim-young/2"].map(String::from));
        for k in ["corner", "hook", "one"] {
            keys.push(format!("small/quotient-pim/{k}"));
            keys.push(format!("small/syzygy/{k}"));
            keys.push(format!("small/resolution/{k}"));
        }
        keys.extend(["small/young/trivial", "small/young/1", "small/young/2", "small/young/3,2"].map(String::from));
    } else {
        keys.extend((2..=p).map(|s| format!("quotient-pim/unchanged-single/{s}")));
        for u in 3..=p {
            for v in 2..u {
                if (u, v) != (3, 2) {
                    keys.push(format!("quotient-pim/unchanged-pair/{u},{v}"));
                }
            }
        }
        keys.extend((3..=p).map(|s| format!("quotient-pim/hook/{s}")));
        keys.extend(["quotient-pim/corner", "quotient-pim/one"].map(String::from));
        for bb in 2..=p {
            keys.extend((bb + 2..=p).map(|a| format!("young-pim/gap/{a},{bb}")));
        }
        keys.extend((3..p).map(|bb| format!("young-pim/adjacent/{},{bb}", bb + 1)));
        keys.extend((2..p).map(|a| format!("young-pim/single/{a}")));
        keys.push("young-pim/top".into());
        keys.extend(["young/trivial", "young/top-pair"].map(String::from));
        keys.extend((1..p).map(|a| format!("young/single/{a}")));
        keys.extend(
            ["resolution/one", "resolution/corner", "resolution/hook-two", "resolution/hook-penultimate", "resolution/hook-last"]
                .map(String::from),
        );
        keys.extend((3..=p - 3).map(|a| format!("resolution/hook/{a}")));
        keys.extend((2..p).map(|a| format!("syzygy/hook/{a}")));
        keys.extend(["syzygy/corner", "syzygy/one"].map(String::from));
    }
    for a in 1..=p - 2 {
        keys.push(format!("brauer-sequence/adjacent/{a}"));
        keys.push(format!("brauer-sequence/gap/{a}"));
    }
    for n in 1..=2 * p - 4 {
        keys.push(format!("coresolution-step/{n}"));
        keys.push(format!("coresolution-remainder/{n}"));
        keys.push(format!("coresolution-pieces/{n}"));
    }
    keys.extend(
        ["coresolution-final", "coresolution-tail/image", "coresolution-tail/sequence", "specht-coresolution"].map(String::from),
    );
    keys.sort();
    Ok(keys)
}
