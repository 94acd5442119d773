//! Structural data for the principal weight-two block of `k S_{2p}` and its
//! tensor-space quotient, stored as versioned JSON and checked symbolically
//! (for odd p up to 13) or against exact computations (p = 3).

mod exact;
mod generate;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::BlockLabel;

pub use exact::{verify_exact_ledger_p3, verify_exact_p3, ExactEntryReport, ExactReport};
pub use generate::{coverage_manifest, generate_ledger};
pub use verify::{verify_ledger, verify_symbolic, EntryFailure, SymbolicReport};

pub const LEDGER_SCHEMA: &str = "1";
pub const SUPPORTED_PRIMES: [u32; 5] = [3, 5, 7, 11, 13];

/// A module named in the ledger.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Subject {
    Specht(BlockLabel),
    /// Projective cover over the group-algebra block.
    Projective(BlockLabel),
    /// Projective cover over the tensor-space quotient of the block.
    QuotientProjective(BlockLabel),
    Young(BlockLabel),
    /// Brauer-induced module with the first label on top and the second below.
    Induced(BlockLabel, BlockLabel),
    /// `Ω^j Y^λ` over the quotient.
    Syzygy(usize, BlockLabel),
    /// Image of the r-th differential in the coresolution of the singular Specht module.
    Image(usize),
    /// The part of `Image(r)` above its distinguished Specht submodule.
    Remainder(usize),
}

impl Subject {
    pub fn label(&self) -> Option<BlockLabel> {
        match *self {
            Subject::Specht(l)
            | Subject::Projective(l)
            | Subject::QuotientProjective(l)
            | Subject::Young(l)
            | Subject::Syzygy(_, l) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Specht(l) => write!(f, "S{l}"),
            Subject::Projective(l) => write!(f, "P{l}"),
            Subject::QuotientProjective(l) => write!(f, "P0{l}"),
            Subject::Young(l) => write!(f, "Y{l}"),
            Subject::Induced(a, b) => write!(f, "U{a}/{b}"),
            Subject::Syzygy(j, l) => write!(f, "Om{j}Y{l}"),
            Subject::Image(r) => write!(f, "Z{r}"),
            Subject::Remainder(r) => write!(f, "W{r}"),
        }
    }
}

impl FromStr for Subject {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("subject {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let t = s.trim();
        if let Some(rest) = t.strip_prefix("Om") {
            let i = rest.find('Y').ok_or_else(bad)?;
            return Ok(Subject::Syzygy(num(&rest[..i])?, rest[i + 1..].parse()?));
        }
        if let Some(rest) = t.strip_prefix("P0") {
            return Ok(Subject::QuotientProjective(rest.parse()?));
        }
        if let Some(rest) = t.strip_prefix('U') {
            let (a, b) = rest.split_once('/').ok_or_else(bad)?;
            return Ok(Subject::Induced(a.parse()?, b.parse()?));
        }
        let (head, rest) = t.split_at(t.chars().next().ok_or_else(bad)?.len_utf8());
        match head {
            "S" => Ok(Subject::Specht(rest.parse()?)),
            "P" => Ok(Subject::Projective(rest.parse()?)),
            "Y" => Ok(Subject::Young(rest.parse()?)),
            "Z" => Ok(Subject::Image(num(rest)?)),
            "W" => Ok(Subject::Remainder(num(rest)?)),
            _ => Err(bad()),
        }
    }
}

impl TryFrom<String> for Subject {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Subject> for String {
    fn from(s: Subject) -> String {
        s.to_string()
    }
}

/// Specht filtration of a module, layers listed from the top down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiltrationEntry {
    pub subject: Subject,
    pub layers: Vec<Vec<BlockLabel>>,
    pub dimension: u128,
    pub shape_note: String,
    pub source: String,
}

impl FiltrationEntry {
    pub fn specht_multiset(&self) -> Multiset {
        let mut m = Multiset::default();
        for l in self.layers.iter().flatten() {
            m.add(*l, 1);
        }
        m
    }
}

/// Two formal sums of subjects claimed isomorphic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityEntry {
    pub left: Vec<Subject>,
    pub right: Vec<Subject>,
    pub source: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChainRole {
    /// `0 → P0 → P → … → P → Y → 0`: a projective resolution of the last term.
    Resolution,
    /// `0 → S → R_0 → … → R_{2p-2} → 0` with Young terms.
    SpechtCoresolution,
    Plain,
}

/// An exact sequence, terms listed left to right (the zero ends omitted).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainEntry {
    pub name: String,
    pub terms: Vec<Vec<Subject>>,
    pub exact: bool,
    pub role: ChainRole,
    pub source: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ledger {
    pub schema: String,
    pub p: u32,
    pub filtrations: Vec<FiltrationEntry>,
    pub identities: Vec<IdentityEntry>,
    pub chains: Vec<ChainEntry>,
}

impl Ledger {
    pub fn sources(&self) -> Vec<&str> {
        self.filtrations
            .iter()
            .map(|f| f.source.as_str())
            .chain(self.identities.iter().map(|i| i.source.as_str()))
            .chain(self.chains.iter().map(|c| c.source.as_str()))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("ledger serialises") + "\n"
    }

    pub fn from_json(s: &str) -> Result<Ledger> {
        let l: Ledger = serde_json::from_str(s).map_err(|e| Error::Ledger(e.to_string()))?;
        if l.schema != LEDGER_SCHEMA {
            return Err(Error::Ledger(format!("unknown schema {}", l.schema)));
        }
        Ok(l)
    }
}

/// Signed multiset of block labels (a class in the Grothendieck group
/// spanned by Specht modules).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Multiset(pub BTreeMap<BlockLabel, i64>);

impl Multiset {
    pub fn add(&mut self, l: BlockLabel, k: i64) {
        let e = self.0.entry(l).or_insert(0);
        *e += k;
        if *e == 0 {
            self.0.remove(&l);
        }
    }

    pub fn add_all(&mut self, other: &Multiset, sign: i64) {
        for (l, k) in &other.0 {
            self.add(*l, sign * k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.0.values().all(|&k| k > 0)
    }

    pub fn count(&self, l: BlockLabel) -> i64 {
        self.0.get(&l).copied().unwrap_or(0)
    }

    pub fn labels(&self) -> impl Iterator<Item = BlockLabel> + '_ {
        self.0.keys().copied()
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> =
            self.0.iter().map(|(l, k)| if *k == 1 { l.to_string() } else { format!("{k}{l}") }).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub(crate) fn show(terms: &[Subject]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" + ")
}

const DATA: [(u32, &str); 5] = [
    (3, include_str!("../../data/ledger_p3.json")),
    (5, include_str!("../../data/ledger_p5.json")),
    (7, include_str!("../../data/ledger_p7.json")),
    (11, include_str!("../../data/ledger_p11.json")),
    (13, include_str!("../../data/ledger_p13.json")),
];

/// The shipped ledger for an odd prime `3 ≤ p ≤ 13`.
pub fn builtin_ledger(p: u32) -> Result<Ledger> {
    let (_, s) = DATA
        .iter()
        .find(|(q, _)| *q == p)
        .ok_or_else(|| Error::Unsupported(format!("no ledger for p = {p}; supported: 3, 5, 7, 11, 13")))?;
    Ledger::from_json(s)
}
