//! Partitions, abacus displays and the labelling of the weight-two principal block.

use crate::error::{Error, Result};
use itertools::Itertools;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

/// Weakly decreasing list of positive parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        parts.retain(|&x| x > 0);
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros, so any composition becomes a partition.
    pub fn from_composition(parts: &[usize]) -> Self {
        let mut v: Vec<usize> = parts.iter().copied().filter(|&x| x > 0).collect();
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition(v)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
    pub fn len(&self) -> usize {
        self.0.len()
    }
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((1..=first).map(|j| self.0.iter().filter(|&&x| x >= j).count()).collect())
    }

    /// Cells (row, column) in reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        self.0.iter().enumerate().flat_map(|(r, &l)| (0..l).map(move |c| (r, c))).collect()
    }

    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        self.cells()
            .into_iter()
            .map(|(r, c)| (self.0[r] - c - 1) + (conj.0[c] - r - 1) + 1)
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.iter().join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition(Vec::new()));
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<String> for Partition {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Partition> for String {
    fn from(p: Partition) -> String {
        p.to_string()
    }
}

/// Convenience constructor for literals; panics on invalid input.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

/// Bead positions of an abacus with `prime` runners.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbacusDisplay {
    pub prime: u32,
    pub bead_positions: BTreeSet<usize>,
}

impl AbacusDisplay {
    pub fn beads(&self) -> usize {
        self.bead_positions.len()
    }

    /// Runner of a position, numbered from 1.
    pub fn runner(&self, q: usize) -> usize {
        q % self.prime as usize + 1
    }

    /// Rows (from 0) occupied on the given runner.
    pub fn runner_rows(&self, runner: usize) -> Vec<usize> {
        let p = self.prime as usize;
        self.bead_positions.iter().filter(|&&q| q % p + 1 == runner).map(|&q| q / p).collect()
    }

    /// True when every runner carries exactly two beads (the weight-two block display).
    pub fn is_principal_block_display(&self) -> bool {
        let p = self.prime as usize;
        self.beads() == 2 * p && (1..=p).all(|r| self.runner_rows(r).len() == 2)
    }

    /// Pushes every bead up its runner as far as it goes; returns the display and
    /// the number of single-step moves made.
    pub fn slide_up(&self) -> (AbacusDisplay, usize) {
        let p = self.prime as usize;
        let mut out = BTreeSet::new();
        let mut moves = 0;
        for r in 1..=p {
            for (k, row) in self.runner_rows(r).into_iter().enumerate() {
                moves += row - k;
                out.insert(k * p + r - 1);
            }
        }
        (AbacusDisplay { prime: self.prime, bead_positions: out }, moves)
    }

    pub fn partition(&self) -> Partition {
        partition_of(&self.bead_positions)
    }
}

/// Partition whose β-set (with `beads.len()` beads) is the given set.
pub fn partition_of(beads: &BTreeSet<usize>) -> Partition {
    let b = beads.len();
    let parts = beads.iter().rev().enumerate().map(|(i, &beta)| beta + i + 1 - b).collect();
    Partition::new(parts).expect("β-sets give partitions")
}

fn beta_with(lam: &Partition, beads: usize) -> Vec<usize> {
    (1..=beads)
        .map(|i| lam.0.get(i - 1).copied().unwrap_or(0) + beads - i)
        .collect()
}

/// β_i = λ_i − i + 2p, for i = 1..2p.
pub fn beta_numbers(lam: &Partition, p: u32) -> Result<Vec<usize>> {
    let n = 2 * p as usize;
    if lam.size() != n {
        return Err(Error::SizeMismatch { expected: n, got: lam.size() });
    }
    Ok(beta_with(lam, n))
}

pub fn abacus_display(lam: &Partition, p: u32) -> Result<AbacusDisplay> {
    Ok(AbacusDisplay { prime: p, bead_positions: beta_numbers(lam, p)?.into_iter().collect() })
}

pub fn p_core_and_weight(lam: &Partition, p: u32) -> (Partition, usize) {
    let pu = p as usize;
    let beads = lam.len().div_ceil(pu).max(1) * pu;
    let ab = AbacusDisplay { prime: p, bead_positions: beta_with(lam, beads).into_iter().collect() };
    let (core, w) = ab.slide_up();
    (core.partition(), w)
}

pub fn is_p_core(lam: &Partition, p: u32) -> bool {
    p_core_and_weight(lam, p).1 == 0
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum BlockLabel {
    /// One bead two rows down on runner v.
    Single(usize),
    /// Beads one row down on runners u > v.
    Pair(usize, usize),
    /// A gap followed by two consecutive beads on runner v.
    Repeat(usize),
}

impl BlockLabel {
    pub fn validate(&self, p: u32) -> Result<()> {
        let p = p as usize;
        let ok = match *self {
            BlockLabel::Single(v) | BlockLabel::Repeat(v) => (1..=p).contains(&v),
            BlockLabel::Pair(u, v) => 1 <= v && v < u && u <= p,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidLabel(format!("{self} for p = {p}")))
        }
    }

    /// `<u,v>` with u ≥ v collapses to a repeat label when u = v.
    pub fn pair(u: usize, v: usize) -> BlockLabel {
        match u.cmp(&v) {
            Ordering::Equal => BlockLabel::Repeat(u),
            Ordering::Greater => BlockLabel::Pair(u, v),
            Ordering::Less => BlockLabel::Pair(v, u),
        }
    }

    pub fn all(p: u32) -> Vec<BlockLabel> {
        let p = p as usize;
        let mut v: Vec<_> = (1..=p).rev().map(BlockLabel::Single).collect();
        for u in (1..=p).rev() {
            for w in (1..u).rev() {
                v.push(BlockLabel::Pair(u, w));
            }
        }
        v.extend((1..=p).rev().map(BlockLabel::Repeat));
        v
    }
}

impl fmt::Display for BlockLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BlockLabel::Single(v) => write!(f, "<{v}>"),
            BlockLabel::Pair(u, v) => write!(f, "<{u},{v}>"),
            BlockLabel::Repeat(v) => write!(f, "<{v},{v}>"),
        }
    }
}

impl FromStr for BlockLabel {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let inner = t
            .strip_prefix('<')
            .and_then(|x| x.strip_suffix('>'))
            .or_else(|| t.strip_prefix('⟨').and_then(|x| x.strip_suffix('⟩')))
            .ok_or_else(|| Error::Parse(format!("label {s:?}")))?;
        let nums = inner
            .split(',')
            .map(|x| x.trim().parse::<usize>().map_err(|e| Error::Parse(format!("label {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        match nums[..] {
            [v] => Ok(BlockLabel::Single(v)),
            [u, v] if u == v => Ok(BlockLabel::Repeat(v)),
            [u, v] if u > v => Ok(BlockLabel::Pair(u, v)),
            _ => Err(Error::InvalidLabel(s.to_string())),
        }
    }
}

impl TryFrom<String> for BlockLabel {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<BlockLabel> for String {
    fn from(l: BlockLabel) -> String {
        l.to_string()
    }
}

pub fn block_label(lam: &Partition, p: u32) -> Result<BlockLabel> {
    let ab = abacus_display(lam, p)?;
    let (core, w) = p_core_and_weight(lam, p);
    if !core.is_empty() || w != 2 || !ab.is_principal_block_display() {
        return Err(Error::NotPrincipalBlock(lam.to_string()));
    }
    let pu = p as usize;
    let mut singles = Vec::new();
    let mut pairs = Vec::new();
    let mut repeats = Vec::new();
    for r in 1..=pu {
        match ab.runner_rows(r)[..] {
            [0, 1] => {}
            [0, 3] => singles.push(r),
            [0, 2] => pairs.push(r),
            [1, 2] => repeats.push(r),
            _ => return Err(Error::NotPrincipalBlock(lam.to_string())),
        }
    }
    match (&singles[..], &pairs[..], &repeats[..]) {
        ([v], [], []) => Ok(BlockLabel::Single(*v)),
        ([], [v, u], []) => Ok(BlockLabel::Pair(*u, *v)),
        ([], [], [v]) => Ok(BlockLabel::Repeat(*v)),
        _ => Err(Error::NotPrincipalBlock(lam.to_string())),
    }
}

pub fn label_to_partition(label: BlockLabel, p: u32) -> Result<Partition> {
    label.validate(p)?;
    let pu = p as usize;
    let mut beads: BTreeSet<usize> = (0..2 * pu).collect();
    let mut shift = |runner: usize, from: usize, to: usize| {
        beads.remove(&(from * pu + runner - 1));
        beads.insert(to * pu + runner - 1);
    };
    match label {
        BlockLabel::Single(v) => shift(v, 1, 3),
        BlockLabel::Pair(u, v) => {
            shift(u, 1, 2);
            shift(v, 1, 2);
        }
        BlockLabel::Repeat(v) => {
            shift(v, 1, 2);
            shift(v, 0, 1);
        }
    }
    Ok(partition_of(&beads))
}

pub fn is_p_regular(lam: &Partition, p: u32) -> bool {
    lam.0.iter().dedup_with_count().all(|(c, _)| c < p as usize)
}

pub fn dominance_leq(a: &Partition, b: &Partition) -> Result<bool> {
    if a.size() != b.size() {
        return Err(Error::SizeMismatch { expected: a.size(), got: b.size() });
    }
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..n {
        sa += a.0.get(i).copied().unwrap_or(0);
        sb += b.0.get(i).copied().unwrap_or(0);
        if sa > sb {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Strict dominance `a < b`.
pub fn dominance_lt(a: &Partition, b: &Partition) -> Result<bool> {
    Ok(a != b && dominance_leq(a, b)?)
}

/// Undirected Gabriel-quiver prediction for the principal block.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockQuiver {
    pub prime: u32,
    pub vertices: Vec<BlockLabel>,
    pub edges: Vec<(BlockLabel, BlockLabel)>,
}

impl BlockQuiver {
    pub fn has_edge(&self, a: BlockLabel, b: BlockLabel) -> bool {
        self.edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a))
    }

    pub fn neighbours(&self, a: BlockLabel) -> Vec<BlockLabel> {
        self.edges
            .iter()
            .filter_map(|&(x, y)| if x == a { Some(y) } else if y == a { Some(x) } else { None })
            .collect()
    }
}

/// Replaces a repeat label by the regular label it is linked to in the mesh,
/// dropping singular endpoints.
fn mesh_target(l: BlockLabel, p: u32) -> Option<BlockLabel> {
    let l = match l {
        BlockLabel::Repeat(v) if v >= 3 => BlockLabel::Pair(v, v - 2),
        BlockLabel::Repeat(_) => return None,
        other => other,
    };
    let lam = label_to_partition(l, p).ok()?;
    is_p_regular(&lam, p).then_some(l)
}

pub fn principal_block_quiver(p: u32) -> Result<BlockQuiver> {
    if p < 3 || !crate::linalg::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let pu = p as usize;
    let vertices: Vec<BlockLabel> = BlockLabel::all(p)
        .into_iter()
        .filter(|&l| label_to_partition(l, p).map(|lam| is_p_regular(&lam, p)).unwrap_or(false))
        .collect();
    let mut edges = Vec::new();
    let mut push = |a: BlockLabel, b: Option<BlockLabel>| {
        if let Some(b) = b {
            if vertices.contains(&a) && vertices.contains(&b) {
                edges.push((a, b));
            }
        }
    };
    for u in (2..=pu).rev() {
        push(BlockLabel::Single(u), Some(BlockLabel::Single(u - 1)));
    }
    for u in (1..=pu).rev() {
        push(BlockLabel::Single(u), mesh_target(BlockLabel::pair(pu, u), p));
    }
    for u in (3..=pu).rev() {
        for v in (2..u).rev() {
            push(BlockLabel::Pair(u, v), Some(BlockLabel::Pair(u, v - 1)));
        }
    }
    for u in (2..=pu).rev() {
        for v in (1..u).rev() {
            push(BlockLabel::Pair(u, v), mesh_target(BlockLabel::pair(u - 1, v), p));
        }
    }
    Ok(BlockQuiver { prime: p, vertices, edges })
}

fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// Number of standard tableaux via the hook-length formula.
pub fn std_tableaux_count(lam: &Partition) -> u128 {
    let hooks: u128 = lam.hook_lengths().into_iter().map(|h| h as u128).product();
    factorial(lam.size()) / hooks
}

/// Same count by recursively removing the cell that holds the largest entry.
pub fn std_tableaux_count_by_removal(lam: &Partition) -> u128 {
    if lam.size() == 0 {
        return 1;
    }
    let parts = lam.parts();
    (0..parts.len())
        .filter(|&i| i + 1 == parts.len() || parts[i + 1] < parts[i])
        .map(|i| {
            let mut q = parts.to_vec();
            q[i] -= 1;
            std_tableaux_count_by_removal(&Partition::from_composition(&q))
        })
        .sum()
}

/// Dimension of the Young permutation module: the multinomial coefficient.
pub fn young_perm_dim(lam: &Partition) -> u128 {
    lam.parts().iter().fold(factorial(lam.size()), |acc, &x| acc / factorial(x))
}

/// All partitions of `d`, lexicographically decreasing.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    partitions_in(d.max(1), d)
}

/// Partitions of `d` with at most `n` parts, lexicographically decreasing.
pub fn partitions_in(n: usize, d: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, slots: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if slots == 0 {
            return;
        }
        for x in (1..=max.min(rem)).rev() {
            cur.push(x);
            rec(rem - x, x, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(d, d, n, &mut Vec::new(), &mut out);
    out
}

/// Partitions of `2p` in the principal block (empty core, weight two).
pub fn principal_block(p: u32) -> Vec<Partition> {
    partitions_of(2 * p as usize)
        .into_iter()
        .filter(|l| p_core_and_weight(l, p) == (Partition::default(), 2))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let l: Partition = "8,1,1".parse().unwrap();
        assert_eq!(l, part(&[8, 1, 1]));
        assert_eq!(l.to_string(), "8,1,1");
        assert!("1,2".parse::<Partition>().is_err());
        let b: BlockLabel = "<3,2>".parse().unwrap();
        assert_eq!(b, BlockLabel::Pair(3, 2));
        assert_eq!("<2,2>".parse::<BlockLabel>().unwrap(), BlockLabel::Repeat(2));
        assert!("<1,2>".parse::<BlockLabel>().is_err());
    }

    #[test]
    fn conjugate_and_hooks() {
        assert_eq!(part(&[3, 2, 1]).conjugate(), part(&[3, 2, 1]));
        assert_eq!(part(&[4, 1]).conjugate(), part(&[2, 1, 1, 1]));
        let mut h = part(&[3, 2, 1]).hook_lengths();
        h.sort();
        assert_eq!(h, vec![1, 1, 1, 3, 3, 5]);
    }

    #[test]
    fn block_counts() {
        assert_eq!(principal_block(3).len(), 9);
        for p in [3u32, 5, 7] {
            let labels = BlockLabel::all(p);
            assert_eq!(principal_block(p).len(), labels.len());
        }
    }
}
