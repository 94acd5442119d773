//! Brute-force computations of relative dominant dimension, used to cross-check
//! the minimal approximation chain on small algebras.

use std::sync::Arc;

use crate::algebra::{alg_hom_space, AlgModule, FDAlgebra};
use crate::error::{Error, Result};
use crate::homological::{ext_dims, DimValue};
use crate::linalg::{FpMatrix, SpanTracker};
use crate::rel_homology::{relative_domdim_chain, AddCategory};

/// `Hom_A(M, Q)` as a module over `B = End_A(Q)`, with `Q` itself as a
/// `B`-module and the basis of homomorphisms used.
pub struct HomOverEnd {
    pub end: Arc<FDAlgebra>,
    pub hom: AlgModule,
    pub q: AlgModule,
    pub maps: Vec<FpMatrix>,
}

pub fn hom_as_end_module(m: &AlgModule, q: &AlgModule) -> Result<HomOverEnd> {
    let p = q.prime();
    let ends = alg_hom_space(q, q);
    let (b, src) = FDAlgebra::from_spanning_matrices(p, q.dim(), &ends, "End(Q)")?;
    let end = Arc::new(b);
    let gens: Vec<FpMatrix> = src.iter().map(|&s| ends[s].clone()).collect();
    let q_over_b = AlgModule::with_dim(&end, q.dim(), gens.clone(), "Q")?;
    let maps = alg_hom_space(m, q);
    let mut tracker = SpanTracker::new(p, q.dim() * m.dim());
    for f in &maps {
        tracker.insert(f.entries());
    }
    let coords = |x: &FpMatrix| tracker.coordinates(x.entries()).ok_or_else(|| Error::Unsupported("Hom(M,Q) not closed under End(Q)".into()));
    let acts = gens
        .iter()
        .map(|g| {
            let cols = maps.iter().map(|f| coords(&g.mul(f))).collect::<Result<Vec<_>>>()?;
            Ok(FpMatrix::from_columns(p, maps.len(), &cols))
        })
        .collect::<Result<Vec<_>>>()?;
    let hom = AlgModule::with_dim(&end, maps.len(), acts, "Hom(M,Q)")?;
    Ok(HomOverEnd { end, hom, q: q_over_b, maps })
}

/// Relative dominant dimension through the double-centraliser criterion over
/// `End(Q)`: at least 1 when `Q` cogenerates `M`, at least 2 when `M` is
/// recovered from `Hom(M, Q)`, then one more per vanishing Ext group.
pub fn domdim_by_double_centraliser(m: &AlgModule, q: &AlgModule, cutoff: usize) -> Result<DimValue> {
    let h = hom_as_end_module(m, q)?;
    if h.maps.is_empty() {
        return Ok(DimValue::Finite { value: 0 });
    }
    let eval = FpMatrix::vstack_all(m.prime(), m.dim(), &h.maps);
    if eval.rank() < m.dim() {
        return Ok(DimValue::Finite { value: 0 });
    }
    if alg_hom_space(&h.hom, &h.q).len() != m.dim() {
        return Ok(DimValue::Finite { value: 1 });
    }
    let e = ext_dims(&h.hom, &h.q, cutoff.saturating_sub(2))?;
    Ok(match e[1..].iter().position(|&d| d != 0) {
        Some(i) => DimValue::Finite { value: i + 2 },
        None => DimValue::AtLeast { bound: cutoff },
    })
}

/// The coresolution built from the approximation by every homomorphism into
/// each summand, with no minimisation.
pub fn domdim_by_universal_chain(m: &AlgModule, q_parts: &[AlgModule], cutoff: usize) -> Result<DimValue> {
    let p = m.prime();
    let mut cur = m.clone();
    for step in 0..cutoff {
        if cur.dim() == 0 {
            return Ok(DimValue::AtLeast { bound: cutoff });
        }
        let mut maps = Vec::new();
        let mut pieces = Vec::new();
        for qj in q_parts {
            for f in alg_hom_space(&cur, qj) {
                maps.push(f);
                pieces.push(qj.clone());
            }
        }
        if pieces.is_empty() {
            return Ok(DimValue::Finite { value: step });
        }
        let g = FpMatrix::vstack_all(p, cur.dim(), &maps);
        if g.rank() < cur.dim() {
            return Ok(DimValue::Finite { value: step });
        }
        let x = AlgModule::direct_sum_all(&m.alg, &pieces);
        cur = x.quotient(&g.column_basis())?.0;
    }
    Ok(DimValue::AtLeast { bound: cutoff })
}

/// Caps a value at `cutoff` so that computations run to different depths compare.
pub fn cap(v: DimValue, cutoff: usize) -> DimValue {
    match v {
        DimValue::Finite { value } if value >= cutoff => DimValue::AtLeast { bound: cutoff },
        DimValue::AtLeast { bound } if bound >= cutoff => DimValue::AtLeast { bound: cutoff },
        other => other,
    }
}

/// The three computations of relative dominant dimension on one pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeWay {
    pub minimal: DimValue,
    pub universal: DimValue,
    pub centraliser: DimValue,
    /// Depth to which the unminimised chain was followed.
    pub short: usize,
    pub cutoff: usize,
}

impl ThreeWay {
    pub fn agree(&self) -> bool {
        cap(self.minimal, self.short) == cap(self.universal, self.short)
            && cap(self.minimal, self.cutoff) == cap(self.centraliser, self.cutoff)
    }
}

/// Runs all three; the unminimised chain grows quickly, so it stops after four steps.
pub fn domdim_three_ways(m: &AlgModule, q: &AlgModule, cutoff: usize, seed: u64) -> Result<ThreeWay> {
    let cat = AddCategory::new(q, seed)?;
    let minimal = relative_domdim_chain(m, &cat, cutoff)?.value;
    let short = cutoff.min(4);
    let universal = domdim_by_universal_chain(m, &cat.parts, short)?;
    let centraliser = domdim_by_double_centraliser(m, q, cutoff)?;
    Ok(ThreeWay { minimal, universal, centraliser, short, cutoff })
}

pub fn matrix_unit(p: u32, n: usize, i: usize, j: usize) -> FpMatrix {
    let mut m = FpMatrix::zeros(p, n, n);
    m.set(i, j, 1);
    m
}

/// Incidence algebra of the order on `0..n` generated by the relations
/// `i < j` switched on in `relations` (read cyclically), closed transitively.
pub fn incidence_algebra(p: u32, n: usize, relations: &[bool]) -> Result<Arc<FDAlgebra>> {
    let mut le = vec![vec![false; n]; n];
    let mut k = 0;
    for i in 0..n {
        le[i][i] = true;
        for j in i + 1..n {
            le[i][j] = !relations.is_empty() && relations[k % relations.len()];
            k += 1;
        }
    }
    for m in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i][m] && le[m][j] {
                    le[i][j] = true;
                }
            }
        }
    }
    let mats: Vec<FpMatrix> = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| le[i][j])
        .map(|(i, j)| matrix_unit(p, n, i, j))
        .collect();
    Ok(Arc::new(FDAlgebra::from_spanning_matrices(p, n, &mats, &format!("incidence({n})"))?.0))
}

/// Upper triangular `n × n` matrices.
pub fn upper_triangular(p: u32, n: usize) -> Result<Arc<FDAlgebra>> {
    let mats: Vec<FpMatrix> = (0..n).flat_map(|i| (i..n).map(move |j| matrix_unit(p, n, i, j))).collect();
    Ok(Arc::new(FDAlgebra::from_spanning_matrices(p, n, &mats, &format!("T({n})"))?.0))
}

/// The group algebra `kS_n`, generated by the left actions of the Coxeter transpositions.
pub fn group_algebra(n: usize, p: u32) -> Result<Arc<FDAlgebra>> {
    let perms = crate::sym::all_perms(n);
    let index = |g: &Vec<usize>| perms.iter().position(|h| h == g).expect("closed under composition");
    let gens: Vec<FpMatrix> = (0..n.saturating_sub(1))
        .map(|i| {
            let s = crate::sym::transposition(n, i);
            let mut m = FpMatrix::zeros(p, perms.len(), perms.len());
            for (j, g) in perms.iter().enumerate() {
                m.set(index(&crate::sym::compose(&s, g)), j, 1);
            }
            m
        })
        .collect();
    Ok(Arc::new(FDAlgebra::generated_by_matrices(p, perms.len(), &gens, &format!("kS{n}"))?.0))
}
