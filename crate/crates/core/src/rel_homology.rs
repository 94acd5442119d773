//! Relative homological algebra with respect to a fixed module `Q`: minimal
//! add-Q approximations, relative dominant and codominant dimension, relative
//! add-Q dimension, and the global, finitistic and tilting checks built on them.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{alg_hom_space, AlgModule, FDAlgebra};
use crate::error::{Error, Result};
use crate::homological::{ext_dims, is_isomorphic, pdim_up_to, ChainComplex, ChainComplexRecord, DimValue};
use crate::linalg::{FpMatrix, SpanTracker};
use crate::structure::decompose;

/// The additive closure of a module, held as its pairwise non-isomorphic
/// indecomposable summands.
#[derive(Clone, Debug)]
pub struct AddCategory {
    pub parts: Vec<AlgModule>,
    rad_end: Vec<Vec<FpMatrix>>,
    homs: Vec<Vec<Vec<FpMatrix>>>,
}

/// A map `source → target` (left) or `target → source` (right) with the
/// multiplicity of each indecomposable of the category in the target.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub module: AlgModule,
    pub map: FpMatrix,
    pub multiplicities: Vec<usize>,
}

fn radical_of_endomorphisms(m: &AlgModule) -> Result<Vec<FpMatrix>> {
    let basis = alg_hom_space(m, m);
    let (e, src) = FDAlgebra::from_spanning_matrices(m.prime(), m.dim(), &basis, "End")?;
    let gens: Vec<FpMatrix> = src.iter().map(|&s| basis[s].clone()).collect();
    let acts = e.basis_actions(&gens);
    Ok(e
        .radical_elements()
        .iter()
        .map(|x| crate::algebra::combine(m.prime(), m.dim(), m.dim(), &acts, x))
        .collect())
}

impl AddCategory {
    pub fn new(q: &AlgModule, seed: u64) -> Result<AddCategory> {
        let mut parts: Vec<AlgModule> = Vec::new();
        for s in decompose(q, seed)? {
            if !parts.iter().any(|p| is_isomorphic(p, &s.module)) {
                parts.push(s.module);
            }
        }
        Self::from_indecomposables(parts)
    }

    /// From pairwise non-isomorphic indecomposables.
    pub fn from_indecomposables(parts: Vec<AlgModule>) -> Result<AddCategory> {
        let rad_end = parts.iter().map(radical_of_endomorphisms).collect::<Result<Vec<_>>>()?;
        let homs = parts.iter().map(|a| parts.iter().map(|b| alg_hom_space(a, b)).collect()).collect();
        Ok(AddCategory { parts, rad_end, homs })
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Multiplicity-free sum of the indecomposables.
    pub fn basic_sum(&self) -> Option<AlgModule> {
        let alg = self.parts.first()?.alg.clone();
        Some(AlgModule::direct_sum_all(&alg, &self.parts))
    }

    /// The same category over the opposite algebra, via duals.
    pub fn dual(&self, op: &Arc<FDAlgebra>) -> Result<AddCategory> {
        Self::from_indecomposables(self.parts.iter().map(|q| q.dual(op)).collect())
    }

    /// Membership of an indecomposable in the category.
    pub fn contains_indecomposable(&self, m: &AlgModule) -> bool {
        self.parts.iter().any(|q| is_isomorphic(q, m))
    }

    pub fn contains(&self, m: &AlgModule, seed: u64) -> Result<bool> {
        if m.dim() == 0 {
            return Ok(true);
        }
        Ok(decompose(m, seed)?.iter().all(|s| self.contains_indecomposable(&s.module)))
    }

    /// Minimal left approximation `m → X` with `X ∈ add Q`.
    pub fn left_approximation(&self, m: &AlgModule) -> Approximation {
        let p = m.prime();
        let homs: Vec<Vec<FpMatrix>> = self.parts.iter().map(|q| alg_hom_space(m, q)).collect();
        let mut chosen: Vec<FpMatrix> = Vec::new();
        let mut mults = Vec::new();
        let mut pieces = Vec::new();
        for (j, q) in self.parts.iter().enumerate() {
            let len = q.dim() * m.dim();
            let mut tracker = SpanTracker::new(p, len);
            for (i, hs) in homs.iter().enumerate() {
                let through: &[FpMatrix] = if i == j { &self.rad_end[j] } else { &self.homs[i][j] };
                for psi in through {
                    for h in hs {
                        tracker.insert(psi.mul(h).entries());
                    }
                }
            }
            let mut k = 0;
            for h in &homs[j] {
                if tracker.insert(h.entries()) {
                    chosen.push(h.clone());
                    pieces.push(q.clone());
                    k += 1;
                }
            }
            mults.push(k);
        }
        let module = if pieces.is_empty() { AlgModule::zero(&m.alg) } else { AlgModule::direct_sum_all(&m.alg, &pieces) };
        let map = FpMatrix::vstack_all(p, m.dim(), &chosen);
        Approximation { module, map, multiplicities: mults }
    }

    /// Minimal right approximation `X → m` with `X ∈ add Q`.
    pub fn right_approximation(&self, m: &AlgModule) -> Approximation {
        let p = m.prime();
        let homs: Vec<Vec<FpMatrix>> = self.parts.iter().map(|q| alg_hom_space(q, m)).collect();
        let mut chosen: Vec<FpMatrix> = Vec::new();
        let mut mults = Vec::new();
        let mut pieces = Vec::new();
        for (j, q) in self.parts.iter().enumerate() {
            let len = m.dim() * q.dim();
            let mut tracker = SpanTracker::new(p, len);
            for (i, hs) in homs.iter().enumerate() {
                let through: &[FpMatrix] = if i == j { &self.rad_end[j] } else { &self.homs[j][i] };
                for psi in through {
                    for h in hs {
                        tracker.insert(h.mul(psi).entries());
                    }
                }
            }
            let mut k = 0;
            for h in &homs[j] {
                if tracker.insert(h.entries()) {
                    chosen.push(h.transpose());
                    pieces.push(q.clone());
                    k += 1;
                }
            }
            mults.push(k);
        }
        let module = if pieces.is_empty() { AlgModule::zero(&m.alg) } else { AlgModule::direct_sum_all(&m.alg, &pieces) };
        let map = FpMatrix::vstack_all(p, m.dim(), &chosen).transpose();
        Approximation { module, map, multiplicities: mults }
    }
}

/// Result of building an add-Q coresolution step by step.
#[derive(Clone, Debug)]
pub struct RelativeChain {
    pub value: DimValue,
    /// `0 → M → Q₁ → … → Q_k` as built, with `maps[i]: terms[i] → terms[i+1]`.
    pub terms: Vec<AlgModule>,
    pub maps: Vec<FpMatrix>,
}

impl RelativeChain {
    /// The chain as a homologically indexed complex (differentials point down).
    pub fn to_chain_complex(&self) -> ChainComplex {
        let mut terms = self.terms.clone();
        let mut maps = self.maps.clone();
        terms.reverse();
        maps.reverse();
        ChainComplex::new(terms, maps)
    }

    pub fn record(&self) -> ChainComplexRecord {
        self.to_chain_complex().record()
    }
}

/// Relative dominant dimension `Q domdim M` via iterated minimal left
/// approximations, with the chain built along the way.
pub fn relative_domdim_chain(m: &AlgModule, cat: &AddCategory, cutoff: usize) -> Result<RelativeChain> {
    let mut terms = vec![m.clone()];
    let mut maps: Vec<FpMatrix> = Vec::new();
    let mut cur = m.clone();
    let mut to_cur: Option<FpMatrix> = None;
    for steps in 0..cutoff {
        if cur.dim() == 0 {
            break;
        }
        let a = cat.left_approximation(&cur);
        if a.map.rank() < cur.dim() {
            return Ok(RelativeChain { value: DimValue::Finite { value: steps }, terms, maps });
        }
        maps.push(match &to_cur {
            None => a.map.clone(),
            Some(pr) => a.map.mul(pr),
        });
        let (coker, proj) = a.module.quotient(&a.map.column_basis())?;
        terms.push(a.module);
        to_cur = Some(proj);
        cur = coker;
    }
    Ok(RelativeChain { value: DimValue::AtLeast { bound: cutoff }, terms, maps })
}

pub fn relative_domdim(m: &AlgModule, q: &AlgModule, cutoff: usize, seed: u64) -> Result<DimValue> {
    let cat = AddCategory::new(q, seed)?;
    Ok(relative_domdim_chain(m, &cat, cutoff)?.value)
}

/// `Q codomdim M`, the relative dominant dimension of the duals over the
/// opposite algebra.
pub fn relative_codomdim_chain(m: &AlgModule, cat: &AddCategory, cutoff: usize) -> Result<RelativeChain> {
    let op = m.alg.opposite_arc();
    relative_domdim_chain(&m.dual(&op), &cat.dual(&op)?, cutoff)
}

pub fn relative_codomdim(m: &AlgModule, q: &AlgModule, cutoff: usize, seed: u64) -> Result<DimValue> {
    let cat = AddCategory::new(q, seed)?;
    Ok(relative_codomdim_chain(m, &cat, cutoff)?.value)
}

/// Relative add-Q dimension: length of the shortest resolution by add Q that
/// stays exact under `Hom(Q, -)`, built from minimal right approximations.
/// `Infinite` when some approximation fails to be onto.
pub fn addq_dimension(m: &AlgModule, cat: &AddCategory, cutoff: usize) -> Result<DimValue> {
    let mut cur = m.clone();
    for step in 0..=cutoff {
        if cur.dim() == 0 {
            return Ok(DimValue::Finite { value: step.saturating_sub(1) });
        }
        let a = cat.right_approximation(&cur);
        if a.map.rank() < cur.dim() {
            return Ok(DimValue::Infinite);
        }
        let ker = a.map.nullspace();
        if ker.cols() == 0 {
            return Ok(DimValue::Finite { value: step });
        }
        cur = a.module.submodule(&ker)?.0;
    }
    Ok(DimValue::AtLeast { bound: cutoff })
}

/// Maximum projective dimension over the simple modules.
pub fn global_dimension(alg: &Arc<FDAlgebra>, cutoff: usize) -> Result<DimValue> {
    let st = alg.structure()?;
    let mut best = 0;
    for s in &st.simples {
        match pdim_up_to(s, cutoff)? {
            DimValue::Finite { value } => best = best.max(value),
            other => return Ok(other),
        }
    }
    Ok(DimValue::Finite { value: best })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GorensteinReport {
    pub findim: DimValue,
    /// True when `findim` is only a lower bound.
    pub findim_lower_bound_only: bool,
    pub injdim_left: DimValue,
    pub injdim_right: DimValue,
    pub iwanaga_gorenstein: bool,
}

/// Injective dimensions of the regular module on both sides, the
/// Iwanaga–Gorenstein property, and the finitistic dimension.
pub fn finitistic_and_gorenstein(alg: &Arc<FDAlgebra>, cutoff: usize) -> Result<GorensteinReport> {
    let left = crate::homological::injdim_up_to(&AlgModule::regular(alg), cutoff)?;
    let op = alg.opposite_arc();
    let right = crate::homological::injdim_up_to(&AlgModule::regular(&op), cutoff)?;
    let ig = left.is_finite() && right.is_finite();
    if ig {
        return Ok(GorensteinReport { findim: left, findim_lower_bound_only: false, injdim_left: left, injdim_right: right, iwanaga_gorenstein: true });
    }
    // largest finite pdim among simples and their syzygies
    let st = alg.structure()?;
    let mut best = 0;
    for s in &st.simples {
        let mut m = s.clone();
        for _ in 0..cutoff {
            if let DimValue::Finite { value } = pdim_up_to(&m, cutoff)? {
                best = best.max(value);
                break;
            }
            m = crate::homological::syzygy(&m)?.0;
        }
    }
    Ok(GorensteinReport {
        findim: DimValue::Finite { value: best },
        findim_lower_bound_only: true,
        injdim_left: left,
        injdim_right: right,
        iwanaga_gorenstein: false,
    })
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TiltingCertificate {
    pub is_tilting: bool,
    pub pdim: DimValue,
    /// `ext[i][j][k] = dim Ext^k(X_i, X_j)` over the indecomposable summands.
    pub ext_table: Vec<Vec<Vec<usize>>>,
    /// Coresolution `0 → A → X₀ → … → X_t → 0` by add X, if one was found.
    pub coresolution: Option<ChainComplexRecord>,
}

/// Checks that `x` has finite projective dimension, is self-orthogonal and
/// coresolves the regular module.
pub fn is_tilting(x: &AlgModule, cutoff: usize, seed: u64) -> Result<TiltingCertificate> {
    let pdim = pdim_up_to(x, cutoff)?;
    let cat = AddCategory::new(x, seed)?;
    let top = pdim.finite().unwrap_or(cutoff).max(1);
    let ext_table: Vec<Vec<Vec<usize>>> = cat
        .parts
        .iter()
        .map(|a| cat.parts.iter().map(|b| ext_dims(a, b, top)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let orthogonal = ext_table.iter().flatten().all(|e| e[1..].iter().all(|&d| d == 0));
    let reg = AlgModule::regular(&x.alg);
    let chain = relative_domdim_chain(&reg, &cat, cutoff)?;
    let ends_in_add = |c: &RelativeChain| -> Result<bool> {
        let last = c.terms.last().expect("nonempty");
        let img = match c.maps.last() {
            Some(f) => f.rank(),
            None => return Ok(false),
        };
        Ok(img == last.dim())
    };
    let coresolution = if chain.value == (DimValue::AtLeast { bound: cutoff }) && ends_in_add(&chain)? {
        Some(chain.record())
    } else {
        None
    };
    let is_tilting = pdim.is_finite() && orthogonal && coresolution.is_some();
    Ok(TiltingCertificate { is_tilting, pdim, ext_table, coresolution })
}

/// `gldim A ≤ n ≤ Q domdim A`.
pub fn auslander_pair_check(alg: &Arc<FDAlgebra>, q: &AlgModule, n: usize, cutoff: usize, seed: u64) -> Result<bool> {
    let gl = global_dimension(alg, cutoff)?;
    let gl_ok = matches!(gl, DimValue::Finite { value } if value <= n);
    let dd = relative_domdim(&AlgModule::regular(alg), q, cutoff, seed)?;
    let dd_ok = match dd {
        DimValue::Finite { value } => value >= n,
        DimValue::AtLeast { bound } => bound >= n,
        _ => true,
    };
    Ok(gl_ok && dd_ok)
}

/// `Ext^i(m, q) = 0` for `1 ≤ i ≤ r` and `Ext^i(q, m) = 0` for `1 ≤ i ≤ s`.
pub fn perp_membership(m: &AlgModule, q: &AlgModule, r: usize, s: usize) -> Result<bool> {
    if m.alg.name() != q.alg.name() || m.prime() != q.prime() {
        return Err(Error::ModuleMismatch("modules over different algebras".into()));
    }
    let left = r == 0 || ext_dims(m, q, r)?[1..].iter().all(|&d| d == 0);
    let right = s == 0 || ext_dims(q, m, s)?[1..].iter().all(|&d| d == 0);
    Ok(left && right)
}
