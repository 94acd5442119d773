//! Projective covers, syzygies, minimal resolutions, Ext groups and
//! homological dimensions with cutoffs.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::{alg_hom_dim, alg_hom_space, AlgModule, FDAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, SpanTracker};
use crate::module::is_isomorphic as gm_isomorphic;
use crate::structure::top;

/// Default depth for resolutions and dimension searches.
pub const DEFAULT_CUTOFF: usize = 20;

/// A homological dimension that may only be bounded below.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DimValue {
    Finite { value: usize },
    AtLeast { bound: usize },
    ProvablyInfinite { start: usize, period: usize },
    /// Infinite because no finite resolution of the required kind exists.
    Infinite,
}

impl DimValue {
    pub fn finite(self) -> Option<usize> {
        match self {
            DimValue::Finite { value } => Some(value),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, DimValue::Finite { .. })
    }
}

impl std::fmt::Display for DimValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimValue::Finite { value } => write!(f, "{value}"),
            DimValue::AtLeast { bound } => write!(f, "≥{bound}"),
            DimValue::ProvablyInfinite { start, period } => write!(f, "∞ (syzygies periodic from {start}, period {period})"),
            DimValue::Infinite => write!(f, "∞"),
        }
    }
}

/// Multiplicity of each simple (in the order of the algebra's structure) as a
/// composition factor: `dim e_i M`.
pub fn composition_multiplicities(m: &AlgModule) -> Result<Vec<usize>> {
    let st = m.alg.structure()?;
    Ok(st.reps.iter().map(|e| m.act(e).rank()).collect())
}

pub fn top_multiplicities(m: &AlgModule) -> Result<Vec<usize>> {
    composition_multiplicities(&top(m)?.0)
}

pub fn socle_multiplicities(m: &AlgModule) -> Result<Vec<usize>> {
    composition_multiplicities(&crate::structure::socle(m)?.0)
}

/// `dim Hom(⊕ P_i^{mult_i}, N) = Σ mult_i · dim e_i N`.
pub fn hom_from_projective_dim(mult: &[usize], n: &AlgModule) -> Result<usize> {
    let st = n.alg.structure()?;
    Ok(st.reps.iter().zip(mult).map(|(e, &k)| if k == 0 { 0 } else { k * n.act(e).rank() }).sum())
}

#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub projective: AlgModule,
    /// Class index of each indecomposable summand, in order.
    pub summands: Vec<usize>,
    /// Surjection `P → M` (dim M × dim P).
    pub surjection: FpMatrix,
}

impl ProjectiveCover {
    pub fn multiplicities(&self, nclasses: usize) -> Vec<usize> {
        let mut v = vec![0; nclasses];
        for &c in &self.summands {
            v[c] += 1;
        }
        v
    }
}

/// Minimal projective cover, choosing top preimages greedily in basis order.
pub fn projective_cover(m: &AlgModule) -> Result<ProjectiveCover> {
    let alg = &m.alg;
    let st = alg.structure()?;
    let p = alg.prime();
    if m.dim() == 0 {
        return Ok(ProjectiveCover { projective: AlgModule::zero(alg), summands: Vec::new(), surjection: FpMatrix::zeros(p, 0, 0) });
    }
    let (t, proj) = top(m)?;
    let mut chosen: Vec<(usize, Vec<u32>)> = Vec::new();
    for (c, e) in st.reps.iter().enumerate() {
        let need = t.act(e).rank();
        if need == 0 {
            continue;
        }
        let mut tracker = SpanTracker::new(p, t.dim());
        for col in m.act(e).columns() {
            if tracker.dim() == need {
                break;
            }
            if tracker.insert(&proj.mul_vec(&col)) {
                chosen.push((c, col));
            }
        }
        if tracker.dim() != need {
            return Err(Error::Unsupported(format!("could not lift the top of {}", m.tag())));
        }
    }
    let parts: Vec<AlgModule> = chosen.iter().map(|(c, _)| st.pims[*c].clone()).collect();
    let projective = AlgModule::direct_sum_all(alg, &parts).tagged(format!("P({})", m.tag()));
    let mut cols: Vec<Vec<u32>> = Vec::with_capacity(projective.dim());
    for (c, x) in &chosen {
        let ax: Vec<Vec<u32>> = (0..alg.dim()).map(|j| m.basis_action(j).mul_vec(x)).collect();
        let axm = FpMatrix::from_columns(p, m.dim(), &ax);
        let emb = &st.pim_embeddings[*c];
        for k in 0..emb.cols() {
            cols.push(axm.mul_vec(&emb.column(k)));
        }
    }
    let surjection = FpMatrix::from_columns(p, m.dim(), &cols);
    if surjection.rank() != m.dim() {
        return Err(Error::Unsupported(format!("projective cover of {} is not surjective", m.tag())));
    }
    Ok(ProjectiveCover { projective, summands: chosen.into_iter().map(|(c, _)| c).collect(), surjection })
}

/// First syzygy with its projective cover.
pub fn syzygy(m: &AlgModule) -> Result<(AlgModule, ProjectiveCover)> {
    let cover = projective_cover(m)?;
    if cover.projective.dim() == 0 {
        return Ok((AlgModule::zero(&m.alg), cover));
    }
    let ker = cover.surjection.nullspace();
    let (k, _) = cover.projective.submodule(&ker)?;
    Ok((k.tagged(format!("Ω({})", m.tag())), cover))
}

/// Terms and syzygies of a minimal projective resolution.
#[derive(Clone, Debug)]
pub struct Resolution {
    /// `terms[i]` = multiplicities of the indecomposable projectives in `P_i`.
    pub terms: Vec<Vec<usize>>,
    /// `syzygies[i] = Ω^i M`, starting with `M` itself.
    pub syzygies: Vec<AlgModule>,
    pub covers: Vec<ProjectiveCover>,
}

impl Resolution {
    /// Whether the resolution reached zero.
    pub fn terminated(&self) -> bool {
        self.syzygies.last().map(|s| s.dim() == 0).unwrap_or(true)
    }

    /// The resolution as a chain complex `… → P_1 → P_0 → M → 0`.
    pub fn to_chain_complex(&self) -> ChainComplex {
        let mut terms = Vec::new();
        let mut maps = Vec::new();
        let m = &self.syzygies[0];
        terms.push(m.clone());
        for (i, c) in self.covers.iter().enumerate() {
            terms.push(c.projective.clone());
            if i == 0 {
                maps.push(c.surjection.clone());
            } else {
                // P_i → Ω^i ⊂ P_{i-1}
                let prev = &self.covers[i - 1];
                let ker = prev.surjection.nullspace();
                maps.push(ker.mul(&c.surjection));
            }
        }
        ChainComplex::new(terms, maps)
    }
}

/// Minimal resolution up to `len` steps (stops early at zero).
pub fn minimal_resolution(m: &AlgModule, len: usize) -> Result<Resolution> {
    let nclasses = m.alg.structure()?.num_simples();
    let mut syzygies = vec![m.clone()];
    let mut terms = Vec::new();
    let mut covers = Vec::new();
    for _ in 0..len {
        let cur = syzygies.last().expect("non-empty");
        if cur.dim() == 0 {
            break;
        }
        let (next, cover) = syzygy(cur)?;
        terms.push(cover.multiplicities(nclasses));
        covers.push(cover);
        syzygies.push(next);
    }
    Ok(Resolution { terms, syzygies, covers })
}

/// `dim Ext^i(M, N)` for `i = 0..=up_to`.
pub fn ext_dims(m: &AlgModule, n: &AlgModule, up_to: usize) -> Result<Vec<usize>> {
    if !Arc::ptr_eq(&m.alg, &n.alg) {
        return Err(Error::ModuleMismatch("modules over different algebras".into()));
    }
    let res = minimal_resolution(m, up_to)?;
    let mut out = vec![alg_hom_dim(m, n)];
    let mut prev_hom = out[0];
    for i in 1..=up_to {
        if i >= res.syzygies.len() || res.syzygies[i - 1].dim() == 0 {
            out.push(0);
            continue;
        }
        let omega = &res.syzygies[i];
        let h = alg_hom_dim(omega, n);
        let hp = hom_from_projective_dim(&res.terms[i - 1], n)?;
        out.push(h + prev_hom - hp);
        prev_hom = h;
    }
    Ok(out)
}

pub fn ext_dim(m: &AlgModule, n: &AlgModule, i: usize) -> Result<usize> {
    Ok(ext_dims(m, n, i)?[i])
}

pub fn is_projective(m: &AlgModule) -> Result<bool> {
    Ok(m.dim() == 0 || projective_cover(m)?.projective.dim() == m.dim())
}

/// Injective iff the dual is projective over the opposite algebra.
pub fn is_injective(m: &AlgModule) -> Result<bool> {
    let op = m.alg.opposite_arc();
    is_projective(&m.dual(&op))
}

/// Projective dimension, or a lower bound when the minimal resolution does
/// not terminate within `cutoff` steps.
pub fn pdim_up_to(m: &AlgModule, cutoff: usize) -> Result<DimValue> {
    if m.dim() == 0 {
        return Ok(DimValue::Finite { value: 0 });
    }
    let res = minimal_resolution(m, cutoff + 1)?;
    match res.syzygies.iter().position(|s| s.dim() == 0) {
        Some(k) => Ok(DimValue::Finite { value: k - 1 }),
        None => Ok(DimValue::AtLeast { bound: cutoff }),
    }
}

/// Like [`pdim_up_to`], but upgrades a non-terminating resolution to a proof of
/// infinite projective dimension when two syzygies within the cutoff are isomorphic.
pub fn pdim_with_periodicity(m: &AlgModule, cutoff: usize) -> Result<DimValue> {
    if m.dim() == 0 {
        return Ok(DimValue::Finite { value: 0 });
    }
    let res = minimal_resolution(m, cutoff + 1)?;
    if let Some(k) = res.syzygies.iter().position(|s| s.dim() == 0) {
        return Ok(DimValue::Finite { value: k - 1 });
    }
    Ok(match syzygy_period(&res.syzygies[..=cutoff]) {
        Some((start, period)) => DimValue::ProvablyInfinite { start, period },
        None => DimValue::AtLeast { bound: cutoff },
    })
}

/// First pair `i < j` with `Ω^i ≅ Ω^j` (both nonzero), as `(i, j − i)`.
pub fn syzygy_period(syz: &[AlgModule]) -> Option<(usize, usize)> {
    for j in 1..syz.len() {
        if syz[j].dim() == 0 {
            return None;
        }
        for i in 0..j {
            if syz[i].dim() == syz[j].dim() && gm_isomorphic(&syz[i].module, &syz[j].module) {
                return Some((i, j - i));
            }
        }
    }
    None
}

/// Injective dimension as the projective dimension of the dual over the opposite algebra.
pub fn injdim_up_to(m: &AlgModule, cutoff: usize) -> Result<DimValue> {
    let op = m.alg.opposite_arc();
    pdim_up_to(&m.dual(&op), cutoff)
}

pub fn injdim_with_periodicity(m: &AlgModule, cutoff: usize) -> Result<DimValue> {
    let op = m.alg.opposite_arc();
    pdim_with_periodicity(&m.dual(&op), cutoff)
}

/// Endomorphism algebra of a module, realised on the module itself, with its
/// basis as matrices.
pub fn endomorphism_algebra(m: &AlgModule) -> Result<(FDAlgebra, Vec<FpMatrix>)> {
    let basis = alg_hom_space(m, m);
    let (a, _) = FDAlgebra::from_spanning_matrices(m.prime(), m.dim(), &basis, &format!("End({})", m.tag()))?;
    Ok((a, basis))
}

/// Whether two modules over the same algebra are isomorphic.
pub fn is_isomorphic(m: &AlgModule, n: &AlgModule) -> bool {
    m.dim() == n.dim() && (m.dim() == 0 || gm_isomorphic(&m.module, &n.module))
}

/// Ordered modules with maps `maps[i]: terms[i+1] → terms[i]`.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    pub terms: Vec<AlgModule>,
    pub maps: Vec<FpMatrix>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ChainComplexRecord {
    pub terms: Vec<(String, usize)>,
    pub maps: Vec<FpMatrix>,
}

impl ChainComplex {
    pub fn new(terms: Vec<AlgModule>, maps: Vec<FpMatrix>) -> Self {
        ChainComplex { terms, maps }
    }

    /// Every map intertwines the action and consecutive composites vanish.
    pub fn is_complex(&self) -> bool {
        let shapes = self.maps.iter().enumerate().all(|(i, f)| {
            f.rows() == self.terms[i].dim() && f.cols() == self.terms[i + 1].dim()
        });
        shapes
            && self.maps.iter().enumerate().all(|(i, f)| {
                let (s, t) = (&self.terms[i + 1], &self.terms[i]);
                s.module.generators.iter().zip(&t.module.generators).all(|(gs, gt)| f.mul(gs) == gt.mul(f))
            })
            && self.maps.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }

    /// Homology dimensions at each interior term (the ends are treated as
    /// bounded by zero).
    pub fn homology_dims(&self) -> Vec<usize> {
        (0..self.terms.len())
            .map(|i| {
                let ker = if i == 0 { self.terms[0].dim() } else { self.terms[i].dim() - self.maps[i - 1].rank() };
                let img = if i < self.maps.len() { self.maps[i].rank() } else { 0 };
                ker - img
            })
            .collect()
    }

    pub fn is_exact(&self) -> bool {
        self.is_complex() && self.homology_dims().iter().all(|&h| h == 0)
    }

    /// Alternating sum of dimensions.
    pub fn euler_characteristic(&self) -> i64 {
        self.terms.iter().enumerate().map(|(i, t)| if i % 2 == 0 { t.dim() as i64 } else { -(t.dim() as i64) }).sum()
    }

    pub fn record(&self) -> ChainComplexRecord {
        ChainComplexRecord {
            terms: self.terms.iter().map(|t| (t.tag().to_string(), t.dim())).collect(),
            maps: self.maps.clone(),
        }
    }
}

/// One block of an algebra.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Block {
    /// Central primitive idempotent.
    pub idempotent: Vec<u32>,
    /// Simple classes (indices into the algebra structure) in the block.
    pub classes: Vec<usize>,
    pub principal: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    pub fn principal(&self) -> Option<&Block> {
        self.blocks.iter().find(|b| b.principal)
    }

    pub fn block_of(&self, class: usize) -> usize {
        self.blocks.iter().position(|b| b.classes.contains(&class)).expect("every class lies in a block")
    }
}

/// Blocks from the linkage of primitive idempotents (`e_i A e_j ≠ 0`); the
/// principal block is the one acting nonzero on `trivial`, when given.
pub fn block_decomposition(alg: &Arc<FDAlgebra>, trivial: Option<&AlgModule>) -> Result<BlockDecomposition> {
    let st = alg.structure()?;
    let k = st.num_simples();
    let mut parent: Vec<usize> = (0..k).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        let mut r = x;
        while parent[r] != r {
            r = parent[r];
        }
        parent[x] = r;
        r
    }
    let lefts: Vec<FpMatrix> = st.reps.iter().map(|e| alg.left_matrix(e)).collect();
    let rights: Vec<FpMatrix> = st.reps.iter().map(|e| alg.right_matrix(e)).collect();
    for i in 0..k {
        for j in 0..k {
            if i != j && !lefts[i].mul(&rights[j]).is_zero() {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                parent[a] = b;
            }
        }
    }
    let mut roots: Vec<usize> = Vec::new();
    let mut blocks: Vec<Block> = Vec::new();
    for c in 0..k {
        let r = find(&mut parent, c);
        match roots.iter().position(|&x| x == r) {
            Some(b) => blocks[b].classes.push(c),
            None => {
                roots.push(r);
                blocks.push(Block { idempotent: vec![0; alg.dim()], classes: vec![c], principal: false });
            }
        }
    }
    for (e, &c) in st.idempotents.iter().zip(&st.class_of) {
        let b = blocks.iter().position(|bl| bl.classes.contains(&c)).expect("class in block");
        blocks[b].idempotent = alg.add(&blocks[b].idempotent, e);
    }
    for b in &blocks {
        if !alg.is_idempotent(&b.idempotent) || !alg.is_central(&b.idempotent) {
            return Err(Error::Unsupported("block idempotent is not central".into()));
        }
    }
    if let Some(t) = trivial {
        for b in &mut blocks {
            b.principal = !t.act(&b.idempotent).is_zero();
        }
    }
    Ok(BlockDecomposition { blocks })
}

/// `dim Ext¹(S_i, S_j)` for the simples in structure order.
pub fn ext_quiver(alg: &Arc<FDAlgebra>) -> Result<Vec<Vec<usize>>> {
    let st = alg.structure()?;
    let k = st.num_simples();
    let mut out = vec![vec![0; k]; k];
    for i in 0..k {
        let (omega, _) = syzygy(&st.simples[i])?;
        // Ext¹(S_i, S_j) = Hom(Ω S_i, S_j) for a minimal cover
        out[i] = top_multiplicities(&omega)?;
    }
    Ok(out)
}
