//! The quotient Λ(n,d) of kS_d acting faithfully on tensor space, realised on
//! ⊕_{λ∈Λ⁺(n,d)} M^λ, its basic algebra, Young modules and the basic Schur algebra.

use std::collections::HashMap;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{combine, AlgModule, FDAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, SpanTracker};
use crate::module::GModule;
use crate::partition::{is_p_regular, partitions_in, Partition};
use crate::sym::{compose, perm_module, simple_module, tabloids, transposition, Perm};

/// Block-diagonal operator on ⊕ M^λ, one block per weight.
pub type BlockOp = Vec<FpMatrix>;

pub struct LambdaAlgebra {
    pub n: usize,
    pub d: usize,
    pub prime: u32,
    pub weights: Vec<Partition>,
    pub perm_modules: Vec<GModule>,
    /// Group elements whose images form the basis; `basis[0]` is the identity.
    pub basis: Vec<Perm>,
    /// `b_k = s_i · b_j` for `steps[k] = Some((i, j))`.
    steps: Vec<Option<(usize, usize)>>,
    tracker: SpanTracker,
    /// Left multiplication by each Coxeter generator in the basis.
    gen_left: Vec<FpMatrix>,
    block_sizes: Vec<usize>,
}

impl std::fmt::Debug for LambdaAlgebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Λ({},{}) over F_{} of dimension {}", self.n, self.d, self.prime, self.dim())
    }
}

/// Image of a permutation on each permutation module, as index permutations.
struct TabloidAction {
    tabs: Vec<Vec<Vec<u8>>>,
    index: Vec<HashMap<Vec<u8>, usize>>,
}

impl TabloidAction {
    fn new(weights: &[Partition]) -> Self {
        let tabs: Vec<Vec<Vec<u8>>> = weights.iter().map(|w| tabloids(w.parts())).collect();
        let index = tabs.iter().map(|ts| ts.iter().enumerate().map(|(i, t)| (t.clone(), i)).collect()).collect();
        TabloidAction { tabs, index }
    }

    fn vectorize(&self, g: &[usize], len: usize) -> Vec<u32> {
        let mut v = vec![0u32; len];
        let mut off = 0;
        for (ts, idx) in self.tabs.iter().zip(&self.index) {
            let n = ts.len();
            for (j, t) in ts.iter().enumerate() {
                let mut s = vec![0u8; t.len()];
                for (x, &r) in t.iter().enumerate() {
                    s[g[x]] = r;
                }
                v[off + idx[&s] * n + j] = 1;
            }
            off += n * n;
        }
        v
    }
}

impl LambdaAlgebra {
    /// Spans the images of S_d on ⊕ M^λ by spinning the identity under the
    /// Coxeter generators.
    pub fn new(n: usize, d: usize, prime: u32) -> Result<LambdaAlgebra> {
        crate::linalg::check_prime(prime)?;
        let weights = partitions_in(n, d);
        let perm_modules = weights.iter().map(|w| perm_module(w, prime)).collect::<Result<Vec<_>>>()?;
        let block_sizes: Vec<usize> = perm_modules.iter().map(|m| m.dim).collect();
        let len: usize = block_sizes.iter().map(|s| s * s).sum();
        crate::linalg::check_cap(1, len)?;
        let act = TabloidAction::new(&weights);
        let id: Perm = (0..d).collect();
        let mut tracker = SpanTracker::new(prime, len);
        tracker.insert(&act.vectorize(&id, len));
        let mut basis = vec![id];
        let mut steps = vec![None];
        let ngens = d.saturating_sub(1);
        let mut columns: Vec<Vec<Vec<u32>>> = vec![Vec::new(); ngens];
        let gens: Vec<Perm> = (0..ngens).map(|i| transposition(d, i)).collect();
        let mut done = 0;
        while done < basis.len() {
            let b = basis[done].clone();
            for (i, s) in gens.iter().enumerate() {
                let g = compose(s, &b);
                let v = act.vectorize(&g, len);
                match tracker.coordinates(&v) {
                    Some(c) => columns[i].push(c),
                    None => {
                        tracker.insert(&v);
                        let k = basis.len();
                        basis.push(g);
                        steps.push(Some((i, done)));
                        let mut c = vec![0u32; k + 1];
                        c[k] = 1;
                        columns[i].push(c);
                    }
                }
            }
            done += 1;
        }
        let dim = basis.len();
        let gen_left = columns
            .into_iter()
            .map(|cols| {
                let padded: Vec<Vec<u32>> = cols
                    .into_iter()
                    .map(|mut c| {
                        c.resize(dim, 0);
                        c
                    })
                    .collect();
                FpMatrix::from_columns(prime, dim, &padded)
            })
            .collect();
        Ok(LambdaAlgebra { n, d, prime, weights, perm_modules, basis, steps, tracker, gen_left, block_sizes })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the faithful module ⊕ M^λ.
    pub fn faithful_dim(&self) -> usize {
        self.block_sizes.iter().sum()
    }

    /// Left multiplication by the Coxeter generator `s_i` in the basis.
    pub fn generator_left(&self, i: usize) -> &FpMatrix {
        &self.gen_left[i]
    }

    fn split_blocks(&self, v: &[u32]) -> BlockOp {
        let mut off = 0;
        self.block_sizes
            .iter()
            .map(|&n| {
                let m = FpMatrix::from_flat(self.prime, n, n, &v[off..off + n * n]);
                off += n * n;
                m
            })
            .collect()
    }

    /// Block-diagonal operator of an element given in basis coordinates.
    pub fn operator(&self, x: &[u32]) -> BlockOp {
        let p = self.prime as u64;
        let len = self.tracker.ambient();
        let mut acc = vec![0u64; len];
        for (v, &c) in self.tracker.accepted().iter().zip(x) {
            if c != 0 {
                for (a, &b) in acc.iter_mut().zip(v) {
                    *a += c as u64 * b as u64;
                }
            }
        }
        let v: Vec<u32> = acc.into_iter().map(|a| (a % p) as u32).collect();
        self.split_blocks(&v)
    }

    /// Coordinates of a block-diagonal operator, if it lies in the algebra.
    pub fn coordinates(&self, op: &BlockOp) -> Option<Vec<u32>> {
        let v: Vec<u32> = op.iter().flat_map(|m| m.entries().iter().copied()).collect();
        self.tracker.coordinates(&v)
    }

    pub fn op_mul(a: &BlockOp, b: &BlockOp) -> BlockOp {
        a.iter().zip(b).map(|(x, y)| x.mul(y)).collect()
    }

    /// Product of two elements in basis coordinates.
    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let op = Self::op_mul(&self.operator(x), &self.operator(y));
        self.coordinates(&op).expect("the algebra is closed under multiplication")
    }

    /// Action matrices of every basis element on a module for S_d.
    pub fn actions_on(&self, m: &GModule) -> Vec<FpMatrix> {
        let mut out: Vec<FpMatrix> = Vec::with_capacity(self.dim());
        out.push(FpMatrix::identity(self.prime, m.dim));
        for k in 1..self.dim() {
            let (i, j) = self.steps[k].expect("non-identity basis elements have a step");
            let next = m.generators[i].mul(&out[j]);
            out.push(next);
        }
        out
    }

    /// Whether the S_d-module factors through Λ: the generator relations
    /// `s_i b_k = Σ_j c_j b_j` must hold on it. Exact for modules of dimension
    /// at most 24, otherwise tested on eight random vectors.
    pub fn is_module(&self, m: &GModule) -> bool {
        if m.dim == 0 {
            return true;
        }
        let p = self.prime;
        let vecs: Vec<Vec<u32>> = if m.dim <= 24 {
            (0..m.dim).map(|i| crate::algebra::unit_vec(m.dim, i)).collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x1a3bda);
            (0..8).map(|_| (0..m.dim).map(|_| rng.gen_range(0..p)).collect()).collect()
        };
        // images b_k v for every basis element, built along the steps
        let mut imgs: Vec<Vec<Vec<u32>>> = Vec::with_capacity(self.dim());
        imgs.push(vecs.clone());
        for k in 1..self.dim() {
            let (i, j) = self.steps[k].expect("step");
            let next = imgs[j].iter().map(|v| m.generators[i].mul_vec(v)).collect();
            imgs.push(next);
        }
        let dim = self.dim();
        (0..self.gen_left.len()).into_par_iter().all(|i| {
            let lg = &self.gen_left[i];
            (0..dim).all(|k| {
                let col = lg.column(k);
                (0..vecs.len()).all(|r| {
                    let lhs = m.generators[i].mul_vec(&imgs[k][r]);
                    let mut rhs = vec![0u64; m.dim];
                    for (j, &c) in col.iter().enumerate() {
                        if c != 0 {
                            for (a, &b) in rhs.iter_mut().zip(&imgs[j][r]) {
                                *a += c as u64 * b as u64;
                            }
                        }
                    }
                    lhs.iter().zip(&rhs).all(|(&a, &b)| a as u64 == b % p as u64)
                })
            })
        })
    }

    /// Simple Λ-modules D^μ for the p-regular weights μ.
    pub fn simple_modules(&self) -> Result<Vec<(Partition, GModule)>> {
        self.weights
            .iter()
            .filter(|w| is_p_regular(w, self.prime))
            .map(|w| Ok((w.clone(), simple_module(w, self.prime)?)))
            .collect()
    }

    /// Idempotent lifting a rank-one idempotent in each simple quotient
    /// End(D^μ): a basic idempotent of Λ.
    pub fn basic_idempotent(&self) -> Result<Vec<u32>> {
        let p = self.prime;
        let simples = self.simple_modules()?;
        let mut rows: Vec<FpMatrix> = Vec::new();
        let mut target: Vec<u32> = Vec::new();
        for (_, s) in &simples {
            let acts = self.actions_on(s);
            let cols: Vec<Vec<u32>> = acts.iter().map(|a| a.entries().to_vec()).collect();
            rows.push(FpMatrix::from_columns(p, s.dim * s.dim, &cols));
            let mut e = vec![0u32; s.dim * s.dim];
            e[0] = 1;
            target.extend(e);
        }
        let sys = FpMatrix::vstack_all(p, self.dim(), &rows);
        let b = FpMatrix::from_columns(p, target.len(), &[target]);
        let u = sys
            .solve(&b)?
            .ok_or_else(|| Error::Unsupported("the simple quotients are not jointly reachable".into()))?
            .column(0);
        let e = self.lift_idempotent(&self.operator(&u))?;
        self.coordinates(&e).ok_or_else(|| Error::Unsupported("lifted idempotent left the algebra".into()))
    }

    /// Newton iteration `e ← 3e² − 2e³` on a block-diagonal operator.
    pub fn lift_idempotent(&self, u: &BlockOp) -> Result<BlockOp> {
        let mut e = u.clone();
        for _ in 0..64 {
            let e2 = Self::op_mul(&e, &e);
            if e2 == e {
                return Ok(e);
            }
            let e3 = Self::op_mul(&e2, &e);
            e = e2.iter().zip(&e3).map(|(a, b)| a.scale(3).sub(&b.scale(2))).collect();
        }
        Err(Error::NotIdempotent)
    }

    /// The corner algebra `eΛe`, realised faithfully on `e·(⊕ M^λ)`.
    pub fn corner(&self, e: &[u32], name: &str) -> Result<LambdaCorner> {
        let p = self.prime;
        let eop = self.operator(e);
        if Self::op_mul(&eop, &eop) != eop {
            return Err(Error::NotIdempotent);
        }
        // per block: basis V of the image, pivot rows for coordinates
        let pieces: Vec<(FpMatrix, Vec<usize>, FpMatrix)> = eop
            .iter()
            .map(|m| {
                let v = m.column_basis();
                let piv = v.transpose().rref().pivots;
                let inv = if v.cols() == 0 { FpMatrix::zeros(p, 0, 0) } else { v.select_rows(&piv).inverse().expect("full rank") };
                (v, piv, inv)
            })
            .collect();
        let r: usize = pieces.iter().map(|(v, _, _)| v.cols()).sum();
        let mats: Vec<FpMatrix> = (0..self.dim())
            .into_par_iter()
            .map(|k| {
                let op = self.operator(&crate::algebra::unit_vec(self.dim(), k));
                let blocks: Vec<FpMatrix> = pieces
                    .iter()
                    .zip(&eop)
                    .zip(&op)
                    .map(|(((v, piv, inv), em), bm)| {
                        if v.cols() == 0 {
                            return FpMatrix::zeros(p, 0, 0);
                        }
                        let img = em.mul(&bm.mul(v));
                        inv.mul(&img.select_rows(piv))
                    })
                    .collect();
                FpMatrix::block_diag(p, &blocks)
            })
            .collect();
        let (alg, sources) = FDAlgebra::from_spanning_matrices(p, r, &mats, name)?;
        let alg = Arc::new(alg);
        let natural_gens = sources.iter().map(|&k| mats[k].clone()).collect();
        let natural = AlgModule::new(&alg, natural_gens, &format!("{name} on its faithful module"))?;
        let sources = sources.into_iter().collect();
        Ok(LambdaCorner { idempotent: e.to_vec(), alg, sources, natural, pieces })
    }
}

/// `eΛe` for an idempotent `e` of Λ, with the functor `M ↦ eM`.
#[derive(Clone, Debug)]
pub struct LambdaCorner {
    pub idempotent: Vec<u32>,
    pub alg: Arc<FDAlgebra>,
    /// Basis index in Λ of the element `b` whose corner `e b e` realises each generator.
    pub sources: Vec<usize>,
    /// The corner algebra acting on `e·(⊕ M^λ)`.
    pub natural: AlgModule,
    /// Per weight: basis of the image of `e`, its pivot rows and the inverse pivot block.
    pieces: Vec<(FpMatrix, Vec<usize>, FpMatrix)>,
}

impl LambdaCorner {
    /// An element of the corner algebra as an element of Λ.
    pub fn to_lambda(&self, lam: &LambdaAlgebra, x: &[u32]) -> Vec<u32> {
        let p = lam.prime;
        let big = self.natural.act(x);
        let eop = lam.operator(&self.idempotent);
        let mut off = 0;
        let op: BlockOp = self
            .pieces
            .iter()
            .zip(&eop)
            .map(|((v, piv, inv), em)| {
                let k = v.cols();
                let n = em.rows();
                let out = if k == 0 {
                    FpMatrix::zeros(p, n, n)
                } else {
                    let xb = big.block(off, off, k, k);
                    v.mul(&xb.mul(&inv.mul(&em.select_rows(piv))))
                };
                off += k;
                out
            })
            .collect();
        lam.coordinates(&op).expect("corner elements lie in Λ")
    }

    /// `eM` as a module over the corner algebra; `M` must be a Λ-module.
    pub fn module_from_actions(&self, lam: &LambdaAlgebra, actions: &[FpMatrix], tag: &str) -> Result<AlgModule> {
        let p = lam.prime;
        let n = actions[0].rows();
        let em = combine(p, n, n, actions, &self.idempotent);
        let w = em.column_basis();
        if w.cols() == 0 {
            return Ok(AlgModule::zero(&self.alg).tagged(tag));
        }
        let piv = w.transpose().rref().pivots;
        let inv = w.select_rows(&piv).inverse().expect("full rank");
        let gens = self
            .sources
            .iter()
            .map(|&k| {
                let img = em.mul(&actions[k].mul(&w));
                inv.mul(&img.select_rows(&piv))
            })
            .collect();
        AlgModule::new(&self.alg, gens, tag)
    }

    pub fn module(&self, lam: &LambdaAlgebra, m: &GModule) -> Result<AlgModule> {
        let acts = lam.actions_on(m);
        self.module_from_actions(lam, &acts, &m.origin_tag)
    }
}

/// The Young module Y^λ as a summand of M^λ.
#[derive(Clone, Debug)]
pub struct YoungModule {
    pub weight: Partition,
    pub module: GModule,
    /// Split embedding into M^λ and projection back.
    pub embedding: FpMatrix,
    pub projection: FpMatrix,
}

/// The unique indecomposable summand of M^λ whose projection does not kill S^λ.
pub fn young_module(lam: &Partition, p: u32, seed: u64) -> Result<YoungModule> {
    let m = perm_module(lam, p)?;
    let (_, spe) = crate::sym::specht_module(lam, p)?;
    let parts = crate::structure::decompose_gmodule(&m, seed)?;
    let hits: Vec<_> = parts.into_iter().filter(|(_, _, proj)| !proj.mul(&spe).is_zero()).collect();
    if hits.len() != 1 {
        return Err(Error::Unsupported(format!("{} summands of M({lam}) meet S({lam})", hits.len())));
    }
    let (module, embedding, projection) = hits.into_iter().next().expect("one summand");
    Ok(YoungModule { weight: lam.clone(), module: module.tagged(format!("Y({lam})")), embedding, projection })
}

/// Λ(n,d) in exact mode with its basic algebra and principal block.
pub struct ExactModel {
    pub lambda: LambdaAlgebra,
    /// Basic algebra `EΛE`.
    pub basic: LambdaCorner,
    /// D^μ label of each simple class of the basic algebra.
    pub basic_labels: Vec<Partition>,
    pub blocks: crate::homological::BlockDecomposition,
    /// Basic algebra `E₀ΛE₀` of the principal block.
    pub principal: LambdaCorner,
    /// D^μ label of each simple class of the principal basic algebra.
    pub labels: Vec<Partition>,
}

impl ExactModel {
    pub fn new(n: usize, d: usize, p: u32) -> Result<ExactModel> {
        let lambda = LambdaAlgebra::new(n, d, p)?;
        let e = lambda.basic_idempotent()?;
        let basic = lambda.corner(&e, &format!("basic Λ({n},{d})"))?;
        let simples = lambda.simple_modules()?;
        let basic_labels = label_classes(&lambda, &basic, &simples)?;
        let triv = basic.module(&lambda, &GModule::trivial(p, d - 1))?;
        let blocks = crate::homological::block_decomposition(&basic.alg, Some(&triv))?;
        let e0 = blocks
            .principal()
            .ok_or_else(|| Error::Unsupported("no block acts on the trivial module".into()))?
            .idempotent
            .clone();
        let e0 = basic.to_lambda(&lambda, &e0);
        let principal = lambda.corner(&e0, &format!("principal block of Λ({n},{d})"))?;
        let mut in_block = Vec::new();
        for (mu, s) in simples {
            if principal.module(&lambda, &s)?.dim() > 0 {
                in_block.push((mu, s));
            }
        }
        let labels = label_classes(&lambda, &principal, &in_block)?;
        Ok(ExactModel { lambda, basic, basic_labels, blocks, principal, labels })
    }

    /// `E₀M` over the principal basic algebra.
    pub fn principal_module(&self, m: &GModule) -> Result<AlgModule> {
        self.principal.module(&self.lambda, m)
    }

    /// `EM` over the basic algebra.
    pub fn basic_module(&self, m: &GModule) -> Result<AlgModule> {
        self.basic.module(&self.lambda, m)
    }

    /// Class index of D^μ among the principal-block simples.
    pub fn class_of(&self, mu: &Partition) -> Option<usize> {
        self.labels.iter().position(|l| l == mu)
    }

    /// `Σ_{i,j} dim D_i · dim D_j · dim e_i Γ e_j`, which equals dim Λ exactly
    /// when the basic idempotent meets every simple.
    pub fn morita_dimension_check(&self) -> Result<usize> {
        let st = self.basic.alg.structure()?;
        let simples = self.lambda.simple_modules()?;
        let dims: Vec<usize> = self
            .basic_labels
            .iter()
            .map(|l| simples.iter().find(|(w, _)| w == l).map(|(_, s)| s.dim).unwrap_or(0))
            .collect();
        let a = &self.basic.alg;
        let mut total = 0;
        for (i, ei) in st.reps.iter().enumerate() {
            for (j, ej) in st.reps.iter().enumerate() {
                let c = a.left_matrix(ei).mul(&a.right_matrix(ej)).rank();
                total += dims[i] * dims[j] * c;
            }
        }
        Ok(total)
    }
}

/// Matches each simple class of a corner algebra with the D^μ it comes from.
fn label_classes(lam: &LambdaAlgebra, corner: &LambdaCorner, simples: &[(Partition, GModule)]) -> Result<Vec<Partition>> {
    let st = corner.alg.structure()?;
    let mut labels: Vec<Option<Partition>> = vec![None; st.num_simples()];
    for (mu, s) in simples {
        let m = corner.module(lam, s)?;
        if m.dim() == 0 {
            continue;
        }
        let hits: Vec<usize> = (0..st.num_simples()).filter(|&c| !m.act(&st.reps[c]).is_zero()).collect();
        if hits.len() != 1 || labels[hits[0]].is_some() {
            return Err(Error::Unsupported(format!("D({mu}) does not match a unique simple class")));
        }
        labels[hits[0]] = Some(mu.clone());
    }
    labels
        .into_iter()
        .map(|l| l.ok_or_else(|| Error::Unsupported("unlabelled simple class".into())))
        .collect()
}

static EXACT_P3: std::sync::OnceLock<Result<ExactModel>> = std::sync::OnceLock::new();

/// The exact model of Λ(3,6) over F_3, built once per process.
pub fn exact_model_p3() -> Result<&'static ExactModel> {
    EXACT_P3.get_or_init(|| ExactModel::new(3, 6, 3)).as_ref().map_err(|e| e.clone())
}

/// Basic Schur algebra `End(⊕_λ Y^λ)` acting on its natural module `Q = ⊕_λ Y^λ`.
pub struct BasicSchur {
    pub alg: Arc<FDAlgebra>,
    pub youngs: Vec<YoungModule>,
    /// `Q` as a kS_d-module.
    pub q_group: GModule,
    /// `Q` as a module over the basic Schur algebra.
    pub natural: AlgModule,
    /// Idempotent projecting `Q` onto each Young summand, in weight order.
    pub young_idempotents: Vec<Vec<u32>>,
    /// Weight labelling each simple class.
    pub labels: Vec<Partition>,
}

impl BasicSchur {
    pub fn new(n: usize, d: usize, p: u32, seed: u64) -> Result<BasicSchur> {
        let weights = partitions_in(n, d);
        let youngs = weights.iter().map(|w| young_module(w, p, seed)).collect::<Result<Vec<_>>>()?;
        let gms: Vec<GModule> = youngs.iter().map(|y| y.module.clone()).collect();
        let q_group = GModule::direct_sum_all(p, d.saturating_sub(1), &gms).tagged("Q");
        let ends = crate::module::hom_space(&q_group, &q_group);
        let (alg, sources) = FDAlgebra::from_spanning_matrices(p, q_group.dim, &ends, &format!("basic S({n},{d})"))?;
        let alg = Arc::new(alg);
        let natural = AlgModule::new(&alg, sources.iter().map(|&s| ends[s].clone()).collect(), "Q")?;
        let mut offset = 0;
        let mut young_idempotents = Vec::new();
        for y in &youngs {
            let mut e = FpMatrix::zeros(p, q_group.dim, q_group.dim);
            for i in offset..offset + y.module.dim {
                e.set(i, i, 1);
            }
            offset += y.module.dim;
            let x = natural
                .element_of_operator(&e)
                .ok_or_else(|| Error::Unsupported("Young projection outside the endomorphism algebra".into()))?;
            young_idempotents.push(x);
        }
        let st = alg.structure()?;
        let mut labels: Vec<Option<Partition>> = vec![None; st.num_simples()];
        for (w, e) in weights.iter().zip(&young_idempotents) {
            let hits: Vec<usize> = (0..st.num_simples()).filter(|&c| !st.simples[c].act(e).is_zero()).collect();
            if hits.len() != 1 || labels[hits[0]].is_some() {
                return Err(Error::Unsupported(format!("Y({w}) does not match a unique simple class")));
            }
            labels[hits[0]] = Some(w.clone());
        }
        let labels = labels
            .into_iter()
            .map(|l| l.ok_or_else(|| Error::Unsupported("unlabelled simple class".into())))
            .collect::<Result<_>>()?;
        Ok(BasicSchur { alg, youngs, q_group, natural, young_idempotents, labels })
    }

    pub fn class_of(&self, w: &Partition) -> Option<usize> {
        self.labels.iter().position(|l| l == w)
    }

    pub fn young_index(&self, w: &Partition) -> Option<usize> {
        self.youngs.iter().position(|y| &y.weight == w)
    }

    /// Image of a kS_d-idempotent on `Q` as a submodule of the natural module.
    pub fn image_of_group_idempotent(&self, f: &FpMatrix) -> Result<AlgModule> {
        let cols = f.column_basis();
        Ok(self.natural.submodule(&cols)?.0)
    }

    /// Pairwise non-isomorphic indecomposable summands `e·Q` of the natural
    /// module, one per primitive idempotent `e` of the basic algebra of Λ
    /// (whose image on `Q` is the full centraliser), labelled by D^μ.
    pub fn natural_indecomposables(&self, model: &ExactModel) -> Result<Vec<(Partition, AlgModule)>> {
        let acts = model.lambda.actions_on(&self.q_group);
        let st = model.basic.alg.structure()?;
        let p = self.q_group.prime;
        let n = self.q_group.dim;
        let mut out = Vec::new();
        for (c, rep) in st.reps.iter().enumerate() {
            let x = model.basic.to_lambda(&model.lambda, rep);
            let op = combine(p, n, n, &acts, &x);
            let q = self.natural.submodule(&op.column_basis())?.0.tagged(format!("Q[{}]", model.basic_labels[c]));
            out.push((model.basic_labels[c].clone(), q));
        }
        Ok(out)
    }
}

/// Image of `(Λ^n V)^{⊗d/n}` over the basic Schur algebra S(n,d): the quotient
/// of `Q` by the sign-twisted relations of each consecutive block of n places.
pub fn exterior_power_image(schur: &BasicSchur, n: usize) -> Result<AlgModule> {
    let q = &schur.q_group;
    if n == 0 || (q.generators.len() + 1) % n != 0 {
        return Err(Error::Unsupported(format!("{} places do not split into blocks of {n}", q.generators.len() + 1)));
    }
    let rels: Vec<FpMatrix> = (0..q.generators.len())
        .filter(|i| (i + 1) % n != 0)
        .map(|i| FpMatrix::identity(q.prime, q.dim).add(&q.generators[i]))
        .collect();
    if rels.is_empty() {
        return Ok(schur.natural.clone());
    }
    let span = rels[1..].iter().fold(rels[0].clone(), |acc, r| acc.hstack(r)).column_basis();
    Ok(schur.natural.quotient(&span)?.0)
}

/// The tilting module `T(2^p)` over the basic Schur algebra S(p,2p), as the
/// image of `(Λ^p V)^{⊗2}`; checked to be indecomposable and outside add Q.
pub fn tilting_summand(schur: &BasicSchur, model: &ExactModel, p: usize) -> Result<AlgModule> {
    let t = exterior_power_image(schur, p)?;
    if !crate::structure::is_indecomposable(&t)? {
        return Err(Error::Unsupported("exterior square image is decomposable".into()));
    }
    if schur.natural_indecomposables(model)?.iter().any(|(_, q)| crate::homological::is_isomorphic(&t, q)) {
        return Err(Error::Unsupported("exterior square image lies in add Q".into()));
    }
    Ok(t.tagged("T(2^p)"))
}

static BASIC_SCHUR_P3: std::sync::OnceLock<Result<BasicSchur>> = std::sync::OnceLock::new();

/// Basic Schur algebra of S(3,6) over F_3, built once per process.
pub fn basic_schur_p3() -> Result<&'static BasicSchur> {
    BASIC_SCHUR_P3.get_or_init(|| BasicSchur::new(3, 6, 3, crate::structure::DEFAULT_SEED)).as_ref().map_err(|e| e.clone())
}
