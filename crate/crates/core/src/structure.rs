//! Radical, Krull–Schmidt decomposition, primitive idempotents, projective
//! indecomposables and simple modules of an [`FDAlgebra`].

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{alg_hom_space, AlgModule, FDAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, Subspace};
use crate::module::{hom_space, GModule};

/// Default seed for randomised splitting.
pub const DEFAULT_SEED: u64 = 0x5eed_0001;

impl FDAlgebra {
    /// Jacobson radical, as a subspace of coordinate vectors.
    pub fn radical(&self) -> &Subspace {
        self.radical.get_or_init(|| compute_radical(self))
    }

    /// Radical basis as algebra elements.
    pub fn radical_elements(&self) -> Vec<Vec<u32>> {
        let r = self.radical();
        (0..r.dim()).map(|i| r.basis().row(i).to_vec()).collect()
    }

    /// Primitive idempotents, projective indecomposables and simples, computed once.
    pub fn structure(self: &Arc<Self>) -> Result<Arc<AlgebraStructure>> {
        self.structure.get_or_init(|| compute_structure(self, DEFAULT_SEED).map(Arc::new)).clone()
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().dim() == 0
    }

    /// Whether `dim A/rad A = 1`.
    pub fn is_local(&self) -> bool {
        self.dim - self.radical().dim() == 1
    }
}

fn lift_pow_trace(m: &FpMatrix, e: u64, modulus: u64) -> u64 {
    let n = m.rows();
    let mul = |a: &[u64], b: &[u64]| -> Vec<u64> {
        let mut c = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    c[i * n + j] = (c[i * n + j] + x * b[k * n + j]) % modulus;
                }
            }
        }
        c
    };
    let mut base: Vec<u64> = m.entries().iter().map(|&x| x as u64).collect();
    let mut acc: Vec<u64> = (0..n * n).map(|q| u64::from(q / n == q % n)).collect();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        e >>= 1;
        if e > 0 {
            base = mul(&base, &base);
        }
    }
    (0..n).map(|i| acc[i * n + i]).sum::<u64>() % modulus
}

fn ideal_is_nilpotent(a: &FDAlgebra, ideal: &[Vec<u32>]) -> bool {
    let p = a.prime;
    let mats: Vec<FpMatrix> = ideal.iter().map(|x| a.left_matrix(x)).collect();
    let mut cur = Subspace::from_rows(&FpMatrix::from_columns(p, a.dim, ideal).transpose());
    loop {
        if cur.dim() == 0 {
            return true;
        }
        let cb = &cur;
        let rows: Vec<Vec<u32>> = mats
            .par_iter()
            .flat_map_iter(|m| (0..cb.dim()).map(move |j| m.mul_vec(cb.basis().row(j))).collect::<Vec<_>>())
            .collect();
        let next = Subspace::from_rows(&FpMatrix::from_columns(p, a.dim, &rows).transpose());
        if next.dim() >= cur.dim() {
            return false;
        }
        cur = next;
    }
}

/// Radical by the trace-of-p-power filtration
/// `I_i = {x ∈ I_{i-1} : g_i(xy) = 0 ∀y}` in the regular representation,
/// stopping early once the current ideal is nilpotent.
fn compute_radical(a: &FDAlgebra) -> Subspace {
    let p = a.prime;
    let d = a.dim;
    let traces: Vec<u64> = a.left.iter().map(|l| l.trace() as u64).collect();
    // I_0: kernel of x ↦ (Tr(x b_j))_j
    let g0 = FpMatrix::from_vec(
        p,
        d,
        d,
        (0..d)
            .flat_map(|j| {
                let traces = &traces;
                (0..d).map(move |i| {
                    let col = a.left[i].column(j);
                    (col.iter().zip(traces).map(|(&c, &t)| c as u64 * t).sum::<u64>() % p as u64) as u32
                })
            })
            .collect(),
    )
    .expect("square");
    let ns = g0.nullspace();
    let mut ideal: Vec<Vec<u32>> = ns.columns();
    let mut level = 0u32;
    let mut pl = p as usize;
    while pl <= d {
        level += 1;
        pl *= p as usize;
    }
    for i in 1..=level {
        if ideal.is_empty() || ideal_is_nilpotent(a, &ideal) {
            break;
        }
        let q = (p as u64).pow(i);
        let modulus = q * p as u64;
        let cols: Vec<Vec<u32>> = ideal
            .par_iter()
            .map(|x| {
                let lx = a.left_matrix(x);
                (0..d)
                    .map(|y| {
                        let xy = lx.column(y);
                        let t = lift_pow_trace(&a.left_matrix(&xy), q, modulus);
                        debug_assert_eq!(t % q, 0);
                        ((t / q) % p as u64) as u32
                    })
                    .collect()
            })
            .collect();
        let g = FpMatrix::from_columns(p, d, &cols);
        let ker = g.nullspace();
        let basis = FpMatrix::from_columns(p, d, &ideal);
        ideal = basis.mul(&ker).columns();
    }
    Subspace::from_rows(&FpMatrix::from_columns(p, d, &ideal).transpose())
}

/// A direct summand of a module, with its split embedding and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: AlgModule,
    pub embedding: FpMatrix,
    pub projection: FpMatrix,
}

/// Fitting decomposition of `f` on a space of dimension `k`: kernel and image
/// of a high power of `f − c` for some eigenvalue `c`, when proper.
fn fitting_split(f: &FpMatrix) -> Option<(FpMatrix, FpMatrix)> {
    let k = f.rows();
    let p = f.prime();
    let id = FpMatrix::identity(p, k);
    for c in 0..p.min(257) {
        let g = f.sub(&id.scale(c));
        if g.rank() == k {
            continue;
        }
        let mut psi = g;
        let mut e = 1;
        while e < k {
            psi = psi.mul(&psi);
            e *= 2;
        }
        let ker = psi.nullspace();
        if ker.cols() > 0 && ker.cols() < k {
            return Some((ker, psi.column_basis()));
        }
        return None;
    }
    None
}

fn restrict_endo(proj: &FpMatrix, f: &FpMatrix, emb: &FpMatrix) -> FpMatrix {
    proj.mul(&f.mul(emb))
}

/// Whether the endomorphism algebra spanned by `endos` (on a space of
/// dimension `k`) is local with residue field F_p.
fn endomorphisms_local(p: u32, k: usize, endos: &[FpMatrix]) -> Result<bool> {
    let (alg, _) = FDAlgebra::from_spanning_matrices(p, k, endos, "End")?;
    Ok(alg.is_local())
}

/// Splits F_p^n into indecomposable pieces for the algebra spanned by
/// `endos`, returning split embeddings and projections.
pub fn split_by_endomorphisms(p: u32, n: usize, endos: &[FpMatrix], seed: u64, tag: &str) -> Result<Vec<(FpMatrix, FpMatrix)>> {
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut work = vec![(FpMatrix::identity(p, n), FpMatrix::identity(p, n))];
    let mut done: Vec<(FpMatrix, FpMatrix)> = Vec::new();
    while let Some((emb, proj)) = work.pop() {
        let k = emb.cols();
        let mut split = None;
        let mut attempts = 0;
        loop {
            attempts += 1;
            let mut f = FpMatrix::zeros(p, n, n);
            for e in endos {
                let c = rng.gen_range(0..p);
                if c != 0 {
                    f.axpy(c, e);
                }
            }
            let fr = restrict_endo(&proj, &f, &emb);
            if let Some(s) = fitting_split(&fr) {
                split = Some(s);
                break;
            }
            if attempts % 6 == 0 {
                let restricted: Vec<FpMatrix> = endos.iter().map(|e| restrict_endo(&proj, e, &emb)).collect();
                if k == 1 || endomorphisms_local(p, k, &restricted)? {
                    break;
                }
            }
            if attempts > 240 {
                return Err(Error::Unsupported(format!(
                    "could not split a summand of dimension {k} of {tag} (endomorphism ring not split)"
                )));
            }
        }
        match split {
            None => done.push((emb, proj)),
            Some((ker, img)) => {
                let a = ker.cols();
                let basis = ker.hstack(&img);
                let inv = basis.inverse().expect("Fitting decomposition is direct");
                let first: Vec<usize> = (0..a).collect();
                let second: Vec<usize> = (a..k).collect();
                let proj_k = inv.select_rows(&first).mul(&proj);
                let proj_i = inv.select_rows(&second).mul(&proj);
                work.push((emb.mul(&img), proj_i));
                work.push((emb.mul(&ker), proj_k));
            }
        }
    }
    Ok(done)
}

/// Krull–Schmidt decomposition of `m` using the given spanning set of its
/// endomorphism algebra.
pub fn decompose_with_endomorphisms(m: &AlgModule, endos: &[FpMatrix], seed: u64) -> Result<Vec<Summand>> {
    split_by_endomorphisms(m.prime(), m.dim(), endos, seed, m.tag())?
        .into_iter()
        .map(|(emb, proj)| {
            let (module, _) = m.submodule(&emb)?;
            Ok(Summand { module, embedding: emb, projection: proj })
        })
        .collect()
}

/// Krull–Schmidt decomposition of a module given only by generator matrices;
/// returns `(summand, embedding, projection)` triples.
pub fn decompose_gmodule(m: &GModule, seed: u64) -> Result<Vec<(GModule, FpMatrix, FpMatrix)>> {
    let endos = hom_space(m, m);
    split_by_endomorphisms(m.prime, m.dim, &endos, seed, &m.origin_tag)?
        .into_iter()
        .map(|(emb, proj)| {
            let (sub, _) = m.submodule(&emb)?;
            Ok((sub, emb, proj))
        })
        .collect()
}

/// Krull–Schmidt decomposition of `m` into indecomposable summands.
pub fn decompose(m: &AlgModule, seed: u64) -> Result<Vec<Summand>> {
    let endos = alg_hom_space(m, m);
    decompose_with_endomorphisms(m, &endos, seed)
}

/// Whether `m` is indecomposable (its endomorphism ring is local).
pub fn is_indecomposable(m: &AlgModule) -> Result<bool> {
    if m.dim() == 0 {
        return Ok(false);
    }
    let endos = alg_hom_space(m, m);
    endomorphisms_local(m.prime(), m.dim(), &endos)
}

/// `rad(A)·M`, as columns.
pub fn radical_of_module(m: &AlgModule) -> FpMatrix {
    m.span_of_actions(&m.alg.radical_elements())
}

/// Top `M / rad(A)M` with the projection.
pub fn top(m: &AlgModule) -> Result<(AlgModule, FpMatrix)> {
    m.quotient(&radical_of_module(m))
}

/// Socle `{m : rad(A)·m = 0}` with the embedding.
pub fn socle(m: &AlgModule) -> Result<(AlgModule, FpMatrix)> {
    let rad = m.alg.radical_elements();
    let p = m.prime();
    if rad.is_empty() {
        return Ok((m.clone(), FpMatrix::identity(p, m.dim())));
    }
    let stacked = FpMatrix::vstack_all(p, m.dim(), &rad.iter().map(|r| m.act(r)).collect::<Vec<_>>());
    m.submodule(&stacked.nullspace())
}

/// Idempotents, projective indecomposables and simple modules of an algebra.
#[derive(Clone, Debug)]
pub struct AlgebraStructure {
    pub radical_dim: usize,
    /// Complete set of primitive orthogonal idempotents summing to one.
    pub idempotents: Vec<Vec<u32>>,
    /// Isomorphism class of `A e` for each idempotent.
    pub class_of: Vec<usize>,
    /// One idempotent per isomorphism class.
    pub reps: Vec<Vec<u32>>,
    pub pims: Vec<AlgModule>,
    pub pim_embeddings: Vec<FpMatrix>,
    pub simples: Vec<AlgModule>,
}

impl AlgebraStructure {
    pub fn num_simples(&self) -> usize {
        self.reps.len()
    }

    pub fn simple_dims(&self) -> Vec<usize> {
        self.simples.iter().map(|s| s.dim()).collect()
    }

    pub fn is_basic(&self) -> bool {
        self.simples.iter().all(|s| s.dim() == 1)
    }

    /// Sum of the representative idempotents.
    pub fn basic_idempotent(&self, alg: &FDAlgebra) -> Vec<u32> {
        self.reps.iter().fold(vec![0; alg.dim()], |acc, e| alg.add(&acc, e))
    }
}

fn compute_structure(alg: &Arc<FDAlgebra>, seed: u64) -> Result<AlgebraStructure> {
    let reg = AlgModule::regular(alg);
    let endos: Vec<FpMatrix> = (0..alg.dim()).map(|i| alg.right_matrix(&alg.basis_vector(i))).collect();
    let parts = decompose_with_endomorphisms(&reg, &endos, seed)?;
    let unit = alg.unit();
    let rad = alg.radical_elements();
    let mut idempotents = Vec::new();
    let mut class_of = Vec::new();
    let mut reps: Vec<Vec<u32>> = Vec::new();
    let mut pims = Vec::new();
    let mut pim_embeddings = Vec::new();
    let mut simples: Vec<AlgModule> = Vec::new();
    for s in parts {
        let e = s.embedding.mul_vec(&s.projection.mul_vec(&unit));
        let class = simples.iter().position(|t| !t.act(&e).is_zero());
        let c = match class {
            Some(c) => c,
            None => {
                let (top_mod, _) = s.module.quotient(&s.module.span_of_actions(&rad))?;
                simples.push(top_mod.tagged(format!("simple {} of {}", simples.len(), alg.name())));
                reps.push(e.clone());
                pims.push(s.module.clone().tagged(format!("projective {} of {}", pims.len(), alg.name())));
                pim_embeddings.push(s.embedding.clone());
                simples.len() - 1
            }
        };
        idempotents.push(e);
        class_of.push(c);
    }
    Ok(AlgebraStructure {
        radical_dim: alg.radical().dim(),
        idempotents,
        class_of,
        reps,
        pims,
        pim_embeddings,
        simples,
    })
}

/// Primitive idempotent decomposition for a specific seed (uncached).
pub fn structure_with_seed(alg: &Arc<FDAlgebra>, seed: u64) -> Result<AlgebraStructure> {
    compute_structure(alg, seed)
}
