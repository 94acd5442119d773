//! Finite-dimensional algebras over F_p held by structure constants in a basis
//! of words in a small generating set, and modules over them.

use std::fmt;
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, SpanTracker, Subspace};
use crate::module::{hom_space, GModule};

/// How a basis element is reached from an earlier one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Side {
    /// `b_i = g · b_parent`
    Left,
    /// `b_i = b_parent · g`
    Right,
}

pub struct FDAlgebra {
    pub(crate) prime: u32,
    pub(crate) dim: usize,
    /// `left[i]` is left multiplication by `b_i` in the basis.
    pub(crate) left: Vec<FpMatrix>,
    /// Generator `k` is basis element `k + 1`; `b_0` is the unit.
    pub(crate) ngens: usize,
    pub(crate) steps: Vec<Option<(usize, usize)>>,
    pub(crate) side: Side,
    pub(crate) name: String,
    pub(crate) radical: OnceLock<Subspace>,
    pub(crate) structure: OnceLock<Result<Arc<AlgebraStructure>>>,
    pub(crate) opposite: OnceLock<Arc<FDAlgebra>>,
}

impl fmt::Debug for FDAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FDAlgebra({}, dim {}, {} generators, p = {})", self.name, self.dim, self.ngens, self.prime)
    }
}

fn flat(m: &FpMatrix) -> Vec<u32> {
    m.entries().to_vec()
}

impl FDAlgebra {
    /// Algebra spanned by square matrices acting on F_p^n. The span (together
    /// with the identity) must be closed under multiplication; closure is
    /// checked against random vectors. Returns the algebra and, for each
    /// generator, the index of the input matrix it came from.
    pub fn from_spanning_matrices(prime: u32, n: usize, mats: &[FpMatrix], name: &str) -> Result<(FDAlgebra, Vec<usize>)> {
        for m in mats {
            if m.rows() != n || m.cols() != n {
                return Err(Error::DimensionMismatch(format!("{}x{} matrix in an algebra on F_p^{n}", m.rows(), m.cols())));
            }
            if m.prime() != prime {
                return Err(Error::PrimeMismatch(m.prime(), prime));
            }
        }
        let id = FpMatrix::identity(prime, n);
        let mut tracker = SpanTracker::new(prime, n * n);
        tracker.insert(&flat(&id));
        let mut src: Vec<Option<usize>> = vec![None];
        let mut elems: Vec<&FpMatrix> = vec![&id];
        for (i, m) in mats.iter().enumerate() {
            if tracker.insert(&flat(m)) {
                src.push(Some(i));
                elems.push(m);
            }
        }
        let d = tracker.dim();
        let piv: Vec<(usize, usize)> = tracker.pivots().iter().map(|&q| (q / n, q % n)).collect();

        // structure constants in the spanning basis, read off at pivot entries
        let consts: Vec<Vec<Vec<u32>>> = (0..d)
            .into_par_iter()
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let vals: Vec<u32> = piv
                            .iter()
                            .map(|&(r, c)| {
                                let a = elems[i].row(r);
                                let mut s = 0u64;
                                for (t, &x) in a.iter().enumerate() {
                                    if x != 0 {
                                        s += x as u64 * elems[j].get(t, c) as u64;
                                    }
                                }
                                (s % prime as u64) as u32
                            })
                            .collect();
                        tracker.coordinates_at_pivots(&vals)
                    })
                    .collect()
            })
            .collect();

        // closure check: b_i (b_j v) against the predicted combination
        let mut rng = ChaCha8Rng::seed_from_u64(0xc105e);
        for _ in 0..2 {
            let v: Vec<u32> = (0..n).map(|_| rng.gen_range(0..prime)).collect();
            let bv: Vec<Vec<u32>> = elems.iter().map(|b| b.mul_vec(&v)).collect();
            let bad = (0..d).into_par_iter().any(|i| {
                (0..d).any(|j| {
                    let lhs = elems[i].mul_vec(&bv[j]);
                    let mut rhs = vec![0u64; n];
                    for (t, &c) in consts[i][j].iter().enumerate() {
                        if c != 0 {
                            for (x, &y) in rhs.iter_mut().zip(&bv[t]) {
                                *x += c as u64 * y as u64;
                            }
                        }
                    }
                    lhs.iter().zip(&rhs).any(|(&a, &b)| a as u64 != b % prime as u64)
                })
            });
            if bad {
                return Err(Error::Unsupported(format!("span of matrices for {name} is not closed under multiplication")));
            }
        }
        let left_span: Vec<FpMatrix> =
            (0..d).map(|i| FpMatrix::from_columns(prime, d, &consts[i])).collect();
        let (alg, gens) = Self::from_left_matrices(prime, left_span, name)?;
        let sources = gens.iter().map(|&g| src[g].expect("the unit is never a generator")).collect();
        Ok((alg, sources))
    }

    /// Subalgebra generated by the given square matrices (and the identity).
    pub fn generated_by_matrices(prime: u32, n: usize, gens: &[FpMatrix], name: &str) -> Result<(FDAlgebra, Vec<usize>)> {
        let mut tracker = SpanTracker::new(prime, n * n);
        let mut elems = vec![FpMatrix::identity(prime, n)];
        tracker.insert(&flat(&elems[0]));
        let mut done = 0;
        while done < elems.len() {
            let b = elems[done].clone();
            for g in gens {
                let x = g.mul(&b);
                if tracker.insert(&flat(&x)) {
                    elems.push(x);
                }
            }
            done += 1;
        }
        let mut all: Vec<FpMatrix> = gens.to_vec();
        all.extend(elems.into_iter().skip(1));
        let (alg, src) = Self::from_spanning_matrices(prime, n, &all, name)?;
        Ok((alg, src))
    }

    /// Builds the algebra from left multiplication matrices in some basis whose
    /// element 0 is the unit. Returns the algebra in a word basis together with
    /// the old basis indices chosen as generators.
    pub fn from_left_matrices(prime: u32, left: Vec<FpMatrix>, name: &str) -> Result<(FDAlgebra, Vec<usize>)> {
        let d = left.len();
        if d == 0 {
            return Err(Error::Unsupported("zero algebra".into()));
        }
        let unit = unit_vec(d, 0);
        // greedy generator choice
        let mut gens: Vec<usize> = Vec::new();
        let mut span = SpanTracker::new(prime, d);
        span.insert(&unit);
        for i in 1..d {
            if span.contains(&unit_vec(d, i)) {
                continue;
            }
            gens.push(i);
            // the new generator has to be applied to everything found so far
            let mut done = 0;
            while done < span.dim() {
                let b = span.accepted()[done].clone();
                for &g in &gens {
                    span.insert(&left[g].mul_vec(&b));
                }
                done += 1;
            }
            if span.dim() == d {
                break;
            }
        }
        if span.dim() != d {
            return Err(Error::Unsupported(format!("{name}: basis element 0 is not a unit")));
        }
        // word basis by breadth-first spinning of the unit
        let mut words = SpanTracker::new(prime, d);
        words.insert(&unit);
        let mut steps: Vec<Option<(usize, usize)>> = vec![None];
        for (k, &g) in gens.iter().enumerate() {
            let ok = words.insert(&unit_vec(d, g));
            debug_assert!(ok);
            steps.push(Some((k, 0)));
        }
        let mut done = 1;
        while done < words.dim() {
            let b = words.accepted()[done].clone();
            for (k, &g) in gens.iter().enumerate() {
                if words.insert(&left[g].mul_vec(&b)) {
                    steps.push(Some((k, done)));
                }
            }
            done += 1;
        }
        let t = words.basis_columns();
        let tinv = t.inverse().ok_or_else(|| Error::Unsupported("word basis is singular".into()))?;
        let lgen: Vec<FpMatrix> = gens.iter().map(|&g| tinv.mul(&left[g].mul(&t))).collect();
        let mut new_left: Vec<FpMatrix> = Vec::with_capacity(d);
        new_left.push(FpMatrix::identity(prime, d));
        for i in 1..d {
            let (k, par) = steps[i].expect("non-unit basis elements have a step");
            let m = lgen[k].mul(&new_left[par]);
            new_left.push(m);
        }
        // consistency: the basis must match its own structure constants
        for (i, l) in new_left.iter().enumerate() {
            if l.column(0) != unit_vec(d, i) {
                return Err(Error::Unsupported(format!("{name}: structure constants are not associative")));
            }
        }
        let ngens = gens.len();
        Ok((
            FDAlgebra {
                prime,
                dim: d,
                left: new_left,
                ngens,
                steps,
                side: Side::Left,
                name: name.to_string(),
                radical: OnceLock::new(),
                structure: OnceLock::new(),
                opposite: OnceLock::new(),
            },
            gens,
        ))
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn ngens(&self) -> usize {
        self.ngens
    }

    /// Basis index of generator `k`.
    pub fn generator_index(&self, k: usize) -> usize {
        k + 1
    }

    pub fn unit(&self) -> Vec<u32> {
        unit_vec(self.dim, 0)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        unit_vec(self.dim, i)
    }

    /// Left multiplication by basis element `i`.
    pub fn left_basis(&self, i: usize) -> &FpMatrix {
        &self.left[i]
    }

    /// Word in the generators for each basis element, read as a product from left to right.
    pub fn word(&self, i: usize) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = i;
        while let Some((k, par)) = self.steps[cur] {
            w.push(k);
            cur = par;
        }
        if self.side == Side::Right {
            w.reverse();
        }
        w
    }

    /// Left multiplication by an arbitrary element.
    pub fn left_matrix(&self, x: &[u32]) -> FpMatrix {
        combine(self.prime, self.dim, self.dim, &self.left, x)
    }

    /// Right multiplication by an arbitrary element.
    pub fn right_matrix(&self, x: &[u32]) -> FpMatrix {
        let cols: Vec<Vec<u32>> = self.left.iter().map(|l| l.mul_vec(x)).collect();
        FpMatrix::from_columns(self.prime, self.dim, &cols)
    }

    pub fn mul(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let p = self.prime as u64;
        let mut out = vec![0u64; self.dim];
        for (i, &c) in x.iter().enumerate() {
            if c != 0 {
                let v = self.left[i].mul_vec(y);
                for (o, a) in out.iter_mut().zip(v) {
                    *o += c as u64 * a as u64;
                }
            }
        }
        out.into_iter().map(|v| (v % p) as u32).collect()
    }

    pub fn add(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| (a + b) % self.prime).collect()
    }

    pub fn sub(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter().zip(y).map(|(&a, &b)| (a + self.prime - b) % self.prime).collect()
    }

    pub fn scale(&self, c: u32, x: &[u32]) -> Vec<u32> {
        x.iter().map(|&a| (a as u64 * c as u64 % self.prime as u64) as u32).collect()
    }

    pub fn is_idempotent(&self, e: &[u32]) -> bool {
        self.mul(e, e) == e
    }

    pub fn is_central(&self, z: &[u32]) -> bool {
        (0..self.dim).all(|i| {
            let b = self.basis_vector(i);
            self.mul(z, &b) == self.mul(&b, z)
        })
    }

    /// Whether the word-basis structure constants define an associative algebra:
    /// checked on every basis triple when `dim ≤ exhaustive`, otherwise on random triples.
    pub fn check_associativity(&self, exhaustive: usize, seed: u64) -> bool {
        let d = self.dim;
        let check = |i: usize, j: usize, k: usize| {
            let (bi, bj, bk) = (self.basis_vector(i), self.basis_vector(j), self.basis_vector(k));
            self.mul(&self.mul(&bi, &bj), &bk) == self.mul(&bi, &self.mul(&bj, &bk))
        };
        if d <= exhaustive {
            (0..d).into_par_iter().all(|i| (0..d).all(|j| (0..d).all(|k| check(i, j, k))))
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..4 * d).all(|_| check(rng.gen_range(0..d), rng.gen_range(0..d), rng.gen_range(0..d)))
        }
    }

    /// The opposite algebra on the same basis.
    pub fn opposite(&self) -> FDAlgebra {
        let d = self.dim;
        let p = self.prime;
        let left: Vec<FpMatrix> = (0..d)
            .map(|i| {
                let cols: Vec<Vec<u32>> = (0..d).map(|k| self.left[k].column(i)).collect();
                FpMatrix::from_columns(p, d, &cols)
            })
            .collect();
        FDAlgebra {
            prime: p,
            dim: d,
            left,
            ngens: self.ngens,
            steps: self.steps.clone(),
            side: match self.side {
                Side::Left => Side::Right,
                Side::Right => Side::Left,
            },
            name: format!("{}^op", self.name),
            radical: OnceLock::new(),
            structure: OnceLock::new(),
            opposite: OnceLock::new(),
        }
    }

    /// The opposite algebra, built once and shared.
    pub fn opposite_arc(&self) -> Arc<FDAlgebra> {
        self.opposite.get_or_init(|| Arc::new(self.opposite())).clone()
    }

    /// Action matrices of every basis element, given generator matrices.
    pub fn basis_actions(&self, gens: &[FpMatrix]) -> Vec<FpMatrix> {
        self.basis_actions_on(gens.first().map(|g| g.rows()).unwrap_or(0), gens)
    }

    pub(crate) fn basis_actions_on(&self, n: usize, gens: &[FpMatrix]) -> Vec<FpMatrix> {
        let mut out: Vec<FpMatrix> = Vec::with_capacity(self.dim);
        out.push(FpMatrix::identity(self.prime, n));
        for i in 1..self.dim {
            let (k, par) = self.steps[i].expect("non-unit basis elements have a step");
            let m = match self.side {
                Side::Left => gens[k].mul(&out[par]),
                Side::Right => out[par].mul(&gens[k]),
            };
            out.push(m);
        }
        out
    }

    /// Corner algebra `eAe` for an idempotent `e`, together with the
    /// elements of `A` (coordinates) realising its generators.
    pub fn corner(&self, e: &[u32], name: &str) -> Result<(FDAlgebra, Vec<Vec<u32>>)> {
        if !self.is_idempotent(e) {
            return Err(Error::NotIdempotent);
        }
        let le = self.left_matrix(e);
        let re = self.right_matrix(e);
        let sub = le.mul(&re).column_basis();
        let k = sub.cols();
        if k == 0 {
            return Err(Error::Unsupported("corner of the zero idempotent".into()));
        }
        let piv = sub.transpose().rref().pivots;
        let inv = sub.select_rows(&piv).inverse().expect("column basis has full rank");
        let elems: Vec<Vec<u32>> = (0..k).map(|j| sub.column(j)).collect();
        let mats: Vec<FpMatrix> = elems
            .iter()
            .map(|x| {
                let img = self.left_matrix(x).mul(&sub);
                inv.mul(&img.select_rows(&piv))
            })
            .collect();
        let (alg, src) = FDAlgebra::from_spanning_matrices(self.prime, k, &mats, name)?;
        let gens = src.into_iter().map(|s| elems[s].clone()).collect();
        Ok((alg, gens))
    }
}

pub(crate) fn unit_vec(n: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0u32; n];
    v[i] = 1;
    v
}

/// `Σ x_i mats[i]`.
pub(crate) fn combine(prime: u32, rows: usize, cols: usize, mats: &[FpMatrix], x: &[u32]) -> FpMatrix {
    let p = prime as u64;
    let mut acc = vec![0u64; rows * cols];
    for (m, &c) in mats.iter().zip(x) {
        if c != 0 {
            for (a, &b) in acc.iter_mut().zip(m.entries()) {
                *a += c as u64 * b as u64;
            }
        }
    }
    FpMatrix::from_vec(prime, rows, cols, acc.into_iter().map(|v| (v % p) as u32).collect())
        .expect("shape matches")
}

/// A module over an [`FDAlgebra`], held by the action of the generators and
/// of every basis element.
#[derive(Clone)]
pub struct AlgModule {
    pub alg: Arc<FDAlgebra>,
    pub module: GModule,
    actions: Vec<FpMatrix>,
}

impl fmt::Debug for AlgModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AlgModule({} over {}, dim {})", self.module.origin_tag, self.alg.name, self.module.dim)
    }
}

impl AlgModule {
    /// Module from generator matrices, checking every defining relation of the algebra.
    pub fn new(alg: &Arc<FDAlgebra>, gens: Vec<FpMatrix>, tag: &str) -> Result<AlgModule> {
        if gens.len() != alg.ngens {
            return Err(Error::ModuleMismatch(format!("{} generator matrices for {} generators", gens.len(), alg.ngens)));
        }
        let Some(n) = gens.first().map(|g| g.rows()) else {
            return Err(Error::ModuleMismatch(format!("{} has no generators; give the dimension with `with_dim`", alg.name)));
        };
        Self::with_dim(alg, n, gens, tag)
    }

    /// Module of a given dimension from generator matrices; needed when the
    /// algebra has no generators beyond the unit.
    pub fn with_dim(alg: &Arc<FDAlgebra>, dim: usize, gens: Vec<FpMatrix>, tag: &str) -> Result<AlgModule> {
        if gens.len() != alg.ngens {
            return Err(Error::ModuleMismatch(format!("{} generator matrices for {} generators", gens.len(), alg.ngens)));
        }
        let gm = GModule::new(alg.prime, dim, gens, tag)?;
        let m = Self::from_gmodule_unchecked(alg, gm);
        m.check_relations()?;
        Ok(m)
    }

    pub(crate) fn from_gmodule_unchecked(alg: &Arc<FDAlgebra>, gm: GModule) -> AlgModule {
        let actions = if gm.dim == 0 {
            vec![FpMatrix::zeros(alg.prime, 0, 0); alg.dim]
        } else {
            alg.basis_actions_on(gm.dim, &gm.generators)
        };
        AlgModule { alg: alg.clone(), module: gm, actions }
    }

    fn check_relations(&self) -> Result<()> {
        let a = &self.alg;
        let n = self.dim();
        if n == 0 {
            return Ok(());
        }
        let bad = (0..a.ngens).into_par_iter().any(|k| {
            let g = &self.module.generators[k];
            let lg = &a.left[a.generator_index(k)];
            (0..a.dim).any(|j| {
                let lhs = match a.side {
                    Side::Left => g.mul(&self.actions[j]),
                    Side::Right => self.actions[j].mul(g),
                };
                let coeffs = match a.side {
                    Side::Left => lg.column(j),
                    Side::Right => a.left[j].column(a.generator_index(k)),
                };
                lhs != combine(a.prime, n, n, &self.actions, &coeffs)
            })
        });
        if bad {
            return Err(Error::ModuleMismatch(format!("{} does not satisfy the relations of {}", self.module.origin_tag, a.name)));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    pub fn prime(&self) -> u32 {
        self.alg.prime
    }

    pub fn tag(&self) -> &str {
        &self.module.origin_tag
    }

    pub fn tagged(mut self, tag: impl Into<String>) -> Self {
        self.module.origin_tag = tag.into();
        self
    }

    pub fn basis_action(&self, i: usize) -> &FpMatrix {
        &self.actions[i]
    }

    /// Action of an arbitrary algebra element.
    pub fn act(&self, x: &[u32]) -> FpMatrix {
        combine(self.prime(), self.dim(), self.dim(), &self.actions, x)
    }

    /// The left regular module.
    pub fn regular(alg: &Arc<FDAlgebra>) -> AlgModule {
        let gens = (0..alg.ngens).map(|k| alg.left[alg.generator_index(k)].clone()).collect();
        let gm = GModule::new(alg.prime, alg.dim, gens, format!("{} (regular)", alg.name)).expect("square generators");
        AlgModule { alg: alg.clone(), module: gm, actions: alg.left.clone() }
    }

    pub fn zero(alg: &Arc<FDAlgebra>) -> AlgModule {
        Self::from_gmodule_unchecked(alg, GModule::zero(alg.prime, alg.ngens))
    }

    pub fn submodule(&self, cols: &FpMatrix) -> Result<(AlgModule, FpMatrix)> {
        if cols.cols() == 0 {
            return Ok((Self::zero(&self.alg), FpMatrix::zeros(self.prime(), self.dim(), 0)));
        }
        let (gm, emb) = self.module.submodule(cols)?;
        Ok((Self::from_gmodule_unchecked(&self.alg, gm), emb))
    }

    pub fn quotient(&self, sub: &FpMatrix) -> Result<(AlgModule, FpMatrix)> {
        if sub.cols() == 0 || sub.rank() == 0 {
            return Ok((self.clone(), FpMatrix::identity(self.prime(), self.dim())));
        }
        let (gm, proj) = self.module.quotient(sub)?;
        Ok((Self::from_gmodule_unchecked(&self.alg, gm), proj))
    }

    /// Columns spanning the submodule generated by the given vectors.
    pub fn spin(&self, vectors: &[Vec<u32>]) -> FpMatrix {
        if vectors.is_empty() {
            return FpMatrix::zeros(self.prime(), self.dim(), 0);
        }
        self.module.spin(vectors)
    }

    pub fn direct_sum(&self, other: &AlgModule) -> AlgModule {
        Self::direct_sum_all(&self.alg, &[self.clone(), other.clone()])
    }

    pub fn direct_sum_all(alg: &Arc<FDAlgebra>, parts: &[AlgModule]) -> AlgModule {
        let gms: Vec<GModule> = parts.iter().map(|m| m.module.clone()).collect();
        let gm = GModule::direct_sum_all(alg.prime, alg.ngens, &gms);
        let actions = (0..alg.dim)
            .map(|i| {
                let blocks: Vec<FpMatrix> = parts.iter().map(|m| m.actions[i].clone()).collect();
                FpMatrix::block_diag(alg.prime, &blocks)
            })
            .collect();
        AlgModule { alg: alg.clone(), module: gm, actions }
    }

    /// Vector space dual, a module over the opposite algebra `op` (which must
    /// be `self.alg.opposite()`).
    pub fn dual(&self, op: &Arc<FDAlgebra>) -> AlgModule {
        let gens = self.module.generators.iter().map(|g| g.transpose()).collect();
        let gm = GModule { prime: self.prime(), dim: self.dim(), generators: gens, origin_tag: format!("D({})", self.tag()) };
        AlgModule { alg: op.clone(), module: gm, actions: self.actions.iter().map(|a| a.transpose()).collect() }
    }

    /// `x·M` as a subspace (columns), for an algebra element `x`.
    pub fn image_of_element(&self, x: &[u32]) -> FpMatrix {
        self.act(x).column_basis()
    }

    /// Span of `r·m` over a set of algebra elements `r` and all `m`.
    pub fn span_of_actions(&self, elems: &[Vec<u32>]) -> FpMatrix {
        let n = self.dim();
        if elems.is_empty() || n == 0 {
            return FpMatrix::zeros(self.prime(), n, 0);
        }
        let mut t = SpanTracker::new(self.prime(), n);
        for x in elems {
            let m = self.act(x);
            for c in m.columns() {
                if t.dim() == n {
                    break;
                }
                t.insert(&c);
            }
        }
        t.basis_columns()
    }
}

pub fn alg_hom_space(m: &AlgModule, n: &AlgModule) -> Vec<FpMatrix> {
    if m.dim() == 0 || n.dim() == 0 {
        return Vec::new();
    }
    hom_space(&m.module, &n.module)
}

pub fn alg_hom_dim(m: &AlgModule, n: &AlgModule) -> usize {
    alg_hom_space(m, n).len()
}

pub use crate::structure::AlgebraStructure;

impl AlgModule {
    /// Coordinates of an operator in the span of the basis actions (meaningful
    /// for faithful modules), if it lies there.
    pub fn element_of_operator(&self, x: &FpMatrix) -> Option<Vec<u32>> {
        let mut t = SpanTracker::new(self.prime(), self.dim() * self.dim());
        for a in &self.actions {
            t.insert(a.entries());
        }
        if t.dim() != self.alg.dim {
            return None;
        }
        let c = t.coordinates(x.entries())?;
        // accepted vectors are exactly the basis actions, in order
        Some(c)
    }
}
