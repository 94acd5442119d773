//! Modules given by action matrices of a fixed generator list, with submodules,
//! quotients and intertwiner spaces.

use crate::error::{Error, Result};
use crate::linalg::{FpMatrix, SpanTracker, Subspace};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GModule {
    pub prime: u32,
    pub dim: usize,
    pub generators: Vec<FpMatrix>,
    pub origin_tag: String,
}

impl GModule {
    pub fn new(prime: u32, dim: usize, generators: Vec<FpMatrix>, origin_tag: impl Into<String>) -> Result<Self> {
        for g in &generators {
            if g.prime() != prime {
                return Err(Error::PrimeMismatch(g.prime(), prime));
            }
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "generator {}x{} on a module of dimension {dim}",
                    g.rows(),
                    g.cols()
                )));
            }
        }
        Ok(GModule { prime, dim, generators, origin_tag: origin_tag.into() })
    }

    /// Every generator acts as the identity on a one-dimensional space.
    pub fn trivial(prime: u32, ngens: usize) -> Self {
        GModule { prime, dim: 1, generators: vec![FpMatrix::identity(prime, 1); ngens], origin_tag: "trivial".into() }
    }

    /// Every generator acts as −1 on a one-dimensional space.
    pub fn sign(prime: u32, ngens: usize) -> Self {
        let m = FpMatrix::from_rows(prime, &[vec![-1]]);
        GModule { prime, dim: 1, generators: vec![m; ngens], origin_tag: "sign".into() }
    }

    pub fn zero(prime: u32, ngens: usize) -> Self {
        GModule { prime, dim: 0, generators: vec![FpMatrix::zeros(prime, 0, 0); ngens], origin_tag: "zero".into() }
    }

    pub fn tagged(mut self, tag: impl Into<String>) -> Self {
        self.origin_tag = tag.into();
        self
    }

    pub fn ngens(&self) -> usize {
        self.generators.len()
    }

    pub fn act(&self, g: usize, v: &[u32]) -> Vec<u32> {
        self.generators[g].mul_vec(v)
    }

    fn compatible(&self, other: &GModule) -> Result<()> {
        if self.prime != other.prime {
            return Err(Error::PrimeMismatch(self.prime, other.prime));
        }
        if self.ngens() != other.ngens() {
            return Err(Error::ModuleMismatch(format!(
                "{} generators against {}",
                self.ngens(),
                other.ngens()
            )));
        }
        Ok(())
    }

    pub fn direct_sum(&self, other: &GModule) -> GModule {
        assert!(self.compatible(other).is_ok(), "incompatible modules");
        let generators = self
            .generators
            .iter()
            .zip(&other.generators)
            .map(|(a, b)| FpMatrix::block_diag(self.prime, &[a.clone(), b.clone()]))
            .collect();
        GModule {
            prime: self.prime,
            dim: self.dim + other.dim,
            generators,
            origin_tag: format!("{}+{}", self.origin_tag, other.origin_tag),
        }
    }

    pub fn direct_sum_all(prime: u32, ngens: usize, parts: &[GModule]) -> GModule {
        let generators = (0..ngens)
            .map(|i| {
                let blocks: Vec<FpMatrix> = parts.iter().map(|m| m.generators[i].clone()).collect();
                FpMatrix::block_diag(prime, &blocks)
            })
            .collect();
        GModule {
            prime,
            dim: parts.iter().map(|m| m.dim).sum(),
            generators,
            origin_tag: parts.iter().map(|m| m.origin_tag.as_str()).collect::<Vec<_>>().join("+"),
        }
    }

    /// Direct sum of `k` copies.
    pub fn power(&self, k: usize) -> GModule {
        GModule::direct_sum_all(self.prime, self.ngens(), &vec![self.clone(); k])
    }

    /// Transposes every generator; for involutive generators this is the
    /// contravariant dual twisted by inversion.
    pub fn dual_natural(&self) -> GModule {
        GModule {
            prime: self.prime,
            dim: self.dim,
            generators: self.generators.iter().map(FpMatrix::transpose).collect(),
            origin_tag: format!("dual({})", self.origin_tag),
        }
    }

    /// s_i² = 1, (s_i s_{i+1})³ = 1 and (s_i s_j)² = 1 for |i − j| > 1.
    pub fn satisfies_coxeter_relations(&self) -> bool {
        let g = &self.generators;
        let n = g.len();
        for i in 0..n {
            if !g[i].mul(&g[i]).is_identity() {
                return false;
            }
            for j in i + 1..n {
                let prod = g[i].mul(&g[j]);
                let order = if j == i + 1 { 3 } else { 2 };
                if !prod.pow(order).is_identity() {
                    return false;
                }
            }
        }
        true
    }

    /// Whether the span of the given columns is stable under every generator.
    pub fn is_stable(&self, cols: &FpMatrix) -> bool {
        let s = Subspace::from_columns(cols);
        self.generators.iter().all(|g| {
            let img = g.mul(cols);
            (0..img.cols()).all(|j| s.contains(&img.column(j)))
        })
    }

    /// Submodule spanned by independent columns of `cols`; returns the module
    /// and the embedding (the columns themselves).
    pub fn submodule(&self, cols: &FpMatrix) -> Result<(GModule, FpMatrix)> {
        let k = cols.cols();
        if cols.rank() != k {
            return Err(Error::NotSubmodule("basis columns are dependent".into()));
        }
        let piv = cols.transpose().rref().pivots;
        let square = cols.select_rows(&piv);
        let inv = square.inverse().expect("pivot rows give an invertible block");
        let mut generators = Vec::with_capacity(self.ngens());
        for g in &self.generators {
            let img = g.mul(cols);
            let x = inv.mul(&img.select_rows(&piv));
            if cols.mul(&x) != img {
                return Err(Error::NotSubmodule(format!("span not stable in {}", self.origin_tag)));
            }
            generators.push(x);
        }
        let m = GModule { prime: self.prime, dim: k, generators, origin_tag: format!("sub({})", self.origin_tag) };
        Ok((m, cols.clone()))
    }

    /// Quotient by the submodule spanned by the columns of `sub`; returns the
    /// quotient and the projection matrix (dim quotient × dim self).
    pub fn quotient(&self, sub: &FpMatrix) -> Result<(GModule, FpMatrix)> {
        let s = Subspace::from_columns(sub);
        let basis_sub = s.basis().transpose();
        if !self.is_stable(&basis_sub) {
            return Err(Error::NotSubmodule(format!("span not stable in {}", self.origin_tag)));
        }
        let comp = s.unit_complement().transpose();
        let full = basis_sub.hstack(&comp);
        let inv = full.inverse().expect("complement completes a basis");
        let k = s.dim();
        let q = self.dim - k;
        let rows: Vec<usize> = (k..self.dim).collect();
        let proj = inv.select_rows(&rows);
        let generators = self.generators.iter().map(|g| proj.mul(&g.mul(&comp))).collect();
        let m = GModule { prime: self.prime, dim: q, generators, origin_tag: format!("quot({})", self.origin_tag) };
        Ok((m, proj))
    }

    /// Columns spanning the submodule generated by the given vectors.
    pub fn spin(&self, vectors: &[Vec<u32>]) -> FpMatrix {
        let mut t = SpanTracker::new(self.prime, self.dim);
        let mut done = 0;
        for v in vectors {
            t.insert(v);
            while done < t.dim() {
                let b = t.accepted()[done].clone();
                for g in &self.generators {
                    t.insert(&g.mul_vec(&b));
                }
                done += 1;
            }
        }
        t.basis_columns()
    }

    /// Submodule generated by the given vectors, with its embedding.
    pub fn generated_submodule(&self, vectors: &[Vec<u32>]) -> (GModule, FpMatrix) {
        let cols = self.spin(vectors);
        self.submodule(&cols).expect("spun spaces are stable")
    }

    /// Image of a module map `f: other → self` as a submodule of self.
    pub fn image_of(&self, f: &FpMatrix) -> (GModule, FpMatrix) {
        let cols = f.column_basis();
        self.submodule(&cols).expect("images of homomorphisms are submodules")
    }

    /// Kernel of a module map `f: self → other`, as a submodule with embedding.
    pub fn kernel_of(&self, f: &FpMatrix) -> (GModule, FpMatrix) {
        let ns = f.nullspace();
        self.submodule(&ns).expect("kernels of homomorphisms are submodules")
    }

    /// Restriction to a sublist of generators.
    pub fn restrict_generators(&self, idx: &[usize]) -> GModule {
        GModule {
            prime: self.prime,
            dim: self.dim,
            generators: idx.iter().map(|&i| self.generators[i].clone()).collect(),
            origin_tag: format!("res({})", self.origin_tag),
        }
    }

    /// Transports the module along a change of basis `t` (new = t⁻¹ · old · t).
    pub fn conjugate_by(&self, t: &FpMatrix) -> GModule {
        let inv = t.inverse().expect("invertible change of basis");
        GModule {
            prime: self.prime,
            dim: self.dim,
            generators: self.generators.iter().map(|g| inv.mul(&g.mul(t))).collect(),
            origin_tag: self.origin_tag.clone(),
        }
    }
}

/// Spin basis of `m` together with the images of each basis vector under a
/// generic homomorphism `m → n`, expressed linearly in the free parameters.
struct HomSolution {
    basis: Vec<Vec<u32>>,
    images: Vec<FpMatrix>,
    params: usize,
}

fn solve_homs(m: &GModule, n: &GModule) -> HomSolution {
    let p = m.prime;
    let (dm, dn) = (m.dim, n.dim);
    let mut tracker = SpanTracker::new(p, dm);
    let mut images: Vec<FpMatrix> = Vec::new();
    let mut params = 0usize;
    let mut next_root = 0usize;
    let mut done = 0usize;
    while tracker.dim() < dm || done < tracker.dim() {
        if done == tracker.dim() {
            let mut e = vec![0u32; dm];
            loop {
                e.iter_mut().for_each(|x| *x = 0);
                e[next_root] = 1;
                next_root += 1;
                if !tracker.contains(&e) {
                    break;
                }
            }
            tracker.insert(&e);
            let pad = FpMatrix::zeros(p, dn, dn);
            for r in &mut images {
                *r = r.hstack(&pad);
            }
            images.push(FpMatrix::zeros(p, dn, params).hstack(&FpMatrix::identity(p, dn)));
            params += dn;
            continue;
        }
        let b = tracker.accepted()[done].clone();
        for (gm, gn) in m.generators.iter().zip(&n.generators) {
            let w = gm.mul_vec(&b);
            let lifted = gn.mul(&images[done]);
            match tracker.coordinates(&w) {
                None => {
                    tracker.insert(&w);
                    images.push(lifted);
                }
                Some(c) => {
                    let mut cons = lifted;
                    for (k, &ck) in c.iter().enumerate() {
                        if ck != 0 {
                            cons.axpy(p - ck, &images[k]);
                        }
                    }
                    if !cons.is_zero() {
                        let ker = cons.nullspace();
                        for r in &mut images {
                            *r = r.mul(&ker);
                        }
                        params = ker.cols();
                    }
                }
            }
        }
        done += 1;
    }
    HomSolution { basis: tracker.accepted().to_vec(), images, params }
}

/// Basis of Hom(m, n): all X with X·g(m) = g(n)·X for every generator.
pub fn hom_space(m: &GModule, n: &GModule) -> Vec<FpMatrix> {
    m.compatible(n).expect("compatible modules");
    let p = m.prime;
    if m.dim == 0 || n.dim == 0 {
        return Vec::new();
    }
    let sol = solve_homs(m, n);
    if sol.params == 0 {
        return Vec::new();
    }
    let b = FpMatrix::from_columns(p, m.dim, &sol.basis);
    let binv = b.inverse().expect("spin basis is a basis");
    (0..sol.params)
        .map(|j| {
            let cols: Vec<Vec<u32>> = sol.images.iter().map(|r| r.column(j)).collect();
            FpMatrix::from_columns(p, n.dim, &cols).mul(&binv)
        })
        .collect()
}

pub fn hom_dim(m: &GModule, n: &GModule) -> usize {
    m.compatible(n).expect("compatible modules");
    if m.dim == 0 || n.dim == 0 {
        return 0;
    }
    solve_homs(m, n).params
}

/// Random linear combination of a list of matrices.
pub fn random_combination(basis: &[FpMatrix], rng: &mut ChaCha8Rng) -> Option<FpMatrix> {
    let first = basis.first()?;
    let p = first.prime();
    let mut acc = FpMatrix::zeros(p, first.rows(), first.cols());
    for b in basis {
        acc.axpy(rng.gen_range(0..p), b);
    }
    Some(acc)
}

/// Seeded search for an invertible intertwiner.
pub fn find_isomorphism(m: &GModule, n: &GModule, seed: u64) -> Option<FpMatrix> {
    if m.dim != n.dim || m.prime != n.prime || m.ngens() != n.ngens() {
        return None;
    }
    if m.dim == 0 {
        return Some(FpMatrix::zeros(m.prime, 0, 0));
    }
    let homs = hom_space(m, n);
    if homs.is_empty() {
        return None;
    }
    if homs.len() == 1 {
        return (homs[0].rank() == m.dim).then(|| homs[0].clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let f = random_combination(&homs, &mut rng)?;
        if f.rank() == m.dim {
            return Some(f);
        }
    }
    None
}

pub fn is_isomorphic(m: &GModule, n: &GModule) -> bool {
    find_isomorphism(m, n, 0x5eed).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(p: u32, images: &[usize]) -> FpMatrix {
        let n = images.len();
        let mut m = FpMatrix::zeros(p, n, n);
        for (j, &i) in images.iter().enumerate() {
            m.set(i, j, 1);
        }
        m
    }

    #[test]
    fn permutation_module_of_s3() {
        let m = GModule::new(3, 3, vec![perm(3, &[1, 0, 2]), perm(3, &[0, 2, 1])], "M").unwrap();
        assert!(m.satisfies_coxeter_relations());
        let t = GModule::trivial(3, 2);
        assert_eq!(hom_dim(&t, &m), 1);
        assert_eq!(hom_dim(&m, &t), 1);
        assert_eq!(hom_dim(&m, &m), 2);
        let homs = hom_space(&m, &m);
        for h in &homs {
            for g in &m.generators {
                assert_eq!(h.mul(g), g.mul(h));
            }
        }
    }

    #[test]
    fn quotient_and_submodule() {
        let m = GModule::new(3, 3, vec![perm(3, &[1, 0, 2]), perm(3, &[0, 2, 1])], "M").unwrap();
        let ones = FpMatrix::from_rows(3, &[vec![1], vec![1], vec![1]]);
        let (sub, _) = m.submodule(&ones).unwrap();
        assert_eq!(sub.dim, 1);
        let (q, proj) = m.quotient(&ones).unwrap();
        assert_eq!(q.dim, 2);
        for (g, h) in m.generators.iter().zip(&q.generators) {
            assert_eq!(proj.mul(g), h.mul(&proj));
        }
        let bad = FpMatrix::from_rows(3, &[vec![1], vec![0], vec![0]]);
        assert!(m.submodule(&bad).is_err());
    }

    #[test]
    fn isomorphism_detection() {
        let m = GModule::new(5, 3, vec![perm(5, &[1, 0, 2]), perm(5, &[0, 2, 1])], "M").unwrap();
        let t = FpMatrix::from_rows(5, &[vec![1, 2, 0], vec![0, 1, 3], vec![1, 0, 1]]);
        let c = m.conjugate_by(&t);
        assert!(is_isomorphic(&m, &c));
        let s = GModule::sign(5, 2).direct_sum(&GModule::trivial(5, 2)).direct_sum(&GModule::trivial(5, 2));
        assert!(!is_isomorphic(&m, &s));
    }
}
