//! Concrete modules for the symmetric group S_d over F_p, acting on the left,
//! with generators the adjacent transpositions s_0, …, s_{d−2} (s_i swaps i and i+1).

use crate::error::{Error, Result};
use crate::linalg::{check_cap, FpMatrix};
use crate::module::GModule;
use crate::partition::Partition;
use itertools::Itertools;
use std::collections::HashMap;

/// Permutation of {0, …, n−1} stored as its image array.
pub type Perm = Vec<usize>;

pub fn compose(g: &[usize], h: &[usize]) -> Perm {
    h.iter().map(|&x| g[x]).collect()
}

pub fn invert(g: &[usize]) -> Perm {
    let mut inv = vec![0; g.len()];
    for (x, &y) in g.iter().enumerate() {
        inv[y] = x;
    }
    inv
}

pub fn transposition(n: usize, i: usize) -> Perm {
    let mut g: Perm = (0..n).collect();
    g.swap(i, i + 1);
    g
}

/// Word `[a_1, …, a_k]` with g = s_{a_1} ⋯ s_{a_k}.
pub fn perm_word(g: &[usize]) -> Vec<usize> {
    let mut cur = g.to_vec();
    let mut word = Vec::new();
    while let Some(i) = (0..cur.len().saturating_sub(1)).find(|&i| cur[i] > cur[i + 1]) {
        cur.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    word
}

pub fn sign(g: &[usize]) -> i64 {
    if perm_word(g).len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Action matrix of an arbitrary permutation on a module with Coxeter generators.
pub fn perm_action(m: &GModule, g: &[usize]) -> FpMatrix {
    perm_word(g)
        .into_iter()
        .fold(FpMatrix::identity(m.prime, m.dim), |acc, i| acc.mul(&m.generators[i]))
}

/// All permutations of {0, …, n−1}.
pub fn all_perms(n: usize) -> Vec<Perm> {
    (0..n).permutations(n).collect()
}

/// Row assignments of {0, …, d−1} into rows of the given sizes, ordered
/// lexicographically by the tuple of row sets.
pub fn tabloids(comp: &[usize]) -> Vec<Vec<u8>> {
    let d: usize = comp.iter().sum();
    let mut out = Vec::new();
    fn rec(comp: &[usize], row: usize, free: Vec<usize>, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if row == comp.len() {
            out.push(cur.clone());
            return;
        }
        for chosen in free.iter().copied().combinations(comp[row]) {
            for &x in &chosen {
                cur[x] = row as u8;
            }
            let rest: Vec<usize> = free.iter().copied().filter(|x| !chosen.contains(x)).collect();
            rec(comp, row + 1, rest, cur, out);
        }
    }
    rec(comp, 0, (0..d).collect(), &mut vec![0u8; d], &mut out);
    out
}

fn perm_module_from_basis(p: u32, d: usize, basis: &[Vec<u8>], tag: String) -> Result<GModule> {
    let n = basis.len();
    check_cap(n, n)?;
    let index: HashMap<&[u8], usize> = basis.iter().enumerate().map(|(i, t)| (t.as_slice(), i)).collect();
    let mut gens = Vec::with_capacity(d.saturating_sub(1));
    for i in 0..d.saturating_sub(1) {
        let mut m = FpMatrix::zeros(p, n, n);
        for (j, t) in basis.iter().enumerate() {
            let mut s = t.clone();
            s.swap(i, i + 1);
            m.set(index[s.as_slice()], j, 1);
        }
        gens.push(m);
    }
    GModule::new(p, n, gens, tag)
}

/// Young permutation module on tabloids of a composition.
pub fn perm_module_composition(comp: &[usize], p: u32) -> Result<GModule> {
    let d = comp.iter().sum();
    let basis = tabloids(comp);
    perm_module_from_basis(p, d, &basis, format!("M({})", comp.iter().join(",")))
}

/// M^λ on tabloids.
pub fn perm_module(lam: &Partition, p: u32) -> Result<GModule> {
    Ok(perm_module_composition(lam.parts(), p)?.tagged(format!("M({lam})")))
}

/// Standard tableaux of shape λ as rows of entries 0..d−1.
pub fn standard_tableaux(lam: &Partition) -> Vec<Vec<Vec<usize>>> {
    let shape = lam.parts().to_vec();
    let d = lam.size();
    let mut out = Vec::new();
    fn rec(shape: &[usize], next: usize, d: usize, t: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if next == d {
            out.push(t.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = t[r].len();
            if len < shape[r] && (r == 0 || t[r - 1].len() > len) {
                t[r].push(next);
                rec(shape, next + 1, d, t, out);
                t[r].pop();
            }
        }
    }
    rec(&shape, 0, d, &mut vec![Vec::new(); shape.len()], &mut out);
    out
}

/// Polytabloid e_T as a vector in M^λ.
pub fn polytabloid(lam: &Partition, tableau: &[Vec<usize>], index: &HashMap<Vec<u8>, usize>, p: u32) -> Vec<u32> {
    let d = lam.size();
    let mut row_of = vec![0u8; d];
    for (r, row) in tableau.iter().enumerate() {
        for &x in row {
            row_of[x] = r as u8;
        }
    }
    let ncols = lam.parts().first().copied().unwrap_or(0);
    let columns: Vec<Vec<usize>> =
        (0..ncols).map(|c| tableau.iter().filter_map(|row| row.get(c).copied()).collect()).collect();
    let mut v = vec![0u32; index.len()];
    let col_perms: Vec<Vec<Perm>> = columns.iter().map(|c| all_perms(c.len())).collect();
    for choice in col_perms.iter().map(|v| v.iter()).multi_cartesian_product() {
        let mut assign = vec![0u8; d];
        let mut sgn = 1i64;
        for (col, perm) in columns.iter().zip(&choice) {
            sgn *= sign(perm);
            for (k, &x) in col.iter().enumerate() {
                assign[col[perm[k]]] = row_of[x];
            }
        }
        let i = index[&assign];
        v[i] = ((v[i] as i64 + sgn).rem_euclid(p as i64)) as u32;
    }
    v
}

/// S^λ as the span of polytabloids of standard tableaux, with its embedding into M^λ.
pub fn specht_module(lam: &Partition, p: u32) -> Result<(GModule, FpMatrix)> {
    let m = perm_module(lam, p)?;
    let basis = tabloids(lam.parts());
    let index: HashMap<Vec<u8>, usize> = basis.into_iter().enumerate().map(|(i, t)| (t, i)).collect();
    let cols: Vec<Vec<u32>> =
        standard_tableaux(lam).iter().map(|t| polytabloid(lam, t, &index, p)).collect();
    let emb = FpMatrix::from_columns(p, m.dim, &cols);
    let (s, emb) = m.submodule(&emb)?;
    Ok((s.tagged(format!("S({lam})")), emb))
}

/// D^λ = S^λ / (S^λ ∩ S^λ⊥) for p-regular λ, via the Gram matrix of the tabloid form.
pub fn simple_module(lam: &Partition, p: u32) -> Result<GModule> {
    if !crate::partition::is_p_regular(lam, p) {
        return Err(Error::InvalidPartition(format!("{lam} is not {p}-regular")));
    }
    let (s, emb) = specht_module(lam, p)?;
    let gram = emb.transpose().mul(&emb);
    let rad = gram.nullspace();
    let (d, _) = s.quotient(&rad)?;
    Ok(d.tagged(format!("D({lam})")))
}

/// V^{⊗d} with place permutations, dim n^d; word positions are base-n digits,
/// position 0 most significant.
pub fn tensor_space(n: usize, d: usize, p: u32) -> Result<GModule> {
    let dim = n.checked_pow(d as u32).ok_or(Error::DimensionCap { requested: usize::MAX, cap: crate::linalg::dim_cap() })?;
    check_cap(dim, dim)?;
    let words: Vec<Vec<u8>> = (0..dim)
        .map(|mut x| {
            let mut w = vec![0u8; d];
            for k in (0..d).rev() {
                w[k] = (x % n) as u8;
                x /= n;
            }
            w
        })
        .collect();
    perm_module_from_basis(p, d, &words, format!("V^{d}(n={n})")).map(|m| m.tagged(format!("tensor({n},{d})")))
}

/// Compositions of d into exactly n non-negative parts.
pub fn compositions(n: usize, d: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    (0..=d)
        .rev()
        .flat_map(|first| {
            compositions(n - 1, d - first).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

/// Weight space of V^{⊗d} for a composition α, with its embedding columns.
pub fn weight_space(v: &GModule, n: usize, d: usize, alpha: &[usize]) -> (GModule, FpMatrix) {
    let p = v.prime;
    let cols: Vec<Vec<u32>> = (0..v.dim)
        .filter(|&x| {
            let mut counts = vec![0usize; n];
            let mut y = x;
            for _ in 0..d {
                counts[y % n] += 1;
                y /= n;
            }
            counts == alpha
        })
        .map(|x| {
            let mut e = vec![0u32; v.dim];
            e[x] = 1;
            e
        })
        .collect();
    let emb = FpMatrix::from_columns(p, v.dim, &cols);
    let (w, emb) = v.submodule(&emb).expect("weight spaces are stable");
    (w.tagged(format!("weight({})", alpha.iter().join(","))), emb)
}

/// Coset representative t_j = s_j s_{j+1} ⋯ s_{d−2}, sending d−1 to j.
fn coset_rep(d: usize, j: usize) -> Perm {
    (j..d - 1).fold((0..d).collect::<Perm>(), |acc, i| compose(&acc, &transposition(d, i)))
}

/// Induction from S_{d−1} (fixing the last point) to S_d.
pub fn induce(m: &GModule) -> Result<GModule> {
    let d = m.ngens() + 2;
    let p = m.prime;
    let k = m.dim;
    check_cap(d * k, d * k)?;
    let reps: Vec<Perm> = (0..d).map(|j| coset_rep(d, j)).collect();
    let inv_reps: Vec<Perm> = reps.iter().map(|t| invert(t)).collect();
    let mut gens = Vec::with_capacity(d - 1);
    for i in 0..d - 1 {
        let g = transposition(d, i);
        let mut big = FpMatrix::zeros(p, d * k, d * k);
        for j in 0..d {
            let target = g[j];
            let h = compose(&inv_reps[target], &compose(&g, &reps[j]));
            debug_assert_eq!(h[d - 1], d - 1);
            let act = perm_action(m, &h[..d - 1]);
            big.set_block(target * k, j * k, &act);
        }
        gens.push(big);
    }
    GModule::new(p, d * k, gens, format!("ind({})", m.origin_tag))
}

/// Restriction to S_{d−1}.
pub fn restrict(m: &GModule) -> GModule {
    let n = m.ngens();
    m.restrict_generators(&(0..n.saturating_sub(1)).collect::<Vec<_>>())
}

/// dim Ext¹ between kS_d-modules from the Coxeter presentation: cocycles on the
/// generators satisfying the linearised relations, modulo coboundaries.
pub fn ext1_dim(m: &GModule, n: &GModule) -> Result<usize> {
    let p = m.prime;
    let r = m.ngens();
    let (dm, dn) = (m.dim, n.dim);
    let block = dm * dn;
    if block == 0 {
        return Ok(0);
    }
    let mut relations: Vec<Vec<usize>> = Vec::new();
    for i in 0..r {
        relations.push(vec![i, i]);
        if i + 1 < r {
            relations.push([i, i + 1].repeat(3));
        }
        for j in i + 2..r {
            relations.push(vec![i, j, i, j]);
        }
    }
    check_cap(block, block * r)?;
    let mut rows = Vec::new();
    for word in &relations {
        let mut eq = FpMatrix::zeros(p, block, block * r);
        for t in 0..word.len() {
            let left = word[..t].iter().fold(FpMatrix::identity(p, dn), |a, &g| a.mul(&n.generators[g]));
            let right = word[t + 1..].iter().fold(FpMatrix::identity(p, dm), |a, &g| a.mul(&m.generators[g]));
            let contrib = left.kron(&right.transpose())?;
            let g = word[t];
            let mut cur = eq.block(0, g * block, block, block);
            cur = cur.add(&contrib);
            eq.set_block(0, g * block, &cur);
        }
        rows.push(eq);
    }
    let system = FpMatrix::vstack_all(p, block * r, &rows);
    let cocycles = block * r - system.rank();
    let homs = crate::module::hom_dim(m, n);
    let coboundaries = block - homs;
    Ok(cocycles - coboundaries)
}

/// The p-regular partitions of d with their simple modules.
pub fn simples(d: usize, p: u32) -> Result<Vec<(Partition, GModule)>> {
    crate::partition::partitions_of(d)
        .into_iter()
        .filter(|l| crate::partition::is_p_regular(l, p))
        .map(|l| simple_module(&l, p).map(|s| (l, s)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    #[test]
    fn words_reconstruct_permutations() {
        for g in all_perms(5) {
            let w = perm_word(&g);
            let rebuilt = w.iter().fold((0..5).collect::<Perm>(), |acc, &i| compose(&acc, &transposition(5, i)));
            assert_eq!(rebuilt, g);
        }
    }

    #[test]
    fn tabloid_order_is_lexicographic() {
        let t = tabloids(&[2, 1]);
        assert_eq!(t, vec![vec![0, 0, 1], vec![0, 1, 0], vec![1, 0, 0]]);
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 6).len(), 28);
        assert_eq!(compositions(2, 2), vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn specht_small() {
        let (s, _) = specht_module(&part(&[2, 1]), 5).unwrap();
        assert_eq!(s.dim, 2);
        assert!(s.satisfies_coxeter_relations());
    }
}
