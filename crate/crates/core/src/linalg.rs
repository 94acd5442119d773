//! Dense matrices over a prime field F_p with eagerly reduced residues.

use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;

/// Default bound on the number of entries of a single matrix.
pub const DEFAULT_DIM_CAP: usize = 2_000_000;

/// Entry cap, overridable with the `MODREP_DIM_CAP` environment variable.
pub fn dim_cap() -> usize {
    std::env::var("MODREP_DIM_CAP")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_DIM_CAP)
}

pub fn check_cap(rows: usize, cols: usize) -> Result<()> {
    let requested = rows
        .checked_mul(cols)
        .ok_or(Error::DimensionCap { requested: usize::MAX, cap: dim_cap() })?;
    let cap = dim_cap();
    if requested > cap {
        return Err(Error::DimensionCap { requested, cap });
    }
    Ok(())
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

pub fn check_prime(p: u32) -> Result<()> {
    if is_prime(p) && p < (1 << 16) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[inline]
pub fn inv_mod(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

#[inline]
pub fn pow_mod(a: u32, mut e: u32, p: u32) -> u32 {
    let mut r = 1u64 % p as u64;
    let mut b = (a % p) as u64;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

#[inline]
pub fn reduce_i64(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct FpMatrix {
    prime: u32,
    rows: usize,
    cols: usize,
    entries: Vec<u32>,
}

#[derive(Deserialize)]
struct RawMatrix {
    prime: u32,
    rows: usize,
    cols: usize,
    entries: Vec<i64>,
}

impl TryFrom<RawMatrix> for FpMatrix {
    type Error = Error;
    fn try_from(r: RawMatrix) -> Result<Self> {
        check_prime(r.prime)?;
        if r.rows * r.cols != r.entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} matrix with {} entries",
                r.rows,
                r.cols,
                r.entries.len()
            )));
        }
        let entries = r.entries.iter().map(|&x| reduce_i64(x, r.prime)).collect();
        FpMatrix::from_vec(r.prime, r.rows, r.cols, entries)
    }
}

/// Output of [`FpMatrix::rref`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: FpMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FpMatrix(p={}, {}x{})", self.prime, self.rows, self.cols)?;
        for r in 0..self.rows.min(16) {
            writeln!(f, "  {:?}", &self.row(r)[..self.cols.min(32)])?;
        }
        Ok(())
    }
}

impl FpMatrix {
    pub fn zeros(prime: u32, rows: usize, cols: usize) -> Self {
        FpMatrix { prime, rows, cols, entries: vec![0; rows * cols] }
    }

    pub fn try_zeros(prime: u32, rows: usize, cols: usize) -> Result<Self> {
        check_cap(rows, cols)?;
        Ok(Self::zeros(prime, rows, cols))
    }

    pub fn identity(prime: u32, n: usize) -> Self {
        let mut m = Self::zeros(prime, n, n);
        for i in 0..n {
            m.entries[i * n + i] = 1 % prime;
        }
        m
    }

    /// Builds a matrix from row-major residues, reducing each entry.
    pub fn from_vec(prime: u32, rows: usize, cols: usize, entries: Vec<u32>) -> Result<Self> {
        if rows * cols != entries.len() {
            return Err(Error::DimensionMismatch(format!(
                "{rows}x{cols} matrix with {} entries",
                entries.len()
            )));
        }
        check_cap(rows, cols)?;
        let entries = entries.into_iter().map(|x| x % prime).collect();
        Ok(FpMatrix { prime, rows, cols, entries })
    }

    /// Builds a matrix from integer rows; all rows must have equal length.
    pub fn from_rows(prime: u32, rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
            entries.extend(row.iter().map(|&x| reduce_i64(x, prime)));
        }
        FpMatrix { prime, rows: r, cols: c, entries }
    }

    /// Matrix whose columns are the given vectors, all of length `rows`.
    pub fn from_columns(prime: u32, rows: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(prime, rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows);
            for i in 0..rows {
                m.entries[i * m.cols + j] = c[i] % prime;
            }
        }
        m
    }

    pub fn prime(&self) -> u32 {
        self.prime
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }
    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.entries[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.entries[r * self.cols + c] = v % self.prime;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u32) {
        let i = r * self.cols + c;
        self.entries[i] = (self.entries[i] + v % self.prime) % self.prime;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [u32] {
        let c = self.cols;
        &mut self.entries[r * c..(r + 1) * c]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        let t = self.transpose();
        (0..t.rows).map(|r| t.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == u32::from(i == j)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.prime, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.entries[c * self.rows + r] = self.entries[r * self.cols + c];
            }
        }
        t
    }

    fn same_prime(&self, other: &Self) -> Result<()> {
        if self.prime != other.prime {
            Err(Error::PrimeMismatch(self.prime, other.prime))
        } else {
            Ok(())
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "product of {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        check_cap(self.rows, other.cols)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let p = self.prime as u64;
        let (n, k, m) = (self.rows, self.cols, other.cols);
        let mut out = vec![0u32; n * m];
        let work = |(i, orow): (usize, &mut [u32])| {
            let mut acc = vec![0u64; m];
            let arow = &self.entries[i * k..(i + 1) * k];
            let mut pending = 0u32;
            for (l, &a) in arow.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let brow = &other.entries[l * m..(l + 1) * m];
                let a = a as u64;
                for (x, &b) in acc.iter_mut().zip(brow) {
                    *x += a * b as u64;
                }
                pending += 1;
                if pending == 1 << 20 {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (o, x) in orow.iter_mut().zip(acc) {
                *o = (x % p) as u32;
            }
        };
        if n * k * m > 1 << 18 {
            out.par_chunks_mut(m.max(1)).enumerate().for_each(work);
        } else {
            out.chunks_mut(m.max(1)).enumerate().for_each(work);
        }
        FpMatrix { prime: self.prime, rows: n, cols: m, entries: out }
    }

    /// Matrix product; panics on shape or prime mismatch.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.prime, other.prime, "prime mismatch");
        assert_eq!(self.cols, other.rows, "shape mismatch in product");
        self.mul_unchecked(other)
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.prime as u64;
        (0..self.rows)
            .map(|r| {
                let s: u64 = self.row(r).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.prime;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| (a + b) % p).collect();
        FpMatrix { entries, ..*self.shape_only() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.prime;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| (a + p - b) % p).collect();
        FpMatrix { entries, ..*self.shape_only() }
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.prime as u64;
        let c = (c % self.prime) as u64;
        let entries = self.entries.iter().map(|&a| (a as u64 * c % p) as u32).collect();
        FpMatrix { entries, ..*self.shape_only() }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: u32, other: &Self) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.prime;
        let c = c % p;
        if c == 0 {
            return;
        }
        for (a, &b) in self.entries.iter_mut().zip(&other.entries) {
            *a = (*a + c * b) % p;
        }
    }

    fn shape_only(&self) -> Box<FpMatrix> {
        Box::new(FpMatrix { prime: self.prime, rows: self.rows, cols: self.cols, entries: Vec::new() })
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows);
        let mut m = Self::zeros(self.prime, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            m.row_mut(r)[..self.cols].copy_from_slice(self.row(r));
            m.row_mut(r)[self.cols..].copy_from_slice(other.row(r));
        }
        m
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        FpMatrix { prime: self.prime, rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn vstack_all(prime: u32, cols: usize, parts: &[FpMatrix]) -> Self {
        let mut entries = Vec::new();
        let mut rows = 0;
        for m in parts {
            assert_eq!(m.cols, cols);
            entries.extend_from_slice(&m.entries);
            rows += m.rows;
        }
        FpMatrix { prime, rows, cols, entries }
    }

    pub fn block_diag(prime: u32, blocks: &[FpMatrix]) -> Self {
        let r: usize = blocks.iter().map(|b| b.rows).sum();
        let c: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Self::zeros(prime, r, c);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            m.set_block(r0, c0, b);
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for r in 0..b.rows {
            let w = self.cols;
            self.entries[(r0 + r) * w + c0..(r0 + r) * w + c0 + b.cols].copy_from_slice(b.row(r));
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Self {
        let mut m = Self::zeros(self.prime, rows, cols);
        for r in 0..rows {
            m.row_mut(r).copy_from_slice(&self.row(r0 + r)[c0..c0 + cols]);
        }
        m
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            entries.extend_from_slice(self.row(r));
        }
        FpMatrix { prime: self.prime, rows: idx.len(), cols: self.cols, entries }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut m = Self::zeros(self.prime, self.rows, idx.len());
        for r in 0..self.rows {
            for (j, &c) in idx.iter().enumerate() {
                m.entries[r * idx.len() + j] = self.get(r, c);
            }
        }
        m
    }

    /// In-place Gauss-Jordan elimination restricted to the first `limit` columns
    /// for pivot search. Returns pivot columns.
    fn eliminate(&mut self, limit: usize) -> Vec<usize> {
        let p = self.prime;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.entries[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.entries.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = inv_mod(self.entries[r * cols + c], p);
            if inv != 1 {
                for x in &mut self.entries[r * cols + c..(r + 1) * cols] {
                    *x = *x * inv % p;
                }
            }
            let (before, rest) = self.entries.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            let pivot_row = &pivot_row[c..];
            let clear = |row: &mut [u32]| {
                let f = row[c];
                if f != 0 {
                    let g = p - f;
                    for (x, &y) in row[c..].iter_mut().zip(pivot_row) {
                        *x = (*x + g * y) % p;
                    }
                }
            };
            if self.rows * (cols - c) > 1 << 16 {
                before.par_chunks_mut(cols).for_each(clear);
                after.par_chunks_mut(cols).for_each(clear);
            } else {
                before.chunks_mut(cols).for_each(clear);
                after.chunks_mut(cols).for_each(clear);
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.eliminate(self.cols);
        Rref { reduced: m, rank: pivots.len(), pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Columns form a basis of the right kernel.
    pub fn nullspace(&self) -> Self {
        let Rref { reduced, rank, pivots } = self.rref();
        let p = self.prime;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut ns = Self::zeros(p, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            ns.set(f, j, 1);
            for (i, &pc) in pivots.iter().enumerate().take(rank) {
                let v = reduced.get(i, f);
                if v != 0 {
                    ns.set(pc, j, p - v);
                }
            }
        }
        ns
    }

    /// Rows form a basis of the left kernel `{x : x·self = 0}`.
    pub fn left_nullspace(&self) -> Self {
        self.transpose().nullspace().transpose()
    }

    /// Returns `Some(x)` with `self·x = b`, `None` when the system is inconsistent.
    pub fn solve(&self, b: &Self) -> Result<Option<Self>> {
        self.same_prime(b)?;
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch(format!(
                "solve with {} rows against {} rows",
                self.rows, b.rows
            )));
        }
        let mut aug = self.hstack(b);
        let pivots = aug.eliminate(self.cols + b.cols);
        if pivots.iter().any(|&c| c >= self.cols) {
            return Ok(None);
        }
        let mut x = Self::zeros(self.prime, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            x.row_mut(pc).copy_from_slice(&aug.row(i)[self.cols..]);
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve(&Self::identity(self.prime, self.rows)).ok()??;
        Some(x)
    }

    pub fn kron(&self, other: &Self) -> Result<Self> {
        self.same_prime(other)?;
        let rows = self.rows.checked_mul(other.rows);
        let cols = self.cols.checked_mul(other.cols);
        let (Some(rows), Some(cols)) = (rows, cols) else {
            return Err(Error::DimensionCap { requested: usize::MAX, cap: dim_cap() });
        };
        check_cap(rows, cols)?;
        let p = self.prime;
        let mut m = Self::zeros(p, rows, cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        m.entries[(i * other.rows + k) * cols + j * other.cols + l] = a * other.get(k, l) % p;
                    }
                }
            }
        }
        Ok(m)
    }

    /// Basis (as rows) of the row space, in reduced echelon form.
    pub fn row_basis(&self) -> Self {
        let Rref { reduced, rank, .. } = self.rref();
        reduced.select_rows(&(0..rank).collect::<Vec<_>>())
    }

    /// Basis (as columns) of the column space, chosen among the original columns.
    pub fn column_basis(&self) -> Self {
        let piv = self.rref().pivots;
        self.select_columns(&piv)
    }

    pub fn trace(&self) -> u32 {
        assert!(self.is_square());
        (0..self.rows).fold(0, |s, i| (s + self.get(i, i)) % self.prime)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::identity(self.prime, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Flattens row-major into a single vector.
    pub fn to_vec(&self) -> Vec<u32> {
        self.entries.clone()
    }

    pub fn from_flat(prime: u32, rows: usize, cols: usize, v: &[u32]) -> Self {
        assert_eq!(v.len(), rows * cols);
        FpMatrix { prime, rows, cols, entries: v.to_vec() }
    }
}

/// Subspace of F_p^n stored as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    basis: FpMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(prime: u32, n: usize) -> Self {
        Subspace { basis: FpMatrix::zeros(prime, 0, n), pivots: Vec::new() }
    }

    pub fn whole(prime: u32, n: usize) -> Self {
        Subspace { basis: FpMatrix::identity(prime, n), pivots: (0..n).collect() }
    }

    /// Span of the rows of `m`.
    pub fn from_rows(m: &FpMatrix) -> Self {
        let Rref { reduced, rank, pivots } = m.rref();
        Subspace { basis: reduced.select_rows(&(0..rank).collect::<Vec<_>>()), pivots }
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &FpMatrix) -> Self {
        Self::from_rows(&m.transpose())
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }
    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }
    pub fn prime(&self) -> u32 {
        self.basis.prime()
    }
    /// Echelon basis as rows.
    pub fn basis(&self) -> &FpMatrix {
        &self.basis
    }
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis, returning the residue.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        let p = self.prime();
        let mut v = v.to_vec();
        for (i, &pc) in self.pivots.iter().enumerate() {
            let f = v[pc];
            if f != 0 {
                let g = p - f;
                for (x, &y) in v.iter_mut().zip(self.basis.row(i)) {
                    *x = (*x + g * y) % p;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Coordinates of `v` in the echelon basis, or `None` when `v` lies outside.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let c: Vec<u32> = self.pivots.iter().map(|&pc| v[pc]).collect();
        let p = self.prime() as u64;
        let mut w = vec![0u64; self.ambient()];
        for (i, &ci) in c.iter().enumerate() {
            if ci != 0 {
                for (x, &y) in w.iter_mut().zip(self.basis.row(i)) {
                    *x += ci as u64 * y as u64;
                }
            }
        }
        w.iter().zip(v).all(|(&a, &b)| (a % p) as u32 == b).then_some(c)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        Subspace::from_rows(&self.basis.vstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        let p = self.prime();
        let n = self.ambient();
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(p, n);
        }
        // x·A = y·B  ⇔  [x | -y] · [A; B] = 0
        let stacked = self.basis.vstack(&other.basis);
        let ker = stacked.left_nullspace();
        let xs = ker.block(0, 0, ker.rows(), self.dim());
        Subspace::from_rows(&xs.mul(&self.basis))
    }

    /// Extends the current basis by vectors, returning the indices of those that were new.
    pub fn extend(&mut self, vs: &FpMatrix) -> Vec<usize> {
        let mut added = Vec::new();
        let mut rows = self.basis.clone();
        for i in 0..vs.rows() {
            let r = Subspace { basis: rows.clone(), pivots: self.pivots.clone() };
            if !r.contains(vs.row(i)) {
                rows = rows.vstack(&vs.select_rows(&[i]));
                let s = Subspace::from_rows(&rows);
                rows = s.basis.clone();
                self.pivots = s.pivots;
                added.push(i);
            }
        }
        self.basis = rows;
        added
    }

    /// Complement basis (rows) made of standard unit vectors.
    pub fn unit_complement(&self) -> FpMatrix {
        let p = self.prime();
        let n = self.ambient();
        let free: Vec<usize> = (0..n).filter(|c| !self.pivots.contains(c)).collect();
        let mut m = FpMatrix::zeros(p, free.len(), n);
        for (i, &c) in free.iter().enumerate() {
            m.set(i, c, 1);
        }
        m
    }
}


/// Semi-echelon basis built incrementally. Each stored row carries its expression
/// in terms of the vectors that were accepted so far, so membership queries also
/// return coordinates against the accepted vectors.
#[derive(Clone, Debug)]
pub struct SpanTracker {
    prime: u32,
    len: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    combos: Vec<Vec<u32>>,
    accepted: Vec<Vec<u32>>,
}

impl SpanTracker {
    pub fn new(prime: u32, len: usize) -> Self {
        SpanTracker { prime, len, rows: Vec::new(), pivots: Vec::new(), combos: Vec::new(), accepted: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// Accepted vectors in insertion order.
    pub fn accepted(&self) -> &[Vec<u32>] {
        &self.accepted
    }

    fn reduce_with(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        let p = self.prime;
        let p64 = p as u64;
        let mut r: Vec<u64> = v.iter().map(|&x| x as u64).collect();
        let mut c = vec![0u32; self.accepted.len()];
        for ((row, &pc), combo) in self.rows.iter().zip(&self.pivots).zip(&self.combos) {
            let f = (r[pc] % p64) as u32;
            if f == 0 {
                r[pc] = 0;
                continue;
            }
            let g = (p - f) as u64;
            for (x, &y) in r.iter_mut().zip(row) {
                *x += g * y as u64;
            }
            r[pc] = 0;
            for (x, &y) in c.iter_mut().zip(combo) {
                if y != 0 {
                    *x = (*x + f * y) % p;
                }
            }
        }
        (r.into_iter().map(|x| (x % p64) as u32).collect(), c)
    }

    /// Coordinates of `v` against the accepted vectors, or `None` if outside the span.
    pub fn coordinates(&self, v: &[u32]) -> Option<Vec<u32>> {
        let (r, c) = self.reduce_with(v);
        r.iter().all(|&x| x == 0).then_some(c)
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let (r, _) = self.reduce_with(v);
        r.iter().all(|&x| x == 0)
    }

    /// Adds `v` if it is independent; returns whether it was added.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let p = self.prime;
        let (mut r, c) = self.reduce_with(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = inv_mod(r[pc], p);
        r.iter_mut().for_each(|x| *x = *x * inv % p);
        let n = self.accepted.len();
        let mut combo: Vec<u32> = c.iter().map(|&x| (p - x) % p * inv % p).collect();
        combo.push(inv);
        for old in &mut self.combos {
            old.push(0);
        }
        debug_assert_eq!(combo.len(), n + 1);
        self.rows.push(r);
        self.pivots.push(pc);
        self.combos.push(combo);
        self.accepted.push(v.to_vec());
        true
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates of a vector already known to lie in the span, from its
    /// entries at the pivot positions alone (`vals[i]` is the entry at `pivots()[i]`).
    pub fn coordinates_at_pivots(&self, vals: &[u32]) -> Vec<u32> {
        let p = self.prime;
        let d = self.rows.len();
        let mut r = vals.to_vec();
        let mut c = vec![0u32; self.accepted.len()];
        for i in 0..d {
            let f = r[i];
            if f == 0 {
                continue;
            }
            let g = p - f;
            let row = &self.rows[i];
            for j in i + 1..d {
                let y = row[self.pivots[j]];
                if y != 0 {
                    r[j] = (r[j] + g * y) % p;
                }
            }
            for (x, &y) in c.iter_mut().zip(&self.combos[i]) {
                if y != 0 {
                    *x = (*x + f * y) % p;
                }
            }
        }
        c
    }

    /// Accepted vectors as the columns of a matrix.
    pub fn basis_columns(&self) -> FpMatrix {
        FpMatrix::from_columns(self.prime, self.len, &self.accepted)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_mod_small_primes() {
        for p in [2u32, 3, 5, 7, 11, 13] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }

    #[test]
    fn product_shapes() {
        let a = FpMatrix::from_rows(5, &[vec![1, 2, 3], vec![4, 0, 1]]);
        let b = FpMatrix::from_rows(5, &[vec![1], vec![1], vec![1]]);
        assert_eq!(a.mul(&b), FpMatrix::from_rows(5, &[vec![1], vec![0]]));
        assert!(b.try_mul(&b).is_err());
    }

    #[test]
    fn subspace_intersection_and_sum() {
        let a = Subspace::from_rows(&FpMatrix::from_rows(3, &[vec![1, 0, 0], vec![0, 1, 0]]));
        let b = Subspace::from_rows(&FpMatrix::from_rows(3, &[vec![0, 1, 0], vec![0, 0, 1]]));
        assert_eq!(a.intersect(&b).dim(), 1);
        assert_eq!(a.sum(&b).dim(), 3);
        assert_eq!(a.coordinates(&[2, 1, 0]), Some(vec![2, 1]));
        assert_eq!(a.coordinates(&[0, 0, 1]), None);
    }

    #[test]
    fn span_tracker_coordinates() {
        let mut t = SpanTracker::new(5, 3);
        assert!(t.insert(&[1, 2, 0]));
        assert!(t.insert(&[0, 1, 1]));
        assert!(!t.insert(&[1, 3, 1]));
        assert_eq!(t.coordinates(&[2, 2, 3]), Some(vec![2, 3]));
        assert_eq!(t.coordinates(&[0, 0, 1]), None);
    }

    #[test]
    fn inverse_roundtrip() {
        let a = FpMatrix::from_rows(7, &[vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(FpMatrix::from_rows(7, &[vec![1, 2], vec![2, 4]]).inverse().is_none());
    }
}
