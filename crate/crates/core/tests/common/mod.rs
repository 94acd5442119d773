#![allow(dead_code)]

use std::sync::Arc;

use modrep_core::algebra::{alg_hom_space, AlgModule, FDAlgebra};
use modrep_core::crosscheck;
use modrep_core::homological::{is_injective, DimValue};
use modrep_core::FpMatrix;

#[allow(unused_imports)]
pub use modrep_core::crosscheck::{cap, matrix_unit};

pub fn upper_triangular(p: u32, n: usize) -> Arc<FDAlgebra> {
    crosscheck::upper_triangular(p, n).unwrap()
}

pub fn group_algebra(n: usize, p: u32) -> Arc<FDAlgebra> {
    crosscheck::group_algebra(n, p).unwrap()
}

pub fn incidence_algebra(p: u32, n: usize, relations: &[bool]) -> Arc<FDAlgebra> {
    crosscheck::incidence_algebra(p, n, relations).unwrap()
}

pub fn end_algebra(m: &AlgModule, name: &str) -> Arc<FDAlgebra> {
    let basis = alg_hom_space(m, m);
    Arc::new(FDAlgebra::from_spanning_matrices(m.prime(), m.dim(), &basis, name).unwrap().0)
}

/// Auslander algebra of k[x]/(x^n): End of the sum of all its indecomposables.
pub fn auslander_of_truncated_polynomial(p: u32, n: usize) -> Arc<FDAlgebra> {
    let mut shift = FpMatrix::zeros(p, n, n);
    for i in 0..n - 1 {
        shift.set(i + 1, i, 1);
    }
    let (b, _) = FDAlgebra::generated_by_matrices(p, n, &[shift], "k[x]/x^n").unwrap();
    let b = Arc::new(b);
    let reg = AlgModule::regular(&b);
    let st = b.structure().unwrap();
    let s = st.simples[0].clone();
    // quotients k[x]/x^j for j = 1..n
    let mut parts = Vec::new();
    for j in 1..=n {
        let x = b.basis_vector(b.generator_index(0));
        let mut xj = b.unit();
        for _ in 0..j {
            xj = b.mul(&x, &xj);
        }
        let sub = reg.image_of_element(&xj);
        parts.push(reg.quotient(&sub).unwrap().0);
    }
    assert_eq!(parts[0].dim(), s.dim());
    end_algebra(&AlgModule::direct_sum_all(&b, &parts), "Auslander")
}

/// The sum of the indecomposable projective-injective modules.
pub fn projective_injective(a: &Arc<FDAlgebra>) -> Option<AlgModule> {
    let st = a.structure().unwrap();
    let pis: Vec<AlgModule> = st.pims.iter().filter(|p| is_injective(p).unwrap()).cloned().collect();
    (!pis.is_empty()).then(|| AlgModule::direct_sum_all(a, &pis))
}

pub fn domdim_by_double_centraliser(m: &AlgModule, q: &AlgModule, cutoff: usize) -> DimValue {
    crosscheck::domdim_by_double_centraliser(m, q, cutoff).unwrap()
}

pub fn assert_three_ways(m: &AlgModule, q: &AlgModule, cutoff: usize) -> DimValue {
    let r = crosscheck::domdim_three_ways(m, q, cutoff, 3).unwrap();
    assert!(r.agree(), "{r:?}");
    r.minimal
}
