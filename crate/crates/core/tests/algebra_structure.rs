mod common;

use std::sync::Arc;

use modrep_core::algebra::{AlgModule, FDAlgebra};
use modrep_core::structure::{decompose, is_indecomposable, socle, top};
use modrep_core::sym::transposition;
use modrep_core::FpMatrix;

use common::*;

#[test]
fn group_algebra_of_s3_in_characteristic_three() {
    let a = group_algebra(3, 3);
    assert_eq!(a.dim(), 6);
    assert!(a.check_associativity(50, 1));
    assert_eq!(a.radical().dim(), 4);
    let st = a.structure().unwrap();
    assert_eq!(st.num_simples(), 2);
    assert_eq!(st.simple_dims(), vec![1, 1]);
    let mut pims: Vec<usize> = st.pims.iter().map(|m| m.dim()).collect();
    pims.sort();
    assert_eq!(pims, vec![3, 3]);
    let sum = st.idempotents.iter().fold(vec![0; 6], |acc, e| a.add(&acc, e));
    assert_eq!(sum, a.unit());
    for e in &st.idempotents {
        assert!(a.is_idempotent(e));
    }
}

#[test]
fn full_matrix_algebra_is_semisimple_even_when_p_divides_n() {
    let p = 3;
    let mats: Vec<FpMatrix> = (0..3).flat_map(|i| (0..3).map(move |j| matrix_unit(p, 3, i, j))).collect();
    let a = Arc::new(FDAlgebra::from_spanning_matrices(p, 3, &mats, "M3").unwrap().0);
    assert_eq!(a.dim(), 9);
    assert_eq!(a.radical().dim(), 0);
    let st = a.structure().unwrap();
    assert_eq!(st.num_simples(), 1);
    assert_eq!(st.simple_dims(), vec![3]);
    assert_eq!(st.idempotents.len(), 3);
}

#[test]
fn upper_triangular_matrices() {
    let a = upper_triangular(5, 3);
    assert_eq!(a.dim(), 6);
    assert_eq!(a.radical().dim(), 3);
    let st = a.structure().unwrap();
    assert!(st.is_basic());
    let mut pims: Vec<usize> = st.pims.iter().map(|m| m.dim()).collect();
    pims.sort();
    assert_eq!(pims, vec![1, 2, 3]);
    let op = Arc::new(a.opposite());
    assert!(op.check_associativity(50, 2));
    assert_eq!(op.radical().dim(), 3);
    // the dual of the regular module is a module over the opposite algebra
    let d = AlgModule::regular(&a).dual(&op);
    assert!(AlgModule::new(&op, d.module.generators.clone(), "dual").is_ok());
}

#[test]
fn group_algebra_of_s4_in_characteristic_two() {
    let a = group_algebra(4, 2);
    assert_eq!(a.dim(), 24);
    // simples of dimension 1 and 2
    assert_eq!(a.radical().dim(), 24 - 1 - 4);
    let st = a.structure().unwrap();
    let mut dims = st.simple_dims();
    dims.sort();
    assert_eq!(dims, vec![1, 2]);
}

#[test]
fn tops_socles_and_decomposition_of_regular_module() {
    let a = group_algebra(3, 3);
    let reg = AlgModule::regular(&a);
    let parts = decompose(&reg, 7).unwrap();
    assert_eq!(parts.len(), 2);
    for s in &parts {
        assert!(is_indecomposable(&s.module).unwrap());
        assert_eq!(top(&s.module).unwrap().0.dim(), 1);
        assert_eq!(socle(&s.module).unwrap().0.dim(), 1);
    }
}

mod homological {
    use super::*;
    use modrep_core::homological::*;
    use modrep_core::GModule;

    fn s3_with_generators() -> (Arc<FDAlgebra>, Vec<usize>) {
        let p = 3;
        let perms = modrep_core::sym::all_perms(3);
        let index = |g: &Vec<usize>| perms.iter().position(|h| h == g).unwrap();
        let gens: Vec<FpMatrix> = (0..2)
            .map(|i| {
                let s = transposition(3, i);
                let mut m = FpMatrix::zeros(p, 6, 6);
                for (j, g) in perms.iter().enumerate() {
                    m.set(index(&modrep_core::sym::compose(&s, g)), j, 1);
                }
                m
            })
            .collect();
        let (a, src) = FDAlgebra::generated_by_matrices(p, 6, &gens, "kS3").unwrap();
        (Arc::new(a), src)
    }

    fn lift(a: &Arc<FDAlgebra>, src: &[usize], g: &GModule) -> AlgModule {
        let gens = src.iter().map(|&s| g.generators[s].clone()).collect();
        AlgModule::new(a, gens, &g.origin_tag).unwrap()
    }

    #[test]
    fn periodic_resolution_of_the_trivial_module() {
        let (a, src) = s3_with_generators();
        assert_eq!(src, vec![0, 1]);
        let triv = lift(&a, &src, &GModule::trivial(3, 2));
        assert_eq!(pdim_up_to(&triv, 6).unwrap(), DimValue::AtLeast { bound: 6 });
        match pdim_with_periodicity(&triv, 8).unwrap() {
            DimValue::ProvablyInfinite { start, period } => {
                assert_eq!(start, 0);
                assert_eq!(period, 4);
            }
            other => panic!("expected periodicity, got {other:?}"),
        }
        let res = minimal_resolution(&triv, 4).unwrap();
        let cx = res.to_chain_complex();
        assert!(cx.is_complex());
        assert_eq!(cx.homology_dims()[1..cx.terms.len() - 1].iter().sum::<usize>(), 0);
    }

    #[test]
    fn ext_agrees_with_group_cocycles() {
        let (a, src) = s3_with_generators();
        let triv = GModule::trivial(3, 2);
        let sign = GModule::sign(3, 2);
        for (m, n) in [(&triv, &sign), (&triv, &triv), (&sign, &triv)] {
            let e = ext_dims(&lift(&a, &src, m), &lift(&a, &src, n), 3).unwrap();
            assert_eq!(e[1], modrep_core::sym::ext1_dim(m, n).unwrap());
        }
        let e = ext_dims(&lift(&a, &src, &triv), &lift(&a, &src, &sign), 4).unwrap();
        assert_eq!(e, vec![0, 1, 1, 0, 0]);
    }

    #[test]
    fn hereditary_algebra_dimensions() {
        let a = upper_triangular(5, 3);
        let st = a.structure().unwrap();
        for s in &st.simples {
            let d = pdim_up_to(s, 5).unwrap().finite().unwrap();
            assert!(d <= 1);
            let i = injdim_up_to(s, 5).unwrap().finite().unwrap();
            assert!(i <= 1);
        }
        for pim in &st.pims {
            assert!(is_projective(pim).unwrap());
            assert_eq!(syzygy(pim).unwrap().0.dim(), 0);
        }
        let cover = projective_cover(&st.simples[0]).unwrap();
        assert_eq!(cover.summands, vec![0]);
    }
}
