mod common;

use std::sync::Arc;

use modrep_core::algebra::{alg_hom_dim, AlgModule, FDAlgebra};
use modrep_core::homological::*;
use modrep_core::linalg::Subspace;
use modrep_core::partition::{is_p_regular, partitions_in, part};
use modrep_core::schur_weyl::{basic_schur_p3, exact_model_p3, young_module, ExactModel};
use modrep_core::structure::{decompose, decompose_gmodule, is_indecomposable, socle, top};
use modrep_core::sym::{perm_module, simple_module, specht_module};
use modrep_core::{hom_dim, FpMatrix};

use common::*;

const SEED: u64 = 1;

fn model() -> &'static ExactModel {
    exact_model_p3().unwrap()
}

fn principal_class(w: &[usize]) -> usize {
    model().class_of(&part(w)).unwrap()
}

fn principal_pim(w: &[usize]) -> AlgModule {
    let st = model().principal.alg.structure().unwrap();
    let c = principal_class(w);
    st.pims[st.class_of.iter().position(|&k| k == c).unwrap()].clone()
}

fn principal_simple(w: &[usize]) -> AlgModule {
    model().principal.alg.structure().unwrap().simples[principal_class(w)].clone()
}

fn principal_specht(w: &[usize]) -> AlgModule {
    model().principal_module(&specht_module(&part(w), 3).unwrap().0).unwrap()
}

fn full_matrix_algebra(p: u32, n: usize) -> Arc<FDAlgebra> {
    let mats: Vec<FpMatrix> = (0..n).flat_map(|i| (0..n).map(move |j| matrix_unit(p, n, i, j))).collect();
    Arc::new(FDAlgebra::from_spanning_matrices(p, n, &mats, "M").unwrap().0)
}

/// Span of all products of `k` radical elements.
fn radical_power(a: &FDAlgebra, k: usize) -> Subspace {
    let rad = a.radical_elements();
    let mut cur: Vec<Vec<u32>> = (0..a.dim()).map(|i| a.basis_vector(i)).collect();
    for _ in 0..k {
        let prods: Vec<Vec<u32>> = cur.iter().flat_map(|x| rad.iter().map(move |r| a.mul(x, r))).collect();
        let s = Subspace::from_rows(&FpMatrix::from_columns(a.prime(), a.dim(), &prods).transpose());
        cur = (0..s.dim()).map(|i| s.basis().row(i).to_vec()).collect();
        if cur.is_empty() {
            break;
        }
    }
    Subspace::from_rows(&FpMatrix::from_columns(a.prime(), a.dim(), &cur).transpose())
}

/// `A/rad A` realised as the algebra of its action on the quotient of the regular module.
fn semisimple_quotient(a: &Arc<FDAlgebra>) -> Arc<FDAlgebra> {
    let reg = AlgModule::regular(a);
    let rad = a.radical().basis().transpose();
    let (q, _) = reg.quotient(&rad).unwrap();
    let acts: Vec<FpMatrix> = (0..a.dim()).map(|i| q.basis_action(i).clone()).collect();
    Arc::new(FDAlgebra::from_spanning_matrices(a.prime(), q.dim(), &acts, "A/rad").unwrap().0)
}

#[test]
fn endomorphism_algebras() {
    for a in [upper_triangular(3, 3), group_algebra(2, 3), full_matrix_algebra(5, 2)] {
        let reg = AlgModule::regular(&a);
        // End_A(A) is A^op
        assert_eq!(alg_hom_dim(&reg, &reg), a.dim());
        let (e, _) = endomorphism_algebra(&reg).unwrap();
        assert_eq!(e.dim(), a.opposite().dim());
        for s in &a.structure().unwrap().simples {
            assert_eq!(alg_hom_dim(s, s), 1);
        }
    }
}

#[test]
fn endomorphisms_of_the_young_modules_give_the_basic_schur_algebra() {
    let youngs: Vec<_> = partitions_in(3, 6).iter().map(|w| young_module(w, 3, SEED).unwrap().module).collect();
    let total: usize = youngs.iter().flat_map(|x| youngs.iter().map(move |y| hom_dim(x, y))).sum();
    assert_eq!(total, 48);
    assert_eq!(basic_schur_p3().unwrap().alg.dim(), total);
}

#[test]
fn radicals() {
    assert_eq!(full_matrix_algebra(3, 3).radical().dim(), 0);
    assert_eq!(group_algebra(2, 3).radical().dim(), 0);
    let t = upper_triangular(7, 2);
    assert_eq!(t.radical().dim(), 1);
    let strict = t.radical_elements()[0].clone();
    assert!(t.left_matrix(&strict).pow(2).is_zero());
    // principal block of the basic quotient at p = 3: golden value with nilpotency
    let a = &model().principal.alg;
    assert_eq!(a.dim(), 42);
    assert_eq!(a.radical().dim(), 37);
    let powers: Vec<usize> = (1..8).map(|k| radical_power(a, k).dim()).collect();
    assert_eq!(powers[0], 37);
    assert!(powers.windows(2).all(|w| w[1] <= w[0]));
    let n = powers.iter().position(|&d| d == 0).expect("radical is nilpotent");
    assert!(powers[..n].iter().all(|&d| d > 0));
}

#[test]
fn quotient_by_the_radical_is_semisimple() {
    for a in [upper_triangular(3, 3), group_algebra(3, 3), auslander_of_truncated_polynomial(2, 3), model().principal.alg.clone()] {
        let s = semisimple_quotient(&a);
        assert_eq!(s.dim(), a.dim() - a.radical().dim());
        assert!(s.is_semisimple());
    }
}

#[test]
fn decompositions() {
    let a = upper_triangular(5, 3);
    let st = a.structure().unwrap();
    for s in &st.simples {
        let parts = decompose(s, SEED).unwrap();
        assert_eq!(parts.len(), 1);
        assert!(is_isomorphic(&parts[0].module, s));
    }
    for m in st.pims.iter().chain(&st.simples) {
        let parts = decompose(&m.direct_sum(m), SEED).unwrap();
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().all(|x| is_isomorphic(&x.module, m)));
    }
    let reg = decompose(&AlgModule::regular(&a), SEED).unwrap();
    assert_eq!(reg.iter().map(|x| x.module.dim()).sum::<usize>(), a.dim());
    assert!(reg.iter().all(|x| is_indecomposable(&x.module).unwrap()));
}

#[test]
fn young_summand_of_the_permutation_module() {
    let lam = part(&[2, 2, 2]);
    let m = perm_module(&lam, 3).unwrap();
    let (s, spe) = specht_module(&lam, 3).unwrap();
    let parts = decompose_gmodule(&m, SEED).unwrap();
    assert_eq!(parts.iter().map(|x| x.0.dim).sum::<usize>(), m.dim);
    // the summand whose image contains S: S together with its columns adds nothing
    let containing: Vec<_> = parts.iter().filter(|(_, emb, _)| emb.hstack(&spe).rank() == emb.cols()).collect();
    assert_eq!(containing.len(), 1);
    let (y, emb, proj) = containing[0];
    assert_eq!(proj.mul(emb), FpMatrix::identity(3, y.dim));
    let young = young_module(&lam, 3, SEED).unwrap();
    assert!(modrep_core::is_isomorphic(y, &young.module));
    assert!(y.dim > s.dim);
    // every summand is indecomposable: idempotents of its endomorphism ring are trivial
    for (x, _, _) in &parts {
        assert_eq!(decompose_gmodule(x, SEED + 1).unwrap().len(), 1);
    }
}

#[test]
fn projective_indecomposables() {
    let m = full_matrix_algebra(3, 3);
    let st = m.structure().unwrap();
    assert_eq!(st.num_simples(), 1);
    assert!(st.pims.iter().all(|p| is_isomorphic(p, &st.simples[0])));
    let st = model().principal.alg.structure().unwrap();
    assert_eq!(st.num_simples(), 5);
    assert_eq!(st.pims.len(), 5);
    let classes: std::collections::BTreeSet<usize> = st.class_of.iter().copied().collect();
    assert_eq!(classes.len(), st.num_simples());
    // P<3> is Y<2,1> and P<2> is Y<3,1>
    let young = |w: &[usize]| model().principal_module(&young_module(&part(w), 3, SEED).unwrap().module).unwrap();
    assert!(is_isomorphic(&principal_pim(&[6]), &young(&[2, 2, 2])));
    assert!(is_isomorphic(&principal_pim(&[5, 1]), &young(&[3, 2, 1])));
    for (i, pim) in st.pims.iter().enumerate() {
        let (t, _) = top(pim).unwrap();
        assert!(is_isomorphic(&t, &st.simples[st.class_of[i]]));
    }
}

#[test]
fn tops_and_socles_of_specht_modules() {
    // S<3,2> = S(3,3) has length two with socle D<2> = D(5,1)
    let s = principal_specht(&[3, 3]);
    assert_eq!(composition_multiplicities(&s).unwrap().iter().sum::<usize>(), 2);
    let (soc, _) = socle(&s).unwrap();
    assert!(is_isomorphic(&soc, &principal_simple(&[5, 1])));
    let (t, _) = top(&s).unwrap();
    assert!(is_isomorphic(&t, &principal_simple(&[3, 3])));
    for lam in partitions_in(6, 6).into_iter().filter(|l| is_p_regular(l, 3) && model().class_of(l).is_some()) {
        let s = model().principal_module(&specht_module(&lam, 3).unwrap().0).unwrap();
        let (t, _) = top(&s).unwrap();
        let d = model().principal_module(&simple_module(&lam, 3).unwrap()).unwrap();
        assert!(is_isomorphic(&t, &d), "top of S({lam})");
    }
}

#[test]
fn projective_covers_and_syzygies() {
    let st = model().principal.alg.structure().unwrap();
    for (c, s) in st.simples.iter().enumerate() {
        let cover = projective_cover(s).unwrap();
        let i = st.class_of.iter().position(|&k| k == c).unwrap();
        assert!(is_isomorphic(&cover.projective, &st.pims[i]));
        assert_eq!(cover.surjection.rank(), s.dim());
    }
    for pim in &st.pims {
        assert_eq!(syzygy(pim).unwrap().0.dim(), 0);
    }
    // the first syzygy of Y<2> is the projective P<3,1>
    let y2 = model().principal_module(&young_module(&part(&[5, 1]), 3, SEED).unwrap().module).unwrap();
    assert!(is_isomorphic(&syzygy(&y2).unwrap().0, &principal_pim(&[3, 2, 1])));
}

#[test]
fn ext_in_degree_zero_and_from_projectives() {
    let st = model().principal.alg.structure().unwrap();
    let mods: Vec<AlgModule> = st.simples.iter().chain(&st.pims).cloned().chain([principal_specht(&[3, 3])]).collect();
    for m in &mods {
        for n in &mods {
            assert_eq!(ext_dim(m, n, 0).unwrap(), alg_hom_dim(m, n));
        }
    }
    for pim in &st.pims {
        for n in &mods {
            assert_eq!(&ext_dims(pim, n, 3).unwrap()[1..], &[0, 0, 0]);
        }
    }
}

#[test]
fn isomorphism_tests() {
    let st = model().principal.alg.structure().unwrap();
    for m in st.pims.iter().chain(&st.simples) {
        assert!(is_isomorphic(m, m));
    }
    let s = &st.simples[0];
    assert!(!is_isomorphic(s, &s.direct_sum(s)));
    assert!(!is_isomorphic(&st.simples[0], &st.simples[1]));
}

#[test]
fn ext_quiver_of_a_semisimple_algebra_has_no_arrows() {
    let q = ext_quiver(&full_matrix_algebra(3, 2)).unwrap();
    assert!(q.iter().flatten().all(|&x| x == 0));
    let q = ext_quiver(&group_algebra(2, 3)).unwrap();
    assert!(q.iter().flatten().all(|&x| x == 0));
}

#[test]
fn modules_over_the_ground_field() {
    let k = full_matrix_algebra(5, 1);
    assert_eq!(k.ngens(), 0);
    assert!(AlgModule::new(&k, vec![], "k^3").is_err());
    let v = AlgModule::with_dim(&k, 3, vec![], "k^3").unwrap();
    assert_eq!(v.dim(), 3);
    assert_eq!(alg_hom_dim(&v, &v), 9);
    assert_eq!(decompose(&v, SEED).unwrap().len(), 3);
}
