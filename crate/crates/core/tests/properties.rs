mod common;

use std::sync::{Arc, OnceLock};

use modrep_core::algebra::{AlgModule, FDAlgebra};
use modrep_core::homological::*;
use modrep_core::partition::{part, partitions_of};
use modrep_core::rel_homology::{relative_domdim_chain, AddCategory};
use modrep_core::schur_weyl::{exact_model_p3, young_module, ExactModel};
use modrep_core::structure::{decompose, radical_of_module};
use modrep_core::sym::{perm_module, simple_module, specht_module};
use modrep_core::{hom_dim, GModule};
use proptest::prelude::*;

use common::*;

fn model() -> &'static ExactModel {
    exact_model_p3().unwrap()
}

fn small_algebra(which: usize, relations: &[bool]) -> Arc<FDAlgebra> {
    match which {
        0 => group_algebra(3, 3),
        1 => group_algebra(3, 2),
        2 => auslander_of_truncated_polynomial(3, 2),
        n => incidence_algebra(3, n.min(5), relations),
    }
}

fn injectives(a: &Arc<FDAlgebra>) -> Vec<AlgModule> {
    a.opposite_arc().structure().unwrap().pims.iter().map(|p| p.dual(a)).collect()
}

/// Same summands up to isomorphism and order.
fn same_multiset(xs: &[AlgModule], ys: &[AlgModule]) -> bool {
    let mut left: Vec<&AlgModule> = ys.iter().collect();
    xs.len() == ys.len()
        && xs.iter().all(|x| match left.iter().position(|y| is_isomorphic(x, y)) {
            Some(i) => {
                left.remove(i);
                true
            }
            None => false,
        })
}

/// Λ₀-modules at p = 3 coming from group modules, together with their ♮-duals.
fn lambda_modules() -> &'static [(GModule, AlgModule, AlgModule)] {
    static MODS: OnceLock<Vec<(GModule, AlgModule, AlgModule)>> = OnceLock::new();
    MODS.get_or_init(build_lambda_modules)
}

fn build_lambda_modules() -> Vec<(GModule, AlgModule, AlgModule)> {
    let m = model();
    let mut gms: Vec<GModule> = Vec::new();
    for w in [&[6][..], &[5, 1], &[4, 1, 1], &[3, 3], &[3, 2, 1]] {
        gms.push(specht_module(&part(w), 3).unwrap().0);
        gms.push(simple_module(&part(w), 3).unwrap());
        gms.push(young_module(&part(w), 3, 1).unwrap().module);
    }
    gms.into_iter()
        .map(|g| {
            let a = m.principal_module(&g).unwrap();
            let d = m.principal_module(&g.dual_natural()).unwrap();
            (g, a, d)
        })
        .collect()
}

fn group_module(n: usize, p: u32, idx: usize, specht: bool) -> GModule {
    let lams = partitions_of(n);
    let lam = &lams[idx % lams.len()];
    if specht {
        specht_module(lam, p).unwrap().0
    } else {
        perm_module(lam, p).unwrap()
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, ..ProptestConfig::default() })]

    #[test]
    fn krull_schmidt_is_seed_independent(
        which in 0usize..6,
        relations in prop::collection::vec(any::<bool>(), 1..11),
        picks in prop::collection::vec(0usize..16, 1..4),
        s1 in any::<u64>(),
        s2 in any::<u64>(),
    ) {
        let a = small_algebra(which, &relations);
        let st = a.structure().unwrap();
        let pool: Vec<AlgModule> = st.pims.iter().chain(&st.simples).cloned().chain(injectives(&a)).collect();
        let parts: Vec<AlgModule> = picks.iter().map(|&i| pool[i % pool.len()].clone()).collect();
        let m = AlgModule::direct_sum_all(&a, &parts);
        let d1: Vec<AlgModule> = decompose(&m, s1).unwrap().into_iter().map(|x| x.module).collect();
        let d2: Vec<AlgModule> = decompose(&m, s2).unwrap().into_iter().map(|x| x.module).collect();
        prop_assert_eq!(d1.iter().map(|x| x.dim()).sum::<usize>(), m.dim());
        prop_assert!(same_multiset(&d1, &d2));
    }

    #[test]
    fn natural_duality_is_an_involution(n in 2usize..6, p in prop::sample::select(vec![2u32, 3, 5]), i in 0usize..8, j in 0usize..8, sp in any::<bool>()) {
        let m = group_module(n, p, i, sp);
        let k = group_module(n, p, j, !sp);
        let mm = m.dual_natural().dual_natural();
        prop_assert_eq!(&mm.generators, &m.generators);
        prop_assert!(mm.satisfies_coxeter_relations());
        prop_assert_eq!(hom_dim(&m, &k), hom_dim(&k.dual_natural(), &m.dual_natural()));
    }

    #[test]
    fn ext_is_preserved_by_natural_duality(i in 0usize..15, j in 0usize..15) {
        let mods = lambda_modules();
        let (_, m, dm) = &mods[i];
        let (_, n, dn) = &mods[j];
        prop_assert_eq!(ext_dims(m, n, 2).unwrap(), ext_dims(dn, dm, 2).unwrap());
    }

    #[test]
    fn syzygies_lie_in_the_radical_of_the_cover(i in 0usize..15) {
        let mods = lambda_modules();
        let mut cur = mods[i].1.clone();
        for _ in 0..3 {
            let (omega, cover) = syzygy(&cur).unwrap();
            prop_assert_eq!(omega.dim() + cur.dim(), cover.projective.dim());
            let rad = radical_of_module(&cover.projective);
            let kernel = cover.surjection.nullspace();
            prop_assert_eq!(rad.hstack(&kernel).rank(), rad.rank());
            cur = omega;
        }
    }

    #[test]
    fn resolutions_and_coresolutions_have_zero_euler_characteristic(
        which in 0usize..6,
        relations in prop::collection::vec(any::<bool>(), 1..11),
        pick in 0usize..8,
    ) {
        let a = small_algebra(which, &relations);
        let st = a.structure().unwrap();
        let m = st.simples[pick % st.simples.len()].clone();
        let res = minimal_resolution(&m, 4).unwrap();
        let c = res.to_chain_complex();
        prop_assert!(c.is_complex());
        if res.terminated() {
            prop_assert!(c.is_exact());
            prop_assert_eq!(c.euler_characteristic(), 0);
        }
        let q = AlgModule::direct_sum_all(&a, &injectives(&a));
        let cat = AddCategory::new(&q, 1).unwrap();
        let chain = relative_domdim_chain(&m, &cat, 4).unwrap();
        let cc = chain.to_chain_complex();
        prop_assert!(cc.is_complex());
        if cc.is_exact() {
            prop_assert_eq!(cc.euler_characteristic(), 0);
        }
    }

    #[test]
    fn dominant_dimension_agrees_with_brute_force(
        n in 2usize..6,
        relations in prop::collection::vec(any::<bool>(), 1..11),
        mask in 1u32..32,
        pick in 0usize..8,
    ) {
        let a = incidence_algebra(3, n, &relations);
        prop_assert!(a.dim() <= 30);
        let st = a.structure().unwrap();
        let inj = injectives(&a);
        let chosen: Vec<AlgModule> = inj.iter().chain(&st.pims).enumerate().filter(|(k, _)| mask >> (k % 5) & 1 == 1).map(|(_, x)| x.clone()).collect();
        prop_assume!(!chosen.is_empty());
        let q = AlgModule::direct_sum_all(&a, &chosen);
        assert_three_ways(&AlgModule::regular(&a), &q, 6);
        assert_three_ways(&st.simples[pick % st.simples.len()], &q, 6);
    }
}
