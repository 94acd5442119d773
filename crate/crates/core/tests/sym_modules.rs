use modrep_core::module::{find_isomorphism, hom_dim, hom_space, is_isomorphic};
use modrep_core::partition::{is_p_regular, p_core_and_weight, part, partitions_of, std_tableaux_count, young_perm_dim};
use modrep_core::sym::*;
use modrep_core::{FpMatrix, GModule, Partition};

const P: u32 = 3;

fn intertwines(f: &FpMatrix, m: &GModule, n: &GModule) -> bool {
    m.generators.iter().zip(&n.generators).all(|(a, b)| f.mul(a) == b.mul(f))
}

#[test]
fn permutation_modules() {
    let m6 = perm_module(&part(&[6]), P).unwrap();
    assert_eq!(m6.dim, 1);
    assert_eq!(m6, GModule::trivial(P, 5).tagged(m6.origin_tag.clone()));
    assert_eq!(perm_module(&part(&[2, 2, 2]), P).unwrap().dim, 90);
    let m321 = perm_module(&part(&[3, 2, 1]), P).unwrap();
    assert_eq!(m321.dim as u128, young_perm_dim(&part(&[3, 2, 1])));
    assert!(m321.satisfies_coxeter_relations());
}

#[test]
fn specht_modules() {
    let (s6, _) = specht_module(&part(&[6]), P).unwrap();
    assert_eq!(s6.dim, 1);
    assert!(is_isomorphic(&s6, &GModule::trivial(P, 5)));
    for lam in partitions_of(6) {
        let (s, emb) = specht_module(&lam, P).unwrap();
        let m = perm_module(&lam, P).unwrap();
        assert_eq!(s.dim as u128, std_tableaux_count(&lam));
        assert_eq!(emb.rank(), s.dim);
        assert!(intertwines(&emb, &s, &m), "{lam}");
        assert!(m.is_stable(&emb));
        assert!(s.satisfies_coxeter_relations());
    }
    assert_eq!(specht_module(&part(&[2, 2, 2]), P).unwrap().0.dim, 5);
}

#[test]
fn singular_specht_module_at_three() {
    let (s, _) = specht_module(&part(&[2, 2, 2]), P).unwrap();
    let top = simple_module(&part(&[3, 2, 1]), P).unwrap();
    let soc = GModule::trivial(P, 5);
    assert_eq!(top.dim + soc.dim, s.dim);
    // onto D(3,2,1) and containing the trivial module: length two
    assert!(hom_space(&s, &top).iter().any(|f| f.rank() == top.dim));
    assert!(hom_space(&soc, &s).iter().any(|f| f.rank() == 1));
    assert_eq!(hom_dim(&top, &s), 0);
    assert_eq!(hom_dim(&s, &soc), 0);
}

#[test]
fn tensor_space_splits_into_permutation_modules() {
    let v = tensor_space(3, 6, P).unwrap();
    assert_eq!(v.dim, 729);
    assert!(v.satisfies_coxeter_relations());
    let comps = compositions(3, 6);
    assert_eq!(comps.len(), 28);
    let mut total = 0;
    for alpha in comps {
        let (w, _) = weight_space(&v, 3, 6, &alpha);
        let lam = Partition::from_composition(&alpha);
        let m = perm_module(&lam, P).unwrap();
        assert!(find_isomorphism(&w, &m, 1).is_some(), "weight {alpha:?}");
        total += w.dim;
    }
    assert_eq!(total, 729);
}

#[test]
fn natural_duality() {
    let t = GModule::trivial(P, 5);
    assert_eq!(t.dual_natural().generators, t.generators);
    for lam in partitions_of(6) {
        let (s, _) = specht_module(&lam, P).unwrap();
        let d = s.dual_natural();
        assert_eq!(d.dim, s.dim);
        assert_eq!(d.dual_natural().generators, s.generators);
        assert!(d.generators.iter().zip(&s.generators).all(|(a, b)| *a == b.transpose()));
    }
}

#[test]
fn hom_dimensions_are_preserved_by_duality() {
    let mods: Vec<GModule> = [&[6][..], &[5, 1], &[4, 2], &[3, 3], &[2, 2, 2]]
        .iter()
        .map(|x| specht_module(&part(x), P).unwrap().0)
        .chain([perm_module(&part(&[4, 2]), P).unwrap()])
        .collect();
    for m in &mods {
        for n in &mods {
            assert_eq!(hom_dim(m, n), hom_dim(&n.dual_natural(), &m.dual_natural()));
        }
    }
}

#[test]
fn induction_and_restriction() {
    let t5 = GModule::trivial(P, 4);
    let ind = induce(&t5).unwrap();
    assert_eq!(ind.dim, 6);
    assert!(ind.satisfies_coxeter_relations());
    assert!(is_isomorphic(&ind, &perm_module(&part(&[5, 1]), P).unwrap()));
    let (s32, _) = specht_module(&part(&[3, 2]), P).unwrap();
    let ind = induce(&s32).unwrap();
    assert_eq!(ind.dim, 6 * s32.dim);
    assert!(ind.satisfies_coxeter_relations());
    // Frobenius reciprocity
    for lam in partitions_of(6) {
        let (n, _) = specht_module(&lam, P).unwrap();
        assert_eq!(hom_dim(&ind, &n), hom_dim(&s32, &restrict(&n)), "{lam}");
        assert_eq!(hom_dim(&n, &ind), hom_dim(&restrict(&n), &s32), "{lam}");
    }
    assert_eq!(restrict(&perm_module(&part(&[4, 2]), P).unwrap()).ngens(), 4);
}

#[test]
fn induced_specht_filtration_in_the_principal_block() {
    // S(3,2)↑ has Specht factors (4,2), (3,3), (3,2,1); the last two lie in the principal block
    let (s32, _) = specht_module(&part(&[3, 2]), P).unwrap();
    let ind = induce(&s32).unwrap();
    let dims: usize = [&[4, 2][..], &[3, 3], &[3, 2, 1]].iter().map(|x| std_tableaux_count(&part(x)) as usize).sum();
    assert_eq!(ind.dim, dims);
    let (top, _) = specht_module(&part(&[3, 3]), P).unwrap();
    let (bottom, _) = specht_module(&part(&[3, 2, 1]), P).unwrap();
    assert!(hom_space(&ind, &top).iter().any(|f| f.rank() == top.dim));
    assert!(hom_space(&bottom, &ind).iter().any(|f| f.rank() == bottom.dim));
}

#[test]
fn hom_spaces() {
    let t = GModule::trivial(P, 5);
    assert_eq!(hom_space(&t, &t).len(), 1);
    let m51 = perm_module(&part(&[5, 1]), P).unwrap();
    // two double cosets S_5 \ S_6 / S_5
    assert_eq!(hom_dim(&m51, &m51), 2);
    for f in hom_space(&m51, &m51) {
        assert!(intertwines(&f, &m51, &m51));
    }
    let lams = partitions_of(6);
    for a in &lams {
        for b in &lams {
            if p_core_and_weight(a, P).0 != p_core_and_weight(b, P).0 {
                let (sa, _) = specht_module(a, P).unwrap();
                let (sb, _) = specht_module(b, P).unwrap();
                assert_eq!(hom_dim(&sa, &sb), 0, "{a} {b}");
            }
        }
    }
}

#[test]
fn simple_modules_are_absolutely_irreducible() {
    for lam in partitions_of(6).into_iter().filter(|l| is_p_regular(l, P)) {
        let d = simple_module(&lam, P).unwrap();
        assert_eq!(hom_dim(&d, &d), 1, "{lam}");
        assert!(d.satisfies_coxeter_relations());
    }
}

#[test]
fn ext_one_between_hook_and_two_row_specht_modules() {
    let (a, _) = specht_module(&part(&[5, 1]), P).unwrap();
    let (b, _) = specht_module(&part(&[3, 3]), P).unwrap();
    assert_eq!(ext1_dim(&a, &b).unwrap(), 1);
    let t = GModule::trivial(P, 5);
    // the sign and trivial modules differ in characteristic 3
    assert_eq!(ext1_dim(&t, &t).unwrap(), 0);
}

#[test]
fn json_interchange() {
    let (s, _) = specht_module(&part(&[4, 2]), P).unwrap();
    let text = serde_json::to_string(&s).unwrap();
    let back: GModule = serde_json::from_str(&text).unwrap();
    assert_eq!(back, s);
    assert!(text.contains("\"origin_tag\""));
}
