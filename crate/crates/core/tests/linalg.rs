use modrep_core::linalg::{dim_cap, FpMatrix};
use modrep_core::Error;
use proptest::prelude::*;

fn m(p: u32, rows: &[&[i64]]) -> FpMatrix {
    FpMatrix::from_rows(p, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
}

/// Row reduction written out naively, used as an oracle for rank.
fn naive_rank(a: &FpMatrix) -> usize {
    let p = a.prime() as u64;
    let mut rows: Vec<Vec<u64>> = (0..a.rows()).map(|r| a.row(r).iter().map(|&x| x as u64).collect()).collect();
    let mut rank = 0;
    for c in 0..a.cols() {
        let Some(i) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, i);
        let inv = (1..p).find(|x| x * rows[rank][c] % p == 1).unwrap();
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for j in 0..rows.len() {
            if j != rank && rows[j][c] != 0 {
                let f = rows[j][c];
                for k in 0..a.cols() {
                    rows[j][k] = (rows[j][k] + p * p - f * rows[rank][k]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn rref_identity() {
    let i = FpMatrix::identity(5, 3);
    let r = i.rref();
    assert_eq!(r.reduced, i);
    assert_eq!(r.rank, 3);
    assert_eq!(r.pivots, vec![0, 1, 2]);
}

#[test]
fn rref_zero() {
    let z = FpMatrix::zeros(3, 2, 4);
    let r = z.rref();
    assert_eq!(r.reduced, z);
    assert_eq!(r.rank, 0);
    assert!(r.pivots.is_empty());
}

#[test]
fn rref_dependent_rows() {
    let a = m(3, &[&[1, 2], &[2, 4]]);
    let r = a.rref();
    assert_eq!(r.rank, 1);
    assert_eq!(r.reduced, m(3, &[&[1, 2], &[0, 0]]));
    assert_eq!(naive_rank(&a), 1);
}

#[test]
fn nullspace_examples() {
    assert_eq!(FpMatrix::identity(7, 4).nullspace().cols(), 0);
    assert_eq!(FpMatrix::zeros(3, 2, 3).nullspace().cols(), 3);
    let a = m(2, &[&[1, 1, 1]]);
    let k = a.nullspace();
    assert_eq!(k.cols(), 2);
    assert!(a.mul(&k).is_zero());
    // all eight vectors of F_2^3, counted directly
    let kernel = (0..8u32)
        .filter(|v| {
            let x = [v & 1, (v >> 1) & 1, (v >> 2) & 1];
            (x[0] + x[1] + x[2]) % 2 == 0
        })
        .count();
    assert_eq!(kernel, 1 << k.cols());
}

#[test]
fn solve_examples() {
    let b = m(5, &[&[1, 4], &[2, 0], &[3, 3]]);
    assert_eq!(FpMatrix::identity(5, 3).solve(&b).unwrap(), Some(b.clone()));
    assert_eq!(FpMatrix::zeros(5, 3, 3).solve(&b).unwrap(), None);
    assert_eq!(m(5, &[&[2]]).solve(&m(5, &[&[1]])).unwrap(), Some(m(5, &[&[3]])));
    assert!(matches!(FpMatrix::identity(5, 2).solve(&b), Err(Error::DimensionMismatch(_))));
}

#[test]
fn kron_examples() {
    let k = FpMatrix::identity(3, 2).kron(&FpMatrix::identity(3, 3)).unwrap();
    assert_eq!(k, FpMatrix::identity(3, 6));
    let a = m(5, &[&[1, 2], &[3, 4]]);
    assert!(a.kron(&FpMatrix::zeros(5, 2, 3)).unwrap().is_zero());
    assert_eq!(a.kron(&FpMatrix::zeros(5, 2, 3)).unwrap().rows(), 4);
}

fn perm_matrix(p: u32, g: &[usize]) -> FpMatrix {
    let mut x = FpMatrix::zeros(p, g.len(), g.len());
    for (i, &j) in g.iter().enumerate() {
        x.set(j, i, 1);
    }
    x
}

#[test]
fn kron_of_permutation_matrices_permutes_pairs() {
    let s2 = [vec![0, 1], vec![1, 0]];
    let s3 = [vec![0, 1, 2], vec![1, 0, 2], vec![0, 2, 1], vec![1, 2, 0], vec![2, 0, 1], vec![2, 1, 0]];
    for g in &s2 {
        for h in &s3 {
            let pair: Vec<usize> = (0..6).map(|i| g[i / 3] * 3 + h[i % 3]).collect();
            assert_eq!(perm_matrix(3, g).kron(&perm_matrix(3, h)).unwrap(), perm_matrix(3, &pair));
        }
    }
}

#[test]
fn kron_respects_cap() {
    let big = FpMatrix::zeros(2, 1, dim_cap() / 2 + 1);
    assert!(matches!(big.kron(&FpMatrix::zeros(2, 1, 2)), Err(Error::DimensionCap { .. })));
}

#[test]
fn json_interchange() {
    let a = m(7, &[&[1, 6, 0], &[3, 2, 5]]);
    let s = serde_json::to_string(&a).unwrap();
    assert_eq!(s, r#"{"prime":7,"rows":2,"cols":3,"entries":[1,6,0,3,2,5]}"#);
    assert_eq!(serde_json::from_str::<FpMatrix>(&s).unwrap(), a);
    let neg: FpMatrix = serde_json::from_str(r#"{"prime":7,"rows":1,"cols":2,"entries":[-1,9]}"#).unwrap();
    assert_eq!(neg, m(7, &[&[6, 2]]));
    assert!(serde_json::from_str::<FpMatrix>(r#"{"prime":7,"rows":2,"cols":2,"entries":[1]}"#).is_err());
    assert!(serde_json::from_str::<FpMatrix>(r#"{"prime":6,"rows":1,"cols":1,"entries":[1]}"#).is_err());
}

fn matrix() -> impl Strategy<Value = FpMatrix> {
    (prop::sample::select(vec![2u32, 3, 5]), 1usize..7, 1usize..7).prop_flat_map(|(p, r, c)| {
        prop::collection::vec(0..p, r * c).prop_map(move |e| FpMatrix::from_vec(p, r, c, e).unwrap())
    })
}

proptest! {
    #[test]
    fn rank_nullity(a in matrix()) {
        let k = a.nullspace();
        prop_assert_eq!(a.rank() + k.cols(), a.cols());
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(k.rank(), k.cols());
        prop_assert_eq!(a.rank(), naive_rank(&a));
    }

    #[test]
    fn rref_is_idempotent(a in matrix()) {
        let r = a.rref();
        let rr = r.reduced.rref();
        prop_assert_eq!(&rr.reduced, &r.reduced);
        prop_assert_eq!(rr.rank, r.rank);
        prop_assert_eq!(r.rank, r.pivots.len());
    }

    #[test]
    fn solve_is_consistent(a in matrix(), seed in 0u64..1000) {
        let p = a.prime();
        let x: Vec<u32> = (0..a.cols()).map(|i| ((seed + 7 * i as u64) % p as u64) as u32).collect();
        let b = a.mul(&FpMatrix::from_columns(p, a.cols(), &[x]));
        let sol = a.solve(&b).unwrap().expect("consistent by construction");
        prop_assert_eq!(a.mul(&sol), b);
        let e = FpMatrix::from_columns(p, a.rows(), &[(0..a.rows()).map(|i| (i == 0) as u32).collect()]);
        let solvable = a.hstack(&e).rank() == a.rank();
        prop_assert_eq!(a.solve(&e).unwrap().is_some(), solvable);
    }
}
