use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use modrep_bench::random_matrix;
use modrep_core::homological::ext_dims;
use modrep_core::ledger::verify_symbolic;
use modrep_core::partition::{abacus_display, block_label, principal_block};
use modrep_core::schur_weyl::exact_model_p3;
use modrep_core::sym::simple_module;
use modrep_core::partition::part;
use std::hint::black_box;

fn linalg(c: &mut Criterion) {
    let mut g = c.benchmark_group("rref");
    for n in [32, 96, 192] {
        let m = random_matrix(3, n, n, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m.rref())));
    }
    g.finish();
    let a = random_matrix(5, 12, 12, 1);
    let b = random_matrix(5, 12, 12, 2);
    c.bench_function("kron 12x12", |bch| bch.iter(|| black_box(a.kron(&b).unwrap())));
}

fn combinatorics(c: &mut Criterion) {
    let block = principal_block(13);
    c.bench_function("abacus labels p=13", |b| {
        b.iter(|| {
            for lam in &block {
                black_box(block_label(lam, 13).unwrap());
                black_box(abacus_display(lam, 13).unwrap().slide_up());
            }
        })
    });
    let mut g = c.benchmark_group("symbolic ledger");
    for p in [5u32, 13] {
        g.bench_with_input(BenchmarkId::from_parameter(p), &p, |b, &p| b.iter(|| black_box(verify_symbolic(p).unwrap())));
    }
    g.finish();
}

fn homological(c: &mut Criterion) {
    let model = exact_model_p3().unwrap();
    let s = model.basic_module(&simple_module(&part(&[5, 1]), 3).unwrap()).unwrap();
    let t = model.basic_module(&simple_module(&part(&[6]), 3).unwrap()).unwrap();
    let mut g = c.benchmark_group("ext");
    g.sample_size(10);
    g.bench_function("Ext^0..2 simples of basic Lambda(3,6)", |b| b.iter(|| black_box(ext_dims(&s, &t, 2).unwrap())));
    g.finish();
}

criterion_group!(benches, linalg, combinatorics, homological);
criterion_main!(benches);
