use std::hint::black_box;

use cmpreproj::hom::hom_dim;
use cmpreproj::resolve::ext_dim;
use cmpreproj::*;
use criterion::{criterion_group, criterion_main, Criterion};

fn spec(s: &str) -> DynkinSpec {
    s.parse().unwrap()
}

fn linear_algebra(c: &mut Criterion) {
    let n = 60;
    let entries: Vec<F101> = (0..n * n).map(|k| F101::from_i64((k * k + 7 * k + 3) as i64 % 101)).collect();
    let m = Matrix::from_vec(n, n, entries);
    c.bench_function("rank 60x60 mod 101", |b| b.iter(|| black_box(&m).rank()));
}

fn build(c: &mut Criterion) {
    let e6 = spec("E6");
    c.bench_function("preprojective E6", |b| b.iter(|| Preprojective::<F101>::new(black_box(&e6)).unwrap()));
    let pi = Preprojective::<F101>::new(&e6).unwrap();
    c.bench_function("contract E6 J=1,2,3", |b| b.iter(|| pi.contract(black_box(&[1, 2, 3])).unwrap()));
}

fn homological(c: &mut Criterion) {
    let cfg = Config::default();
    let cand = dualizing_candidate::<F101>(&spec("A6"), &[1, 2, 3, 6], &cfg).unwrap();
    let w = cand.module();
    let da = FDModule::dual_regular(&cand.algebra);
    c.bench_function("hom DA W, A6 J=1,2,3,6", |b| b.iter(|| hom_dim(black_box(&da), black_box(&w)).unwrap()));
    c.bench_function("ext^2 W W, A6 J=1,2,3,6", |b| b.iter(|| ext_dim(black_box(&w), black_box(&w), 2).unwrap()));
}

fn certification(c: &mut Criterion) {
    let cfg = Config::default();
    let mut g = c.benchmark_group("certify");
    g.sample_size(10);
    g.bench_function("candidate A6 J=1,2,3,6", |b| {
        b.iter(|| dualizing_candidate::<F101>(&spec("A6"), black_box(&[1, 2, 3, 6]), &cfg).unwrap())
    });
    let cand = dualizing_candidate::<F101>(&spec("A6"), &[1, 2, 3, 6], &cfg).unwrap();
    g.bench_function("dualizing A6 J=1,2,3,6", |b| {
        b.iter(|| certify_dualizing(&cand.algebra, black_box(&cand.parts), &cfg).unwrap())
    });
    g.bench_function("classify D5 J=1,3,4", |b| {
        b.iter(|| classify_dynkin::<F101>(&spec("D5"), black_box(&[1, 3, 4]), &cfg).unwrap())
    });
    g.finish();
}

fn stable(c: &mut Criterion) {
    let a6 = spec("A6");
    c.bench_function("stable category A6", |b| b.iter(|| StableCat::<F101>::new(black_box(&a6)).unwrap()));
}

criterion_group!(benches, linear_algebra, build, homological, certification, stable);
criterion_main!(benches);
