use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use artau_bench::{block_fixture, dense_matrix, serial_fixture};
use artau_core::qsl2::StringObject;
use artau_core::quiverrep;
use artau_core::serial::{Interval, Side};

fn bench_rref(c: &mut Criterion) {
    let m = dense_matrix(24, 24);
    c.bench_function("rref 24x24 rational", |b| {
        b.iter(|| black_box(&m).rref().rank)
    });
}

fn bench_hom_basis(c: &mut Criterion) {
    let fam = serial_fixture();
    let x = fam.realize(&Interval { side: Side::V, i: -2, j: 2 }).unwrap();
    let y = fam.realize(&Interval { side: Side::V, i: -4, j: 0 }).unwrap();
    c.bench_function("hom basis between 5-dim intervals", |b| {
        b.iter(|| quiverrep::hom_basis(black_box(&x), black_box(&y)).unwrap().len())
    });
}

fn bench_dtr_pipeline(c: &mut Criterion) {
    let fam = serial_fixture();
    let m = fam.realize(&Interval { side: Side::V, i: 0, j: 2 }).unwrap();
    c.bench_function("serial DTr via transpose pipeline", |b| {
        b.iter(|| quiverrep::dtr(black_box(&m)).unwrap().total_dim())
    });
}

fn bench_block_syzygy_chain(c: &mut Criterion) {
    let fam = block_fixture();
    let s = fam.realize(&StringObject { k: 0, n: 2 }).unwrap();
    c.bench_function("block syzygy chain depth 3", |b| {
        b.iter(|| quiverrep::omega_power(black_box(&s), 3).unwrap().total_dim())
    });
}

fn bench_fitting_decompose(c: &mut Criterion) {
    let fam = block_fixture();
    let a = fam.realize(&StringObject { k: 1, n: 1 }).unwrap();
    let b2 = fam.realize(&StringObject { k: -1, n: 2 }).unwrap();
    let sum = a.direct_sum(&b2).unwrap().direct_sum(&fam.injective(1).unwrap()).unwrap();
    c.bench_function("fitting decomposition of a 3-part sum", |b| {
        b.iter(|| quiverrep::fitting_decompose(black_box(&sum)).unwrap().len())
    });
}

criterion_group!(
    benches,
    bench_rref,
    bench_hom_basis,
    bench_dtr_pipeline,
    bench_block_syzygy_chain,
    bench_fitting_decompose
);
criterion_main!(benches);
