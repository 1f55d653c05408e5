use alg_bench::{caps, cube_fixture, regular_fixture};
use alg_core::verify::{run_suite, InstanceFamily, ModuleShapes};
use alg_core::{classify, enumerate_ideals, enumerate_submodules, localize_ring, MultClosedSet, Ring, Value};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn bench_classify(c: &mut Criterion) {
    let (_, p, s) = regular_fixture(8);
    c.bench_function("classify_zero_in_zmod8", |b| {
        b.iter(|| classify(black_box(&p), black_box(&s), &caps()).unwrap())
    });
}

fn bench_lattices(c: &mut Criterion) {
    let ring = Ring::zmod(12, &caps()).unwrap();
    c.bench_function("ideal_lattice_zmod12", |b| {
        b.iter(|| enumerate_ideals(black_box(&ring), &caps()).unwrap())
    });
    let cube = cube_fixture();
    c.bench_function("submodule_lattice_cube", |b| {
        b.iter(|| enumerate_submodules(black_box(&cube), &caps()).unwrap())
    });
}

fn bench_localization(c: &mut Criterion) {
    let ring = Ring::zmod(12, &caps()).unwrap();
    let s = MultClosedSet::from_values(&ring, &[Value::Int(1), Value::Int(5)]).unwrap();
    c.bench_function("localize_zmod12", |b| {
        b.iter(|| localize_ring(black_box(&ring), black_box(&s), &caps()).unwrap())
    });
}

fn bench_suite(c: &mut Criterion) {
    let family = InstanceFamily::new("bench", 5, 5, ModuleShapes::basic());
    c.bench_function("suite_thm1_maxring5", |b| {
        b.iter(|| run_suite("thm1-equivalences", black_box(&family), &caps()).unwrap())
    });
}

criterion_group!(benches, bench_classify, bench_lattices, bench_localization, bench_suite);
criterion_main!(benches);
