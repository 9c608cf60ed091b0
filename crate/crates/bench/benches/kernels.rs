use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use scarf_bench::{canonical_tuples, romanovski_wide, scarf_benchmark};
use scarf_core::fdoracle::{fd_eigenvalues, FdGrid};
use scarf_core::hypergeq::{monic_master, rodrigues_poly};
use scarf_core::quadrature::gram;
use scarf_core::romanovski::romanovski;
use scarf_core::scarf::potential_ii;
use scarf_core::QuadratureSpec;

fn polynomials(c: &mut Criterion) {
    let params = romanovski_wide();
    let mut group = c.benchmark_group("romanovski");
    for n in [4u32, 8, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| romanovski(black_box(&params), n))
        });
    }
    group.finish();

    let mut group = c.benchmark_group("n=6");
    for (name, tuple) in canonical_tuples() {
        group.bench_with_input(BenchmarkId::new("master", name), &tuple, |b, t| {
            b.iter(|| monic_master(black_box(t), 6).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("rodrigues", name), &tuple, |b, t| {
            b.iter(|| rodrigues_poly(black_box(t), 6).unwrap())
        });
    }
    group.finish();
}

fn numerics(c: &mut Criterion) {
    let scarf = scarf_benchmark();
    let mut group = c.benchmark_group("fd");
    group.sample_size(10);
    for interior in [1000usize, 4000] {
        let grid = FdGrid::new(20.0, interior).unwrap();
        group.bench_with_input(BenchmarkId::new("six_levels", interior), &grid, |b, g| {
            b.iter(|| fd_eigenvalues(|z| potential_ii(&scarf, z), black_box(g), 6).unwrap())
        });
    }
    group.finish();

    let params = romanovski_wide();
    let spec = QuadratureSpec::default();
    let mut group = c.benchmark_group("gram");
    group.sample_size(10);
    group.bench_function("p=10.5 max_n=9", |b| b.iter(|| gram(black_box(&params), 9, &spec).unwrap()));
    group.finish();
}

criterion_group!(benches, polynomials, numerics);
criterion_main!(benches);
