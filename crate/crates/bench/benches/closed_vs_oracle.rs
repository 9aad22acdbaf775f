use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hankel_bench::{bareiss_unit, closed_generic_shifted, closed_unit, cofactor_generic, t_window};
use hankel_core::closedform::TMethod;

fn unit_sign(c: &mut Criterion) {
    let mut g = c.benchmark_group("unit");
    for n in [64u64, 256, 512] {
        g.bench_with_input(BenchmarkId::new("closed", n), &n, |b, &n| b.iter(|| closed_unit(black_box(n), 0)));
        g.bench_with_input(BenchmarkId::new("bareiss", n), &n, |b, &n| b.iter(|| bareiss_unit(black_box(n), 0)));
    }
    g.bench_function("closed/1000000", |b| b.iter(|| closed_unit(black_box(1_000_000), 1)));
    g.finish();
}

fn shifted(c: &mut Criterion) {
    let mut g = c.benchmark_group("shifted");
    for m in [3u64, 5, 8] {
        g.bench_with_input(BenchmarkId::new("closed", m), &m, |b, &m| b.iter(|| closed_unit(black_box(256), m)));
        g.bench_with_input(BenchmarkId::new("bareiss", m), &m, |b, &m| b.iter(|| bareiss_unit(black_box(256), m)));
    }
    g.finish();
}

fn symbolic(c: &mut Criterion) {
    let mut g = c.benchmark_group("symbolic");
    g.sample_size(10);
    for n in [16u64, 32] {
        g.bench_with_input(BenchmarkId::new("closed", n), &n, |b, &n| b.iter(|| closed_generic_shifted(black_box(n))));
        g.bench_with_input(BenchmarkId::new("cofactor", n), &n, |b, &n| b.iter(|| cofactor_generic(black_box(n), 1)));
    }
    g.finish();
}

fn t_methods(c: &mut Criterion) {
    let mut g = c.benchmark_group("t");
    for m in TMethod::ALL {
        g.bench_function(m.name(), |b| b.iter(|| t_window(black_box(1_000_000), 1024, m)));
    }
    g.finish();
}

criterion_group!(benches, unit_sign, shifted, symbolic, t_methods);
criterion_main!(benches);
