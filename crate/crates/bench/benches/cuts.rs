use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use k4bip_bench::{dense_tripartite, k4free_process, turan};
use k4bip_core::cut::{bipartize, k4free_cut};
use k4bip_core::oracle::exact_max_cut;

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_max_cut");
    group.sample_size(10);
    for n in [12usize, 16, 20] {
        let g = k4free_process(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| exact_max_cut(black_box(g), 28))
        });
    }
    group.finish();
}

fn pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("bipartize");
    for n in [30usize, 60, 120] {
        let g = dense_tripartite(n);
        group.bench_with_input(BenchmarkId::new("tripartite", n), &g, |b, g| {
            b.iter(|| bipartize(black_box(g)))
        });
    }
    let g = turan(20);
    group.bench_function("turan_60", |b| b.iter(|| bipartize(black_box(&g))));
    group.finish();
}

fn triangles(c: &mut Criterion) {
    let mut group = c.benchmark_group("triangles");
    for n in [60usize, 150, 300] {
        let g = dense_tripartite(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| black_box(g).triangles().len())
        });
    }
    group.finish();
}

fn refined(c: &mut Criterion) {
    let mut group = c.benchmark_group("k4free_cut");
    for n in [40usize, 80] {
        let g = k4free_process(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| k4free_cut(black_box(g)))
        });
    }
    group.finish();
}

criterion_group!(benches, oracle, pipeline, triangles, refined);
criterion_main!(benches);
