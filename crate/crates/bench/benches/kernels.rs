use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fanfree_bench::random_graph;
use fanfree_core::canon::canonical_form;
use fanfree_core::constructions::{extremal_g1, extremal_g2};
use fanfree_core::fan::{contains_fan, contains_fan_par};
use fanfree_core::matching::maximum_matching;
use fanfree_core::maxcut::{max_cut_with, CutMode};
use fanfree_core::spectral::spectral_radius;
use std::hint::black_box;

fn matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximum_matching");
    for n in [50, 200, 500] {
        let g = random_graph(n, 4.0 / n as f64, 1);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| maximum_matching(black_box(g))));
    }
    group.finish();
}

fn fan_detection(c: &mut Criterion) {
    let mut group = c.benchmark_group("contains_fan");
    for (n, k) in [(100, 3), (200, 3), (200, 4)] {
        let g = if k % 2 == 1 { extremal_g1(n, k) } else { extremal_g2(n, k) }.unwrap();
        group.bench_with_input(BenchmarkId::new("serial", format!("{n}/{k}")), &g, |b, g| {
            b.iter(|| contains_fan(black_box(g), k).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("parallel", format!("{n}/{k}")), &g, |b, g| {
            b.iter(|| contains_fan_par(black_box(g), k).unwrap())
        });
    }
    group.finish();
}

fn spectral(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectral_radius");
    for n in [100, 400, 1000] {
        let g = extremal_g1(n, 3).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| spectral_radius(black_box(g), 1e-10).unwrap())
        });
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical_form");
    for n in [7, 9, 10] {
        let g = random_graph(n, 0.5, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| canonical_form(black_box(g)).unwrap()));
    }
    group.finish();
}

fn maxcut(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_cut");
    let g = random_graph(20, 0.5, 3);
    group.bench_function("exact/20", |b| b.iter(|| max_cut_with(black_box(&g), CutMode::Exact)));
    let g = random_graph(300, 0.1, 4);
    group.bench_function("heuristic/300", |b| b.iter(|| max_cut_with(black_box(&g), CutMode::Heuristic)));
    group.finish();
}

criterion_group!(benches, matching, fan_detection, spectral, canonical, maxcut);
criterion_main!(benches);
