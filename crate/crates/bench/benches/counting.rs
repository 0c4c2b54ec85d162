use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use arborist::construct::{complete_graph, paley, random_digraph, swirl};
use arborist::counting::{allarb, allarb_via_charpoly, arb_eulerian};
use arborist::linalg::{char_poly, det};
use arborist::search::{count_eulerian_orientations, extremal_eulerian, Objective, SearchConfig, DEFAULT_BUDGET};

fn determinants(c: &mut Criterion) {
    let mut g = c.benchmark_group("det");
    for n in [8usize, 16, 32] {
        let l = random_digraph(n, 3, 7).unwrap().laplacian();
        g.bench_with_input(BenchmarkId::from_parameter(n), &l, |b, l| b.iter(|| det(black_box(l))));
    }
    g.finish();
}

fn characteristic_polynomials(c: &mut Criterion) {
    let mut g = c.benchmark_group("char_poly");
    for n in [7usize, 11, 19] {
        let m = paley(n as u64).unwrap().skew_adjacency().unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| char_poly(black_box(m))));
    }
    g.finish();
}

fn arborescence_counts(c: &mut Criterion) {
    let d = random_digraph(12, 2, 1).unwrap();
    c.bench_function("allarb/det/12", |b| b.iter(|| allarb(black_box(&d))));
    c.bench_function("allarb/charpoly/12", |b| b.iter(|| allarb_via_charpoly(black_box(&d))));
    let sw = swirl(21).unwrap();
    c.bench_function("arb/swirl/21", |b| b.iter(|| arb_eulerian(black_box(&sw))));
}

fn enumeration(c: &mut Criterion) {
    let k5 = complete_graph(5).unwrap();
    c.bench_function("eulerian/k5/count", |b| {
        b.iter(|| count_eulerian_orientations(black_box(&k5), DEFAULT_BUDGET))
    });
    let cfg = SearchConfig::default();
    c.bench_function("eulerian/k5/min-arb", |b| {
        b.iter(|| extremal_eulerian(black_box(&k5), Objective::MinArb, &cfg))
    });
    let k7 = complete_graph(7).unwrap();
    let mut g = c.benchmark_group("eulerian/k7/min-arb");
    g.sample_size(10);
    for jobs in [1usize, 4] {
        let cfg = SearchConfig { jobs, iso_dedup: false, ..SearchConfig::default() };
        g.bench_with_input(BenchmarkId::from_parameter(jobs), &cfg, |b, cfg| {
            b.iter(|| extremal_eulerian(black_box(&k7), Objective::MinArb, cfg))
        });
    }
    g.finish();
}

criterion_group!(benches, determinants, characteristic_polynomials, arborescence_counts, enumeration);
criterion_main!(benches);
