use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use starcong::grid;
use starcong::perturbation::sample_neighborhood_with;
use starcong::{hasse_subgraph, CanonicalForm, Execution, DEFAULT_TOL};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn neighborhood(c: &mut Criterion) {
    let mut g = c.benchmark_group("sample_neighborhood");
    g.sample_size(10);
    let source: CanonicalForm = "pair(1,-1)".parse().unwrap();
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, 100_000), &exec, |b, &exec| {
            b.iter(|| sample_neighborhood_with(&source, 1e-3, black_box(100_000), 7, DEFAULT_TOL, exec).unwrap())
        });
    }
    g.finish();
}

fn hasse(c: &mut Criterion) {
    let mut g = c.benchmark_group("hasse_subgraph");
    g.sample_size(10);
    let forms = grid::all_forms(400);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new(name, forms.len()), &exec, |b, &exec| {
            b.iter(|| hasse_subgraph(black_box(&forms), exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, neighborhood, hasse);
criterion_main!(benches);
