use criterion::{criterion_group, criterion_main, Criterion};
use wallcross::blocks::Curve;
use wallcross::cks::{cks_weight, Multigraph};
use wallcross::parallel::seq_map;
use wallcross::triples::{poles_motive, Regime};

fn degrees(c: &mut Criterion) {
    let curve = Curve::new(3).unwrap();
    let ds: Vec<i64> = (-4..=15).step_by(2).map(|d| d + 1).collect();
    let mut group = c.benchmark_group("poles_motives");
    group.bench_function("sequential", |b| {
        b.iter(|| seq_map(ds.clone(), |d| poles_motive(&curve, d, 2, Regime::Eps).unwrap()))
    });
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| wallcross::parallel::par_map(ds.clone(), |d| poles_motive(&curve, d, 2, Regime::Eps).unwrap()))
    });
    group.finish();
}

fn cks(c: &mut Criterion) {
    let graph = Multigraph::banana(12);
    let ns: Vec<usize> = (0..12).collect();
    let mut group = c.benchmark_group("cks_weights");
    group.bench_function("sequential", |b| b.iter(|| seq_map(ns.clone(), |n| cks_weight(&graph, n))));
    #[cfg(feature = "parallel")]
    group.bench_function("parallel", |b| {
        b.iter(|| wallcross::parallel::par_map(ns.clone(), |n| cks_weight(&graph, n)))
    });
    group.finish();
}

criterion_group!(benches, degrees, cks);
criterion_main!(benches);
