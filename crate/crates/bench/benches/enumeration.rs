use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use kerdocklab::codebook::{build_bch_c13, build_kerdock, build_trace_dual, puncture, shorten};
use kerdocklab::components::{LinearView, MinDistanceGraph, ParityView};
use kerdocklab::scheme::{restriction_scheme_check, SchemeMode};

fn builders(c: &mut Criterion) {
    c.bench_function("build kerdock m=6", |b| b.iter(|| build_kerdock(6).unwrap()));
    c.bench_function("build trace dual m=9", |b| b.iter(|| build_trace_dual(9, 3).unwrap()));
}

fn weights(c: &mut Criterion) {
    let dual = build_trace_dual(9, 3).unwrap();
    c.bench_function("weight distribution, 2^18 words x 511 bits", |b| {
        b.iter(|| dual.weight_distribution())
    });
}

fn scheme(c: &mut Criterion) {
    let k = build_kerdock(4).unwrap();
    let kpp = shorten(&shorten(&k, 15).unwrap(), 14).unwrap();
    c.bench_function("full scheme check, 64 words", |b| {
        b.iter(|| restriction_scheme_check(&kpp, SchemeMode::Full).unwrap())
    });
    let mut group = c.benchmark_group("slow");
    group.sample_size(10);
    let k6 = build_kerdock(6).unwrap();
    let kpp6 = shorten(&shorten(&k6, 63).unwrap(), 62).unwrap();
    group.bench_function("full scheme check, 1024 words", |b| {
        b.iter(|| restriction_scheme_check(&kpp6, SchemeMode::Full).unwrap())
    });
    group.finish();
}

fn components(c: &mut Criterion) {
    let k6 = build_kerdock(6).unwrap();
    let p = puncture(&k6, 63).unwrap();
    let mut group = c.benchmark_group("components");
    group.sample_size(10);
    group.bench_function("edges of punctured kerdock m=6", |b| b.iter(|| MinDistanceGraph::new(&p).unwrap().edge_count()));
    let graph = MinDistanceGraph::new(&p).unwrap();
    group.bench_function("union-find, one coordinate", |b| b.iter(|| graph.components(0).unwrap()));
    let dual = build_trace_dual(7, 3).unwrap();
    group.bench_function("span method, dual m=7 all coordinates", |b| {
        b.iter_batched(
            || LinearView::new(&dual).unwrap(),
            |view| (0..dual.n()).map(|i| view.components(i).unwrap().component_count).sum::<u64>(),
            BatchSize::LargeInput,
        )
    });
    let bch = build_bch_c13(7).unwrap();
    let pv = ParityView::new(bch.parity()).unwrap();
    group.bench_function("syndrome search, C(1,3) m=7 one coordinate", |b| b.iter(|| pv.components(5).unwrap()));
    group.finish();
}

criterion_group!(benches, builders, weights, scheme, components);
criterion_main!(benches);
