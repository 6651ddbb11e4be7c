//! Benchmarks for the hot paths: chain construction, subset sweeps and
//! certificate verification.
//!
//! Run with `cargo bench -p permdn-bench`.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use permdn_bench::bundled;
use permdn_core::coloring::stabilizer_is_trivial;
use permdn_core::search::{exhaustive_refute, random_search, SearchLimits};
use permdn_core::{distinguishing_number, StabilizerChain};

fn bench_chain_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("chain_build");
    for name in ["GL(2,3)", "GL(4,2)", "M12", "M24"] {
        let g = bundled(name);
        group.bench_function(name, |b| {
            b.iter(|| StabilizerChain::build(black_box(&g)).order().clone())
        });
    }
    group.finish();
}

fn bench_subset_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("k2_subset_sweep");
    for name in ["GL(2,3)", "PSL(3,3)", "PGammaL(2,16)"] {
        let g = bundled(name);
        let chain = StabilizerChain::build(&g);
        group.bench_function(name, |b| {
            b.iter(|| exhaustive_refute(black_box(&chain), 2, 1 << 25).unwrap())
        });
    }
    group.finish();
}

fn bench_certificate_verification(c: &mut Criterion) {
    // Backtracking path: verify a random 3-coloring certificate of M24.
    let m24 = bundled("M24");
    let chain = StabilizerChain::build(&m24);
    let cert = random_search(&chain, 3, 1000, 0)
        .unwrap()
        .expect("M24 has a distinguishing 3-coloring");
    c.bench_function("verify_m24_certificate", |b| {
        b.iter(|| stabilizer_is_trivial(black_box(&chain), black_box(&cert)).unwrap())
    });
}

fn bench_full_d(c: &mut Criterion) {
    let mut group = c.benchmark_group("distinguishing_number");
    group.sample_size(10);
    for name in ["D10", "GL(2,3)", "PSL(3,2)", "Alt(8)@15"] {
        let g = bundled(name);
        group.bench_function(name, |b| {
            b.iter(|| distinguishing_number(black_box(&g), &SearchLimits::default()))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_chain_build,
    bench_subset_sweep,
    bench_certificate_verification,
    bench_full_d
);
criterion_main!(benches);
