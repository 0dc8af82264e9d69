use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use altperm_bench::{round_robin_avoider, zigzag_alternating};
use altperm_core::{
    contains_pattern, corank_forward, peaks_and_valleys, rank_profile, west_forward, west_inverse,
    EndpointConvention, Pattern,
};

fn bench_rank_profile(c: &mut Criterion) {
    let p = round_robin_avoider(4096, 6);
    c.bench_function("rank_profile_n4096", |b| {
        b.iter(|| rank_profile(black_box(&p)))
    });
}

fn bench_west_maps(c: &mut Criterion) {
    let mut group = c.benchmark_group("west_map_k4");
    group.sample_size(20);
    for n in [256usize, 4096] {
        let source = round_robin_avoider(n, 4);
        group.bench_with_input(BenchmarkId::new("forward", n), &source, |b, p| {
            b.iter(|| west_forward(p, 4).unwrap())
        });
    }
    // The inverse direction validates its input against a non-monotone
    // pattern, and proving that pattern absent dominates everything else
    // with a search that grows like n^4 on these hosts — so the inverse is
    // measured at much smaller sizes than the forward map.
    for n in [64usize, 256] {
        let (image, _) = west_forward(&round_robin_avoider(n, 4), 4).unwrap();
        group.bench_with_input(BenchmarkId::new("inverse", n), &image, |b, p| {
            b.iter(|| west_inverse(p, 4).unwrap())
        });
    }
    group.finish();
}

fn bench_corank_map(c: &mut Criterion) {
    let source = round_robin_avoider(2048, 5);
    c.bench_function("corank_forward_n2048_k5", |b| {
        b.iter(|| corank_forward(black_box(&source), 5).unwrap())
    });
}

fn bench_containment_proof_of_absence(c: &mut Criterion) {
    // The host has no rising subsequence of length 4 while the needle opens
    // with one, so the backtracker visits every rising triple before it can
    // conclude the pattern is absent.
    let host = round_robin_avoider(120, 4);
    let needle: Pattern = "12453".parse().unwrap();
    c.bench_function("avoids_12453_n120", |b| {
        b.iter(|| contains_pattern(black_box(&host), &needle))
    });
}

fn bench_peaks_and_valleys(c: &mut Criterion) {
    let zig = zigzag_alternating(4097);
    c.bench_function("peaks_and_valleys_n4097", |b| {
        b.iter(|| peaks_and_valleys(black_box(&zig), EndpointConvention::Structural).unwrap())
    });
}

criterion_group!(
    benches,
    bench_rank_profile,
    bench_west_maps,
    bench_corank_map,
    bench_containment_proof_of_absence,
    bench_peaks_and_valleys
);
criterion_main!(benches);
