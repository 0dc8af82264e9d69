use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use altperm_core::{
    count_avoiders, count_avoiders_partitioned, euler_number, iterate_alternating, Pattern,
};

fn bench_euler(c: &mut Criterion) {
    c.bench_function("euler_number_20", |b| {
        b.iter(|| euler_number(black_box(20)).unwrap())
    });
}

fn bench_alternating_stream(c: &mut Criterion) {
    c.bench_function("alternating_stream_n10", |b| {
        b.iter(|| iterate_alternating(black_box(10)).count())
    });
}

fn bench_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_avoiders");
    group.sample_size(20);
    let p123 = Pattern::increasing(3);
    let p1234 = Pattern::increasing(4);
    group.bench_function("catalan_n8_exhaustive", |b| {
        b.iter(|| count_avoiders(black_box(8), &p123, false).unwrap().count)
    });
    group.bench_function("alternating_n10_pruned", |b| {
        b.iter(|| count_avoiders(black_box(10), &p1234, true).unwrap().count)
    });
    group.bench_function("catalan_n9_partitioned_j4", |b| {
        b.iter(|| {
            count_avoiders_partitioned(black_box(9), &p123, false, 4)
                .unwrap()
                .count
        })
    });
    group.finish();
}

criterion_group!(benches, bench_euler, bench_alternating_stream, bench_counts);
criterion_main!(benches);
