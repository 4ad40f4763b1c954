use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use heffter::ihs::{partition_pieces, PartitionSpec, PieceKind};
use heffter::{build_ihs, build_integer_heffter, interval_set, verify_ihs};
use heffter_bench::{HEFFTER_CASES, IHS_CASES};

fn ihs(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_ihs");
    for (name, m, n, k) in IHS_CASES {
        g.bench_with_input(BenchmarkId::new(name, format!("{m}x{n}x{k}")), &(m, n, k), |b, &(m, n, k)| {
            b.iter(|| build_ihs(black_box(m), black_box(n), black_box(k)).unwrap())
        });
    }
    g.finish();
}

fn heffter(c: &mut Criterion) {
    let mut g = c.benchmark_group("build_integer_heffter");
    for (m, n, s, k) in HEFFTER_CASES {
        g.bench_function(format!("H({m},{n};{s},{k})"), |b| {
            b.iter(|| build_integer_heffter(black_box(m), n, s, k).unwrap())
        });
    }
    g.finish();
}

fn verify(c: &mut Criterion) {
    let set = build_ihs(19, 19, 28).unwrap();
    c.bench_function("verify_ihs 19x19x28", |b| b.iter(|| verify_ihs(black_box(&set), 19, 19, 28)));
}

fn partition(c: &mut Criterion) {
    let s = interval_set(1, 4800, 1).unwrap();
    let spec = PartitionSpec::new(&[(PieceKind::K8, 200), (PieceKind::Type1, 800)]);
    c.bench_function("partition_pieces 4800", |b| b.iter(|| partition_pieces(black_box(&s), &spec).unwrap()));
}

criterion_group!(benches, ihs, heffter, verify, partition);
criterion_main!(benches);
