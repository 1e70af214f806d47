use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use doiko_bench::{low_rank, reduced};
use doiko_core::bialgebroid::{check_bialgebroid, from_weak_hopf};
use doiko_core::corpus::{canonical_dk_data, pair_groupoid_algebra};
use doiko_core::doikoppinen::build_dk_coring;
use doiko_core::exactlin::{image, kernel, quotient};
use doiko_core::findim::check_coring;
use doiko_core::weakhopf::{check_weak_hopf, extract_base};
use doiko_core::Q;

fn linear_algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("exactlin");
    for n in [8usize, 16, 32] {
        let m = low_rank(n, n, n / 2);
        let mp = reduced::<1_000_003>(&m);
        group.bench_with_input(BenchmarkId::new("kernel_q", n), &m, |b, m| b.iter(|| kernel(black_box(m))));
        group.bench_with_input(BenchmarkId::new("kernel_fp", n), &mp, |b, m| b.iter(|| kernel(black_box(m))));
        group.bench_with_input(BenchmarkId::new("quotient_q", n), &m, |b, m| {
            b.iter(|| quotient(m.rows(), image(black_box(m))).expect("quotient"))
        });
    }
    group.finish();
}

fn structures(c: &mut Criterion) {
    let mut group = c.benchmark_group("structures");
    group.sample_size(10);
    for n in [2usize, 3] {
        let h = pair_groupoid_algebra::<Q>(n);
        group.bench_with_input(BenchmarkId::new("check_weak_hopf", n), &h, |b, h| b.iter(|| check_weak_hopf(h)));
        let base = extract_base(&h).expect("base");
        group.bench_with_input(BenchmarkId::new("from_weak_hopf", n), &h, |b, h| {
            b.iter(|| from_weak_hopf(h, &base).expect("bialgebroid"))
        });
        let bgd = from_weak_hopf(&h, &base).expect("bialgebroid");
        group.bench_with_input(BenchmarkId::new("check_bialgebroid", n), &bgd, |b, x| b.iter(|| check_bialgebroid(x)));
    }
    let h = pair_groupoid_algebra::<Q>(2);
    let bgd = from_weak_hopf(&h, &extract_base(&h).expect("base")).expect("bialgebroid");
    let d = canonical_dk_data(&bgd).expect("data").remove(0).value;
    group.bench_function("dk_coring_p2", |b| {
        b.iter(|| {
            let dk = build_dk_coring(&d).expect("coring");
            check_coring(&dk.coring(&d).expect("coring structure"))
        })
    });
    group.finish();
}

criterion_group!(benches, linear_algebra, structures);
criterion_main!(benches);
