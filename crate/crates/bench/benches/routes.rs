use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use noncrossing::enumerate::{brute_count, gen_set_partitions};
use noncrossing::walks::{count_walks_dp, rho3_closed_form, rho3_kernel_ct_table, rho3_recurrence_from_closed_form};
use noncrossing::{theta_direct, theta_tableau, Class};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("brute_count");
    g.sample_size(10);
    for n in [6, 8, 9] {
        g.bench_with_input(BenchmarkId::new("braids-noiso_k3", n), &n, |b, &n| {
            b.iter(|| brute_count(Class::BraidsNoIsolated, 3, black_box(n)))
        });
    }
    g.finish();
}

fn duality(c: &mut Criterion) {
    let partitions: Vec<_> = gen_set_partitions(7).collect();
    let mut g = c.benchmark_group("theta_all_n7");
    g.bench_function("direct", |b| {
        b.iter(|| partitions.iter().map(|p| theta_direct(p).unwrap()).collect::<Vec<_>>())
    });
    g.bench_function("tableau", |b| {
        b.iter(|| partitions.iter().map(|p| theta_tableau(p).unwrap()).collect::<Vec<_>>())
    });
    g.finish();
}

fn rho3_routes(c: &mut Criterion) {
    let mut g = c.benchmark_group("rho3");
    for n in [50, 200] {
        g.bench_with_input(BenchmarkId::new("closed_form", n), &n, |b, &n| {
            b.iter(|| rho3_closed_form(black_box(n)))
        });
        g.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| rho3_recurrence_from_closed_form(black_box(n)).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("walk_dp", n), &n, |b, &n| {
            b.iter(|| count_walks_dp(black_box(n + 1)))
        });
    }
    g.bench_function(BenchmarkId::new("kernel_ct", 40), |b| {
        b.iter(|| rho3_kernel_ct_table(black_box(40)))
    });
    g.finish();
}

criterion_group!(benches, enumeration, duality, rho3_routes);
criterion_main!(benches);
