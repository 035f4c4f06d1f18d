//! Throughput of the data-parallel kernels, each measured on the default
//! rayon pool and pinned to one thread. Built with the `parallel` feature
//! disabled, the two labels coincide and show the sequential fallback.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use c5min_core::c5::{count_c5_algebraic, count_c5_naive};
use c5min_core::cert::{psd_check_a, verify_certificate, PsdMode};
use c5min_core::extremal::turan_graph;
use c5min_core::flagalg::product_table;

#[cfg(feature = "parallel")]
fn single_thread<R>(f: impl FnOnce() -> R + Send) -> R
where
    R: Send,
{
    rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .expect("pool")
        .install(f)
}

#[cfg(not(feature = "parallel"))]
fn single_thread<R>(f: impl FnOnce() -> R) -> R {
    f()
}

fn bench_count_c5(c: &mut Criterion) {
    let g = turan_graph(3, 480).expect("valid");
    let mut group = c.benchmark_group("count_c5_algebraic_n480");
    group.sample_size(10);
    group.bench_function("parallel", |b| b.iter(|| black_box(count_c5_algebraic(&g))));
    group.bench_function("single_thread", |b| {
        b.iter(|| single_thread(|| black_box(count_c5_algebraic(&g))))
    });
    group.finish();

    let small = turan_graph(4, 12).expect("valid");
    let mut group = c.benchmark_group("count_c5_backends_n12");
    group.bench_function("naive", |b| b.iter(|| black_box(count_c5_naive(&small))));
    group.bench_function("algebraic", |b| {
        b.iter(|| black_box(count_c5_algebraic(&small)))
    });
    group.finish();
}

fn bench_table_and_certificate(c: &mut Criterion) {
    let mut group = c.benchmark_group("product_table");
    group.sample_size(20);
    group.bench_function("parallel", |b| b.iter(|| black_box(product_table())));
    group.bench_function("single_thread", |b| {
        b.iter(|| single_thread(|| black_box(product_table())))
    });
    group.finish();

    let table = product_table();
    let mut group = c.benchmark_group("verify_certificate");
    group.sample_size(10);
    group.bench_function("symbolic", |b| {
        b.iter(|| black_box(verify_certificate(&table).expect("verifies")))
    });
    group.finish();
}

fn bench_psd_sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("psd_range_3_to_300");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| black_box(psd_check_a(PsdMode::Range { kmax: 300 }).expect("valid")))
    });
    group.bench_function("single_thread", |b| {
        b.iter(|| {
            single_thread(|| black_box(psd_check_a(PsdMode::Range { kmax: 300 }).expect("valid")))
        })
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_count_c5,
    bench_table_and_certificate,
    bench_psd_sweep
);
criterion_main!(benches);
