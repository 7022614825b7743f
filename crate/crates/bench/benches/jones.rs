use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use knotslopes::{jones_table, verify, JonesOptions};
use knotslopes_bench::{figure8, trefoil};

fn bench_tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("jones_table");
    group.sample_size(10);
    let opts = JonesOptions::default();
    for n_max in [3u32, 4, 5] {
        group.bench_with_input(
            BenchmarkId::new("trefoil", n_max),
            &n_max,
            |b, &n| {
                let pd = trefoil();
                b.iter(|| jones_table(&pd, n, &opts).unwrap())
            },
        );
    }
    group.bench_function("figure8/4", |b| {
        let pd = figure8();
        b.iter(|| jones_table(&pd, 4, &opts).unwrap())
    });
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    let opts = JonesOptions::default();
    group.bench_function("trefoil/4", |b| {
        let pd = trefoil();
        b.iter(|| verify(&pd, 4, &opts).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_tables, bench_verify);
criterion_main!(benches);
