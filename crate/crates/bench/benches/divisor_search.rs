use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use toric_janet::janet::nm_vars;
use toric_janet::sample::{divisor_workload, naive_janet_scan};
use toric_janet::JanetTree;
use toric_janet_bench::rng;

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("divisor_search");
    for (n, d) in [(3u32, 4u64), (4, 6), (6, 6), (8, 8)] {
        let (set, queries) = divisor_workload(&mut rng(n as u64 * 31 + d), n, d, 400, 256, 1.0);
        let nonmult = nm_vars(&set).unwrap();
        let tree = JanetTree::build(n, set.iter().cloned().map(|u| (u, ()))).unwrap();
        let label = format!("n{n}_d{d}");
        group.bench_with_input(BenchmarkId::new("janet-tree", &label), &queries, |b, qs| {
            b.iter(|| qs.iter().filter(|w| tree.j_divisor(black_box(w)).is_some()).count())
        });
        group.bench_with_input(BenchmarkId::new("naive", &label), &queries, |b, qs| {
            b.iter(|| qs.iter().filter(|w| naive_janet_scan(&set, &nonmult, black_box(w)).0.is_some()).count())
        });
    }
    group.finish();
}

fn build(c: &mut Criterion) {
    let (set, _) = divisor_workload(&mut rng(5), 6, 6, 1000, 0, 1.0);
    c.bench_function("tree_build_1000", |b| {
        b.iter(|| JanetTree::build(6, set.iter().cloned().map(|u| (u, ()))).unwrap().len())
    });
}

criterion_group!(benches, search, build);
criterion_main!(benches);
