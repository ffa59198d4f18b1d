use chebknot_bench::dense_form;
use chebknot_core::chebyshev::{eval_at_cyclotomic, reduce_canonical, sign_at_cyclotomic};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn ring_ops(c: &mut Criterion) {
    let mut g = c.benchmark_group("cyclotomic");
    for n in [30u64, 105, 385] {
        let f = dense_form(n, 1);
        let h = dense_form(n, 2);
        g.bench_with_input(BenchmarkId::new("mul_mod", n), &n, |b, _| {
            b.iter(|| f.mul_mod(&h).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("reduce_canonical", n), &n, |b, _| {
            b.iter(|| reduce_canonical(&f))
        });
        g.bench_with_input(BenchmarkId::new("eval_256", n), &n, |b, _| {
            b.iter(|| eval_at_cyclotomic(&f, 256))
        });
        g.bench_with_input(BenchmarkId::new("sign", n), &n, |b, _| {
            b.iter(|| sign_at_cyclotomic(&f))
        });
    }
    g.finish();
}

criterion_group!(benches, ring_ops);
criterion_main!(benches);
