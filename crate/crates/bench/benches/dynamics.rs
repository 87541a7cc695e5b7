use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rsfix::sample::SystemClass;
use rsfix::{polytime, BruteForce};
use rsfix_bench::system;

fn fixed_points(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_fixed_points");
    g.sample_size(10);
    for w in [8, 12, 16] {
        let sys = system(SystemClass::General, w, w as u64);
        g.bench_with_input(BenchmarkId::from_parameter(w), &sys, |b, sys| {
            b.iter(|| BruteForce::new().enumerate_fixed_points(sys).unwrap())
        });
    }
    g.finish();
}

fn res_eq(c: &mut Criterion) {
    let mut g = c.benchmark_group("res_eq_inhibitorless");
    for w in [16, 64, 256] {
        let a = system(SystemClass::Inhibitorless, w, 1);
        g.bench_with_input(BenchmarkId::new("polynomial", w), &a, |b, a| {
            b.iter(|| polytime::res_eq_inhibitorless(a, a).unwrap())
        });
    }
    for w in [8, 12, 16] {
        let a = system(SystemClass::Inhibitorless, w, 1);
        g.bench_with_input(BenchmarkId::new("brute", w), &a, |b, a| {
            b.iter(|| BruteForce::new().res_eq_counterexample(a, a).unwrap())
        });
    }
    g.finish();
}

fn lfp(c: &mut Criterion) {
    let mut g = c.benchmark_group("lfp_chain");
    for w in [16, 64, 256] {
        let sys = system(SystemClass::Inhibitorless, w, 3);
        g.bench_with_input(BenchmarkId::from_parameter(w), &sys, |b, sys| {
            b.iter(|| polytime::lfp_chain(sys).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, fixed_points, res_eq, lfp);
criterion_main!(benches);
