use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rsfix::logic::{self, Mode, SolveOptions};
use rsfix::sample::SystemClass;
use rsfix_bench::{system, three_cnf};

fn encodings(c: &mut Criterion) {
    let mut g = c.benchmark_group("decide_encoded");
    g.sample_size(10);
    for mode in [Mode::ExistsFixpoint, Mode::ExistsAttractor, Mode::ExistsFixge] {
        for w in [6, 10] {
            let sys = system(SystemClass::General, w, 11);
            g.bench_with_input(BenchmarkId::new(mode.name(), w), &sys, |b, sys| {
                b.iter(|| logic::decide(mode, sys, None, None).unwrap())
            });
        }
    }
    g.finish();
}

fn cnf(c: &mut Criterion) {
    let mut g = c.benchmark_group("solve_3cnf");
    let opts = SolveOptions::default();
    for n in [20, 30, 40] {
        // Near the satisfiability threshold.
        let f = three_cnf(n, n * 43 / 10, n as u64);
        g.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| {
            b.iter(|| logic::solve_formula(f, opts).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, encodings, cnf);
criterion_main!(benches);
