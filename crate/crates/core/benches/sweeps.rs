use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use sl3ido::exec::Execution;
use sl3ido::pipeline::{build_operators, select_operators, solution_sweep};
use sl3ido::verma::classify_targets_with;
use sl3ido::Weight;

fn modes() -> Vec<(&'static str, Execution)> {
    let mut v = vec![("sequential", Execution::Sequential)];
    if cfg!(feature = "parallel") {
        v.push(("parallel", Execution::Parallel));
    }
    v
}

fn kernel_sweep(c: &mut Criterion) {
    let ops = build_operators(&-Weight::rho_half()).unwrap();
    let flats: Vec<_> = select_operators(&ops, "XcY").unwrap().iter().map(|r| r.u_flat.clone()).collect();
    let mut group = c.benchmark_group("solution_sweep XcY");
    group.sample_size(10);
    for n_max in [20usize, 40] {
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, n_max), &n_max, |b, &n| {
                b.iter(|| solution_sweep(&flats, n, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify_targets");
    group.sample_size(10);
    for (label, lambda) in [("rho", Weight::rho()), ("generic", Weight::from_ratios((1, 3), (1, 5)))] {
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(name, label), &lambda, |b, l| {
                b.iter(|| classify_targets_with(l, exec))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, kernel_sweep, classification);
criterion_main!(benches);
