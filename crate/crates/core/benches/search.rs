use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use epicomp::kripke::FrameClass;
use epicomp::search::{check_validity_with, Executor, SearchBounds};
use epicomp::syntax::parse;

fn cases() -> Vec<(&'static str, SearchBounds, &'static str)> {
    vec![
        (
            "kt-transfer",
            SearchBounds::new(FrameClass::Kt, 2, 3).with_atoms(["p"]),
            "[{a} <= {b}] -> (D{b} p -> D{a} p)",
        ),
        (
            "s4-cdk",
            SearchBounds::new(FrameClass::S4, 2, 4),
            "D{b} [{a} <= {b}] -> CD[{a};{b}] [{a} <= {b}]",
        ),
        (
            "s5-superiority",
            SearchBounds::new(FrameClass::S5, 3, 4).with_atoms(["p"]),
            "[{a} <= {b,c}] -> D{a} [{a} <= {b,c}]",
        ),
    ]
}

fn bench_executors(c: &mut Criterion) {
    let mut group = c.benchmark_group("validity");
    group.sample_size(10);
    let execs = [
        ("sequential", Executor::sequential()),
        ("parallel", Executor::parallel()),
    ];
    for (name, bounds, text) in cases() {
        let f = parse(text).unwrap();
        for (label, exec) in &execs {
            group.bench_with_input(BenchmarkId::new(*label, name), &f, |b, f| {
                b.iter(|| check_validity_with(f, &bounds, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench_executors);
criterion_main!(benches);
