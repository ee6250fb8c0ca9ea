use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ribbon::par::{self, Execution};
use ribbon::tableaux::{count_bst, fake_degree};
use ribbon::verify::{self, VerifyOptions};
use ribbon::Partition;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn bench_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for max_n in [6, 8] {
        for (name, exec) in MODES {
            let mut opts = VerifyOptions::new(max_n, max_n, 6);
            opts.execution = exec;
            group.bench_with_input(BenchmarkId::new(name, max_n), &opts, |b, opts| {
                b.iter(|| {
                    let report = verify::run(black_box(opts));
                    assert!(report.passed());
                })
            });
        }
    }
    group.finish();
}

fn bench_fake_degrees(c: &mut Criterion) {
    let mut group = c.benchmark_group("fake_degree");
    for n in [12, 16] {
        let shapes: Vec<Partition> = Partition::all(n).collect();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &shapes, |b, shapes| {
                b.iter(|| par::map(shapes, exec, |l| fake_degree(black_box(l))))
            });
        }
    }
    group.finish();
}

fn bench_bst_counts(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_bst");
    let cases: Vec<(Partition, usize)> = Partition::all(20)
        .flat_map(|l| [2, 4, 5].map(|k| (l.clone(), k)))
        .collect();
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| par::map(&cases, exec, |(l, k)| count_bst(black_box(l), *k)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_verify, bench_fake_degrees, bench_bst_counts);
criterion_main!(benches);
