use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use d2graph::search::{enumerate_connected_with, theorem_sweep, CampaignConfig};
use d2graph::DistanceOracle;

fn workers() -> Vec<usize> {
    let all = std::thread::available_parallelism().map_or(1, |n| n.get());
    if all > 1 { vec![1, all] } else { vec![1] }
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_connected");
    group.sample_size(10);
    for n in [7, 8] {
        for w in workers() {
            group.bench_with_input(BenchmarkId::new(format!("n{n}"), format!("{w}w")), &w, |b, &w| {
                b.iter(|| enumerate_connected_with(n, w).unwrap())
            });
        }
    }
    group.finish();
}

fn sweep(c: &mut Criterion) {
    let mut group = c.benchmark_group("theorem_sweep");
    group.sample_size(10);
    for w in workers() {
        for (label, oracle) in [("bfs", DistanceOracle::Bfs), ("matrix", DistanceOracle::MatrixPower)] {
            let config = CampaignConfig { workers: w, oracle };
            group.bench_with_input(BenchmarkId::new(label, format!("{w}w")), &config, |b, cfg| {
                b.iter(|| theorem_sweep(7, cfg).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, enumeration, sweep);
criterion_main!(benches);
