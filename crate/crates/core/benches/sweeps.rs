use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cogfis::analysis::{standard_sweeps, surface_grid, Exec, SurfaceSpec, SystemOptions};
use cogfis::{DecisionId, InputId};

fn modes() -> [(&'static str, Exec); 2] {
    [
        ("sequential", Exec::Sequential),
        ("parallel", Exec::Parallel),
    ]
}

fn bench_standard_sweeps(c: &mut Criterion) {
    let opts = SystemOptions::default();
    let mut g = c.benchmark_group("standard_sweeps");
    for (name, exec) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| standard_sweeps(black_box(&opts), exec).unwrap())
        });
    }
    g.finish();
}

fn bench_surface(c: &mut Criterion) {
    let opts = SystemOptions::default();
    let spec = SurfaceSpec::new(
        DecisionId::ChannelSelection,
        InputId::SignalStrength,
        InputId::SpectrumDemand,
    );
    let mut g = c.benchmark_group("surface_51x51");
    g.sample_size(10);
    for (name, exec) in modes() {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| surface_grid(black_box(&spec), &opts, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, bench_standard_sweeps, bench_surface);
criterion_main!(benches);
