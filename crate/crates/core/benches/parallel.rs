use std::hint::black_box;

use betakit::betavalues::{beta_series_with, SeriesMethod, SeriesOptions};
use betakit::eulerpoly::{run_identity_suite_with, SuiteTables};
use betakit::quadrature::{aux_integral_numeric_with, beta_even_quadrature_with, IntegrandSpec, SignConvention};
use betakit::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn identity_suite(c: &mut Criterion) {
    let tables = SuiteTables::build(40);
    let mut g = c.benchmark_group("identity_suite_n40_t25");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| run_identity_suite_with(&tables, 40, 25, black_box(1), exec))
        });
    }
    g.finish();
}

fn plain_series(c: &mut Criterion) {
    let mut g = c.benchmark_group("beta_series_plain_s2_d11");
    g.sample_size(10);
    for (name, exec) in MODES {
        let opts = SeriesOptions { exec, ..SeriesOptions::default() };
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| beta_series_with(black_box(2), 11, SeriesMethod::Plain, &opts).unwrap())
        });
    }
    g.finish();
}

fn quadrature(c: &mut Criterion) {
    let mut g = c.benchmark_group("quadrature");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::new("beta_even_k3", name), |b| {
            b.iter(|| beta_even_quadrature_with(black_box(3), 1e-12, SignConvention::Derived, exec).unwrap())
        });
        let spec = IntegrandSpec::AuxI { k: 3, m: 2000 };
        g.bench_function(BenchmarkId::new("aux_i_k3_m2000", name), |b| {
            b.iter(|| aux_integral_numeric_with(black_box(spec), 1e-12, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, identity_suite, plain_series, quadrature);
criterion_main!(benches);
