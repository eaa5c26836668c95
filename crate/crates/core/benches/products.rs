use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use kleinian_core::sample::Sampler;
use kleinian_core::suite::{self, SuiteConfig};
use kleinian_core::{Algebra, Exec};

fn products(c: &mut Criterion) {
    let mut rng = Sampler::new(11);
    let spec = rng.d_spec(4);
    let probe = Algebra::new(spec.clone());
    let x = rng.nonzero_element(&probe, 24, 40);
    let y = rng.nonzero_element(&probe, 24, 40);

    let mut group = c.benchmark_group("element_product");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        group.bench_function(format!("{exec:?}"), |b| {
            // a fresh algebra each time so the product cache starts cold
            b.iter_batched(|| Algebra::with_exec(spec.clone(), exec), |alg| alg.mul(&x, &y), BatchSize::LargeInput)
        });
    }
    group.finish();
}

fn batch_checks(c: &mut Criterion) {
    let mut group = c.benchmark_group("criteria_batch");
    group.sample_size(10);
    for exec in [Exec::Sequential, Exec::Parallel] {
        let config = SuiteConfig { exec, ..SuiteConfig::default() };
        group.bench_function(format!("{exec:?}"), |b| b.iter(|| suite::run_all(&config)));
    }
    group.finish();
}

criterion_group!(benches, products, batch_checks);
criterion_main!(benches);
