//! Compares the data-parallel enumeration path against the sequential
//! fallback on the two hot kernels: brute-force sensitivity enumeration and
//! batched orbit stepping.
//!
//! Run `cargo bench` for the rayon path (bench ids carry `parallel`) and
//! `cargo bench --no-default-features` for the fallback build; within a
//! parallel build the always-compiled sequential reference is benched too.

use ca_core::analysis::bench_support::sensitivity_set_bruteforce_sequential;
use ca_core::config::Configuration;
use ca_core::engine::step;
use ca_core::rules::{RuleT, RuleT1};
use ca_core::sampling::random_configuration;
use ca_core::symbol::{A1Symbol, ProductSymbol};
use ca_core::{sensitivity_set_bruteforce, Symbol};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn walled_block(l: u32) -> Configuration<ProductSymbol> {
    let core: Vec<ProductSymbol> = std::iter::repeat(ProductSymbol::from_ascii("0").unwrap())
        .take(1 << l)
        .collect();
    Configuration::new(
        vec![ProductSymbol::blank()],
        core,
        vec![ProductSymbol::blank()],
        1,
    )
    .unwrap()
}

fn bench_brute_force(c: &mut Criterion) {
    let mode = if cfg!(feature = "parallel") { "parallel" } else { "sequential-build" };
    let mut group = c.benchmark_group("brute_force_sensitivity");
    let x = walled_block(1);
    for sfx in [4u32, 6u32] {
        group.bench_with_input(BenchmarkId::new(mode, sfx), &sfx, |b, &sfx| {
            b.iter(|| {
                sensitivity_set_bruteforce(&x, &RuleT, 3, &[0], sfx as usize, sfx).unwrap()
            })
        });
        group.bench_with_input(BenchmarkId::new("sequential", sfx), &sfx, |b, &sfx| {
            b.iter(|| {
                sensitivity_set_bruteforce_sequential(&x, &RuleT, 3, &[0], sfx as usize, sfx)
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn bench_orbit_batch(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let configs: Vec<Configuration<A1Symbol>> =
        (0..256).map(|_| random_configuration(&mut rng)).collect();
    c.bench_function("orbit_batch_256x243_steps", |b| {
        b.iter(|| {
            let mut acc = 0usize;
            for x in &configs {
                let mut y = x.clone();
                for _ in 0..243 {
                    y = step(&y, &RuleT1);
                }
                acc += y.core().len();
            }
            acc
        })
    });
}

criterion_group!(benches, bench_brute_force, bench_orbit_batch);
criterion_main!(benches);
