//! Seeded uniform sampling of words and configurations for property checks.

use crate::config::Configuration;
use crate::symbol::Symbol;
use rand::Rng;

pub fn random_symbol<S: Symbol>(rng: &mut impl Rng) -> S {
    S::from_index(rng.gen_range(0..S::all().len()))
}

pub fn random_word<S: Symbol>(rng: &mut impl Rng, len: usize) -> Vec<S> {
    (0..len).map(|_| random_symbol(rng)).collect()
}

/// Uniform small configuration: tails of length 1–3, core of length 0–8,
/// origin in [−4, 4].
pub fn random_configuration<S: Symbol>(rng: &mut impl Rng) -> Configuration<S> {
    let left_len = rng.gen_range(1..=3);
    let core_len = rng.gen_range(0..=8);
    let right_len = rng.gen_range(1..=3);
    let left = random_word(rng, left_len);
    let core = random_word(rng, core_len);
    let right = random_word(rng, right_len);
    let origin = rng.gen_range(-4..=4);
    Configuration::new(left, core, right, origin).expect("tails nonempty")
}
