//! Builders for the named configurations and witness pairs: digit blocks,
//! the cascade of doubling blocks, divergence pairs, the stacked obstruction
//! pair, and layer lifts between the alphabets.

use crate::analysis::{diam_mean_certificate, AnalysisError, DiamMeanCertificate};
use crate::config::Configuration;
use crate::engine::{orbit_iter, step};
use crate::rules::{LocalRule, RuleTs};
use crate::symbol::{
    A1Symbol, A2Symbol, A3Symbol, Arrowed, ProductSymbol, StackedSymbol, Symbol,
};
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ConstructionError {
    #[error("word must have odd length, got {len}")]
    EvenLength { len: usize },
    #[error("word must start with the blank-over-b cell")]
    BadFirstSymbol,
    #[error("word must be nonempty")]
    EmptyWord,
    #[error("top-layer arrows did not vacate the window within {horizon} steps")]
    WarmupExceeded { horizon: usize },
}

/// Digit block `0^(2^l + j)` on blank tails, first cell at the origin.
///
/// Panics if `j > 2^l`.
pub fn build_block_point(l: u32, j: u32) -> Configuration<A1Symbol> {
    assert!(j <= 1 << l, "j must not exceed 2^l");
    let len = (1usize << l) + j as usize;
    Configuration::from_core(vec![A1Symbol::Zero; len], A1Symbol::Empty, 0)
}

/// Digit lift into the product alphabet (arrow layer blank).
pub fn lift_to_product(x: &Configuration<A1Symbol>) -> Configuration<ProductSymbol> {
    x.map(|d| ProductSymbol::new(d, A2Symbol::Empty))
}

/// Product lift into the stacked alphabet with a constant bottom letter.
pub fn lift_to_stacked(
    x: &Configuration<ProductSymbol>,
    bottom: A3Symbol,
) -> Configuration<StackedSymbol> {
    x.map(|t| StackedSymbol::new(t, bottom))
}

pub fn project_top(x: &Configuration<StackedSymbol>) -> Configuration<ProductSymbol> {
    x.map(|s| s.top)
}

/// Parameters of the cascade point: prefix word, number of doubling blocks,
/// and the tail cell past the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CascadeSpec {
    pub prefix: Vec<ProductSymbol>,
    pub depth: u32,
    pub tail: ProductSymbol,
}

impl CascadeSpec {
    pub fn plain(depth: u32) -> Self {
        CascadeSpec { prefix: Vec::new(), depth, tail: ProductSymbol::BLANK }
    }
}

/// `prefix · ␣ · 0 · ␣ · 0² · ␣ · 0⁴ ⋯ ␣ · 0^(2^(depth−1)) · ␣` with the
/// spec's tail beyond; prefix starts at the origin.
pub fn build_cascade_point(spec: &CascadeSpec) -> Configuration<ProductSymbol> {
    assert!(spec.depth >= 1, "cascade depth must be at least 1");
    let zero = ProductSymbol::new(A1Symbol::Zero, A2Symbol::Empty);
    let mut core = spec.prefix.clone();
    for b in 0..spec.depth {
        core.push(ProductSymbol::BLANK);
        core.extend(std::iter::repeat(zero).take(1 << b));
    }
    core.push(ProductSymbol::BLANK);
    Configuration::new(vec![ProductSymbol::BLANK], core, vec![spec.tail], 0)
        .expect("tails nonempty")
}

/// Two-block core `␣ 0^(2^(l−1)) ␣ 0^(2^l) ␣` on blank tails; requires l ≥ 1.
pub fn build_two_block_point(l: u32) -> Configuration<ProductSymbol> {
    assert!(l >= 1);
    let zero = ProductSymbol::new(A1Symbol::Zero, A2Symbol::Empty);
    let mut core = vec![ProductSymbol::BLANK];
    core.extend(std::iter::repeat(zero).take(1 << (l - 1)));
    core.push(ProductSymbol::BLANK);
    core.extend(std::iter::repeat(zero).take(1 << l));
    core.push(ProductSymbol::BLANK);
    Configuration::new(vec![ProductSymbol::BLANK], core, vec![ProductSymbol::BLANK], 0)
        .expect("tails nonempty")
}

/// The pair witnessing sensitivity at the window scale: the word `w`
/// (odd length, centered on 0) extended by all-blank tails on one side of the
/// pair and all-arrow tails on the other.
pub fn build_divergence_pair(
    w: &[ProductSymbol],
) -> Result<(Configuration<ProductSymbol>, Configuration<ProductSymbol>), ConstructionError> {
    if w.is_empty() {
        return Err(ConstructionError::EmptyWord);
    }
    if w.len() % 2 == 0 {
        return Err(ConstructionError::EvenLength { len: w.len() });
    }
    let m = (w.len() as i64 - 1) / 2;
    let x = Configuration::new(
        vec![ProductSymbol::BLANK],
        w.to_vec(),
        vec![ProductSymbol::BLANK],
        -m,
    )
    .expect("tails nonempty");
    let y = Configuration::new(
        vec![ProductSymbol::ARROW],
        w.to_vec(),
        vec![ProductSymbol::ARROW],
        -m,
    )
    .expect("tails nonempty");
    Ok((x, y))
}

/// The stacked obstruction pair built from `w` (which must start with the
/// blank-over-b cell).
#[derive(Clone, Debug)]
pub struct TsPair {
    /// `∞(␣,a) . w' (←,a) (␣,a)^∞` — carries the one extra arrow.
    pub with_arrow: Configuration<StackedSymbol>,
    /// `∞(␣,a) . w' (␣,a)^∞`.
    pub without_arrow: Configuration<StackedSymbol>,
    /// Steps simulated to flush the raw word's own top arrows.
    pub warmup: usize,
    /// The effective window `w'` after the flush.
    pub effective_window: Vec<StackedSymbol>,
}

/// Flushes the raw word's top-layer arrows (they all travel left and exit the
/// window), then attaches the single extra arrow cell after the window.
pub fn build_ts_pair(
    w: &[StackedSymbol],
    warmup_horizon: usize,
) -> Result<TsPair, ConstructionError> {
    if w.is_empty() {
        return Err(ConstructionError::EmptyWord);
    }
    if w[0] != StackedSymbol::new(ProductSymbol::BLANK, A3Symbol::B) {
        return Err(ConstructionError::BadFirstSymbol);
    }
    let blank_a = StackedSymbol::blank();
    let z = Configuration::new(vec![blank_a], w.to_vec(), vec![blank_a], 0)
        .expect("tails nonempty");
    let len = w.len() as i64;
    let mut warmup = None;
    let mut state = z;
    for t in 0..=warmup_horizon {
        if (0..len).all(|i| !state.get(i).has_arrow()) {
            warmup = Some(t);
            break;
        }
        state = step(&state, &RuleTs);
    }
    let warmup = warmup.ok_or(ConstructionError::WarmupExceeded { horizon: warmup_horizon })?;
    let effective: Vec<StackedSymbol> = (0..len).map(|i| state.get(i)).collect();

    let arrow_cell = StackedSymbol::new(ProductSymbol::ARROW, A3Symbol::A);
    let mut with_core = effective.clone();
    with_core.push(arrow_cell);
    let with_arrow = Configuration::new(vec![blank_a], with_core, vec![blank_a], 0)
        .expect("tails nonempty");
    let without_arrow = Configuration::new(vec![blank_a], effective.clone(), vec![blank_a], 0)
        .expect("tails nonempty");
    Ok(TsPair { with_arrow, without_arrow, warmup, effective_window: effective })
}

/// Certificate parameters for the cascade point at target resolution `m`.
///
/// The inspected columns `0..=m+1` sit in the first few blocks; a column in a
/// digit run of length `r` holds an arriving arrow for at most `2·3^b + 1`
/// consecutive steps where `b = floor(log2 r)`, and arrows pass once per
/// `3^(l+1)` once the depth-`l` block gates them. The block exponent `l` is
/// the least one with `(2·3^b + 1)/3^(l+1) ≤ 1/2^(m+2)` (also `2^l` must
/// exceed the prefix length and `l` the inspected block exponent). The ball
/// radius is the closing wall of the depth-`l` block, so the gate schedule is
/// pinned for every ball member.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct CascadeParams {
    pub m: u32,
    /// Deepest gating block exponent.
    pub block_exponent: u32,
    /// Ball radius: the wall closing the `0^(2^l)` block.
    pub m_prime: i64,
    /// Blocks needed in the truncated cascade.
    pub depth: u32,
}

fn ladder_m_prime(prefix_len: usize, l: u32) -> i64 {
    prefix_len as i64 + l as i64 + (1i64 << (l + 1))
}

pub fn cascade_parameters(m: u32, prefix_len: usize) -> CascadeParams {
    // deepest block exponent b among the inspected columns 0..=m+1 of the
    // plain cascade layout: the block 0^(2^b) spans [b + 2^b, b + 2^(b+1) - 1]
    let k = prefix_len as i64;
    let mut b_max = 0u32;
    for col in 0..=(m as i64 + 1) {
        if col < k {
            continue;
        }
        let mut b = 0u32;
        loop {
            let start = k + b as i64 + (1i64 << b);
            let end = k + b as i64 + (1i64 << (b + 1)) - 1;
            if (start..=end).contains(&col) {
                b_max = b_max.max(b);
                break;
            }
            if start > col {
                break; // a wall column
            }
            b += 1;
        }
    }
    let factor = 2 * 3u64.pow(b_max) + 1;
    let threshold_denom = 1u64 << (m + 2);
    let mut l = b_max + 1;
    while (1u64 << l) <= prefix_len as u64 || 3u64.pow(l + 1) < factor * threshold_denom {
        l += 1;
    }
    CascadeParams {
        m,
        block_exponent: l,
        m_prime: ladder_m_prime(prefix_len, l),
        depth: l + 1,
    }
}

/// Builds the truncated cascade for `m` and runs the certificate, bumping the
/// block exponent until it passes (the parameters above are the start point).
pub fn cascade_certificate(
    m: u32,
    horizon: usize,
) -> Result<(CascadeParams, DiamMeanCertificate), AnalysisError> {
    let mut params = cascade_parameters(m, 0);
    loop {
        let x = build_cascade_point(&CascadeSpec::plain(params.depth));
        let cert = diam_mean_certificate(&x, &crate::rules::RuleT, m, params.m_prime, horizon)?;
        if cert.passed || params.block_exponent >= 8 {
            return Ok((params, cert));
        }
        let l = params.block_exponent + 1;
        params = CascadeParams {
            m,
            block_exponent: l,
            m_prime: ladder_m_prime(0, l),
            depth: l + 1,
        };
    }
}

/// First time the two orbits disagree at `column`, searched up to `horizon`.
pub fn divergence_onset<S: Symbol>(
    x: &Configuration<S>,
    y: &Configuration<S>,
    rule: &impl LocalRule<S>,
    column: i64,
    horizon: usize,
) -> Option<usize> {
    crate::engine::first_column_difference(x, y, rule, column, horizon)
}

/// Column values over time, streaming the full orbit (used where the left
/// side matters; column traces right of a fixed anchor should prefer
/// `engine::column_trace`).
pub fn column_values<S: Symbol>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    column: i64,
    steps: usize,
) -> Vec<S> {
    orbit_iter(x, rule).take(steps + 1).map(|c| c.get(column)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;

    #[test]
    fn block_points() {
        assert_eq!(build_block_point(0, 0).to_text(), "(_)|0|(_)");
        assert_eq!(build_block_point(2, 0).to_text(), "(_)|0000|(_)");
        assert_eq!(build_block_point(1, 1).to_text(), "(_)|000|(_)");
    }

    #[test]
    #[should_panic]
    fn block_point_rejects_large_j() {
        build_block_point(1, 3);
    }

    #[test]
    fn cascade_cores() {
        let d1 = build_cascade_point(&CascadeSpec::plain(1));
        assert_eq!(d1.to_text(), "(_)|0|(_)@1");
        let d3 = build_cascade_point(&CascadeSpec::plain(3));
        // canonical form absorbs the outer blanks; the denoted point is
        // ␣0␣00␣0000␣ from the origin
        let w = d3.window_word(crate::config::Window::new(0, 10));
        assert_eq!(crate::format::word_to_string(&w), "_0_00_0000_");
    }

    #[test]
    fn cascade_depths_agree_on_shared_blocks() {
        let d3 = build_cascade_point(&CascadeSpec::plain(3));
        let d4 = build_cascade_point(&CascadeSpec::plain(4));
        for i in -3..=10 {
            assert_eq!(d3.get(i), d4.get(i));
        }
    }

    #[test]
    fn cascade_round_trips_through_text() {
        let spec = CascadeSpec {
            prefix: vec![ProductSymbol::new(A1Symbol::One, A2Symbol::Empty)],
            depth: 2,
            tail: ProductSymbol::BLANK,
        };
        let x = build_cascade_point(&spec);
        let y: Configuration<ProductSymbol> = parse(&x.to_text()).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn two_block_cores() {
        let x = build_two_block_point(1);
        let w = x.window_word(crate::config::Window::new(0, 5));
        assert_eq!(crate::format::word_to_string(&w), "_0_00_");
        let y = build_two_block_point(2);
        let w = y.window_word(crate::config::Window::new(0, 8));
        assert_eq!(crate::format::word_to_string(&w), "_00_0000_");
        // the closing wall sits at m = 2^l + 2^(l-1) + 2
        assert_eq!(y.get(8), ProductSymbol::BLANK);
        assert_eq!(y.get(7).digit, A1Symbol::Zero);
    }

    #[test]
    fn divergence_pair_shapes() {
        let w = vec![ProductSymbol::BLANK; 3];
        let (x, y) = build_divergence_pair(&w).unwrap();
        for i in -1..=1 {
            assert_eq!(x.get(i), y.get(i));
        }
        assert_eq!(x.get(5), ProductSymbol::BLANK);
        assert_eq!(y.get(5), ProductSymbol::ARROW);
        assert_eq!(y.get(-5), ProductSymbol::ARROW);
        assert!(build_divergence_pair(&w[..2]).is_err());
    }

    #[test]
    fn divergence_pair_separates_no_earlier_than_the_cone_allows() {
        let w = vec![ProductSymbol::new(A1Symbol::Zero, A2Symbol::Empty); 5];
        let (x, y) = build_divergence_pair(&w).unwrap();
        let n = divergence_onset(&x, &y, &crate::rules::RuleT, 0, 10_000).unwrap();
        assert!(n >= 2, "difference propagated from outside [-2,2] in {n} steps");
    }

    #[test]
    fn ts_pair_requires_blank_over_b() {
        let w = vec![StackedSymbol::blank()];
        assert_eq!(build_ts_pair(&w, 100).unwrap_err(), ConstructionError::BadFirstSymbol);
    }

    #[test]
    fn ts_pair_flushes_arrows() {
        let w: Vec<StackedSymbol> = vec![
            StackedSymbol::new(ProductSymbol::BLANK, A3Symbol::B),
            StackedSymbol::new(ProductSymbol::ARROW, A3Symbol::A),
            StackedSymbol::new(ProductSymbol::new(A1Symbol::Zero, A2Symbol::Arrow), A3Symbol::C),
        ];
        let pair = build_ts_pair(&w, 1000).unwrap();
        assert!(pair.warmup > 0);
        assert!(pair.effective_window.iter().all(|s| !s.has_arrow()));
        // columns agree until the extra arrow's cone reaches them
        assert_eq!(
            pair.with_arrow.get(w.len() as i64),
            StackedSymbol::new(ProductSymbol::ARROW, A3Symbol::A)
        );
    }

    #[test]
    fn cascade_parameter_monotonicity() {
        let p0 = cascade_parameters(0, 0);
        let p2 = cascade_parameters(2, 0);
        assert!(p2.block_exponent >= p0.block_exponent);
        assert!(p0.m_prime >= 1);
        // m' is the closing wall of the deepest block
        let l = p0.block_exponent;
        assert_eq!(p0.m_prime, l as i64 + (1 << (l + 1)));
    }
}
