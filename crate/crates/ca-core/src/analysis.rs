//! Sensitivity time sets, finite-horizon upper densities, ball-diameter
//! profiles and the finite-scale averaged-diameter certificate.
//!
//! Two independent routes compute sensitivity sets. The brute-force route
//! enumerates every completion of the pinned window out to a suffix depth and
//! is exact whenever the dependence cone of the queried columns stays inside
//! the enumerated region. The arrow-extremal route runs the single orbit with
//! the all-arrows right tail; arrow presence is pointwise monotone in the
//! initial arrow set and in the free digits (blank digits move arrows every
//! step), so under the hypotheses below its presence times equal the full
//! ball quantification. The two routes are cross-checked against each other
//! in the acceptance suite.

use crate::config::Configuration;
use crate::engine::SuffixView;
use crate::parallel::{self, Exec};
use crate::rules::LocalRule;
use crate::symbol::{Arrowed, Symbol};
use num_rational::Ratio;
use thiserror::Error;

#[derive(Error, Debug, PartialEq, Eq)]
pub enum AnalysisError {
    #[error("horizon exceeds enumerated dependence cone (horizon {horizon}, suffix depth {suffix_depth}, max column {max_column}, ball radius {n})")]
    HorizonExceedsCone { horizon: usize, suffix_depth: u32, max_column: i64, n: i64 },
    #[error("column {column} lies left of the pinned window [-{n}, {n}]")]
    ColumnLeftOfBall { column: i64, n: i64 },
    #[error("column {column} outside the pinned window [-{n}, {n}]")]
    ColumnOutsideBall { column: i64, n: i64 },
    #[error("extremal hypothesis violated: {condition}")]
    ExtremalHypothesis { condition: String },
    #[error("completion count {count} too large to enumerate")]
    EnumerationTooLarge { count: u128 },
    #[error("horizon must be at least 1")]
    EmptyHorizon,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SensitivityMethod {
    BruteForce,
    ArrowExtremal,
}

impl SensitivityMethod {
    pub fn label(&self) -> &'static str {
        match self {
            SensitivityMethod::BruteForce => "brute-force",
            SensitivityMethod::ArrowExtremal => "arrow-extremal",
        }
    }
}

/// Times within a horizon at which ball members can disagree on a column set,
/// with the finite-horizon density surrogate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SensitivityReport {
    pub n: i64,
    pub columns: Vec<i64>,
    pub horizon: usize,
    /// Sorted, deduplicated.
    pub times: Vec<usize>,
    pub density: Ratio<u64>,
    pub method: SensitivityMethod,
}

/// Finite-horizon stand-in for the upper density: the maximum running density
/// over window ends in the upper half of the horizon, which damps edge
/// effects and converges at rate O(1/horizon) for unions of arithmetic
/// progressions.
pub fn upper_density_finite(times: &[usize], horizon: usize) -> Ratio<u64> {
    assert!(horizon >= 1, "horizon must be at least 1");
    let lo = (horizon / 2).max(1);
    let mut best = Ratio::new(0, 1);
    let mut count = 0usize;
    let mut idx = 0usize;
    for n in 1..=horizon {
        while idx < times.len() && times[idx] < n {
            count += 1;
            idx += 1;
        }
        if n >= lo {
            let d = Ratio::new(count as u64, n as u64);
            if d > best {
                best = d;
            }
        }
    }
    best
}

/// Every configuration agreeing with `x` on `[-n, n]`, with the cells
/// `(n, n + suffix_depth]` ranging over all words and the cells beyond equal
/// to `beyond` (repeated). The left side past `-n` keeps `x`'s left tail: no
/// column `j ≥ -n` ever reads it within the enumerated cone.
pub fn ball_completions<'a, S: Symbol>(
    x: &'a Configuration<S>,
    n: i64,
    suffix_depth: u32,
    beyond: &'a [S],
) -> impl Iterator<Item = Configuration<S>> + 'a {
    let alphabet = S::all().len() as u128;
    let count = alphabet.pow(suffix_depth);
    let base: Vec<S> = (-n..=n).map(|i| x.get(i)).collect();
    (0..count).map(move |idx| {
        let mut core = base.clone();
        let mut rest = idx;
        for _ in 0..suffix_depth {
            core.push(S::from_index((rest % alphabet) as usize));
            rest /= alphabet;
        }
        Configuration::new(x.left_tail().to_vec(), core, beyond.to_vec(), -n)
            .expect("tails nonempty")
    })
}

fn completion_count<S: Symbol>(suffix_depth: u32) -> Result<u64, AnalysisError> {
    let count = (S::all().len() as u128).pow(suffix_depth);
    if count > 1u128 << 28 {
        return Err(AnalysisError::EnumerationTooLarge { count });
    }
    Ok(count as u64)
}

/// Exact sensitivity times by exhaustive enumeration.
///
/// Preconditions (checked): `horizon ≤ suffix_depth`,
/// `max J + horizon ≤ n + suffix_depth`, `min J ≥ -n`.
pub fn sensitivity_set_bruteforce<S: Symbol>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    n: i64,
    columns: &[i64],
    horizon: usize,
    suffix_depth: u32,
) -> Result<SensitivityReport, AnalysisError> {
    sensitivity_set_bruteforce_with(x, rule, n, columns, horizon, suffix_depth, Exec::Auto)
}

pub(crate) fn sensitivity_set_bruteforce_with<S: Symbol>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    n: i64,
    columns: &[i64],
    horizon: usize,
    suffix_depth: u32,
    exec: Exec,
) -> Result<SensitivityReport, AnalysisError> {
    if horizon == 0 {
        return Err(AnalysisError::EmptyHorizon);
    }
    let mut columns = columns.to_vec();
    columns.sort_unstable();
    columns.dedup();
    if columns.is_empty() {
        return Ok(SensitivityReport {
            n,
            columns,
            horizon,
            times: Vec::new(),
            density: Ratio::new(0, 1),
            method: SensitivityMethod::BruteForce,
        });
    }
    let (min_j, max_j) = (columns[0], columns[columns.len() - 1]);
    if min_j < -n {
        return Err(AnalysisError::ColumnLeftOfBall { column: min_j, n });
    }
    if horizon as u32 > suffix_depth || max_j + horizon as i64 > n + suffix_depth as i64 {
        return Err(AnalysisError::HorizonExceedsCone {
            horizon,
            suffix_depth,
            max_column: max_j,
            n,
        });
    }
    let count = completion_count::<S>(suffix_depth)?;

    let alphabet = S::all().len() as u64;
    // packed column word: 5 bits per column
    assert!(columns.len() * 5 <= 128, "column set too wide to pack");
    let offsets: Vec<usize> = columns.iter().map(|&j| (j - min_j) as usize).collect();
    let base: Vec<S> = (min_j..=n).map(|i| x.get(i)).collect();
    let tail: Vec<S> = x.right_tail().to_vec();

    struct Acc<S> {
        rep: Option<Vec<u128>>,
        differs: Vec<bool>,
        word: Vec<S>,
        scratch: Vec<S>,
    }

    let rows = horizon + 1;
    let make = || Acc::<S> {
        rep: None,
        differs: vec![false; rows],
        word: Vec::new(),
        scratch: Vec::new(),
    };

    let folded = parallel::fold_reduce(
        exec,
        count,
        make,
        |mut acc, idx| {
            acc.word.clear();
            acc.word.extend_from_slice(&base);
            let mut rest = idx;
            for _ in 0..suffix_depth {
                acc.word.push(S::from_index((rest % alphabet) as usize));
                rest /= alphabet;
            }
            let mut view = SuffixView::from_parts(std::mem::take(&mut acc.word), tail.clone());
            let mut keys = Vec::with_capacity(rows);
            for _ in 0..rows {
                let mut key: u128 = 0;
                for &off in &offsets {
                    key = (key << 5) | view.get(off).index() as u128;
                }
                keys.push(key);
                view.step(rule, &mut acc.scratch);
            }
            acc.word = view.word;
            match &acc.rep {
                None => acc.rep = Some(keys),
                Some(rep) => {
                    for t in 0..rows {
                        if keys[t] != rep[t] {
                            acc.differs[t] = true;
                        }
                    }
                }
            }
            acc
        },
        |mut a, b| {
            match (&mut a.rep, b.rep) {
                (Some(ra), Some(rb)) => {
                    for t in 0..rows {
                        if b.differs[t] || ra[t] != rb[t] {
                            a.differs[t] = true;
                        }
                    }
                }
                (None, Some(rb)) => {
                    a.rep = Some(rb);
                    a.differs = b.differs;
                }
                _ => {}
            }
            a
        },
    );

    let times: Vec<usize> = folded
        .differs
        .iter()
        .enumerate()
        .filter_map(|(t, &d)| d.then_some(t))
        .collect();
    let density = upper_density_finite(&times, horizon);
    Ok(SensitivityReport {
        n,
        columns,
        horizon,
        times,
        density,
        method: SensitivityMethod::BruteForce,
    })
}

fn check_extremal_hypothesis<S: Arrowed>(
    x: &Configuration<S>,
    n: i64,
    column: i64,
) -> Result<(), AnalysisError> {
    if column < -n || column > n {
        return Err(AnalysisError::ColumnOutsideBall { column, n });
    }
    for i in -n..=n {
        if x.get(i).has_arrow() {
            return Err(AnalysisError::ExtremalHypothesis {
                condition: format!("cell {i} in the pinned window carries an arrow"),
            });
        }
    }
    if !x.get(n).digit_is_blank() {
        return Err(AnalysisError::ExtremalHypothesis {
            condition: format!("cell {n} (right edge of the pinned window) is not digit-blank"),
        });
    }
    if x.get(column).phase_sensitive() {
        return Err(AnalysisError::ExtremalHypothesis {
            condition: format!("cell {column} carries phase-sensitive bottom content"),
        });
    }
    Ok(())
}

/// Sensitivity times at one column from the single orbit with the all-arrows
/// right tail.
///
/// Hypotheses (checked): the pinned window `[-n, n]` is arrow-free, its right
/// edge is digit-blank, and the queried cell has no phase-sensitive content.
/// Under these the digit layer left of `n` is the same in every ball member
/// and arrow presence in the flood orbit dominates every completion, so the
/// presence times are exactly the ball disagreement times.
pub fn sensitivity_set_arrow_extremal<S: Arrowed>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    n: i64,
    column: i64,
    horizon: usize,
) -> Result<SensitivityReport, AnalysisError> {
    if horizon == 0 {
        return Err(AnalysisError::EmptyHorizon);
    }
    check_extremal_hypothesis(x, n, column)?;

    let word: Vec<S> = (column..=n).map(|i| x.get(i)).collect();
    let mut view = SuffixView::from_parts(word, vec![S::flood()]);
    let mut scratch = Vec::new();
    let mut times = Vec::new();
    for t in 0..=horizon {
        if view.get(0).has_arrow() {
            times.push(t);
        }
        view.step(rule, &mut scratch);
    }
    let density = upper_density_finite(&times, horizon);
    Ok(SensitivityReport {
        n,
        columns: vec![column],
        horizon,
        times,
        density,
        method: SensitivityMethod::ArrowExtremal,
    })
}

/// Per-column density record inside a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnDensity {
    pub column: i64,
    pub count: usize,
    pub density: Ratio<u64>,
}

/// Finite-scale certificate that the averaged ball diameters stay small:
/// every inspected column's sensitivity density must lie below
/// `2^-(m+2)` up to the finite-horizon slack `2/horizon`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiamMeanCertificate {
    pub m: u32,
    pub m_prime: i64,
    pub horizon: usize,
    /// Columns `0 ..= m+1`, arrow-extremal.
    pub per_column: Vec<ColumnDensity>,
    /// Density bound reused for the mirrored columns `-j` ("bounded-by-right"):
    /// column 0's density.
    pub left_bound: Ratio<u64>,
    /// Strict threshold `1/2^(m+2)`.
    pub threshold: Ratio<u64>,
    /// Converse-direction threshold `1/2^m`, recorded for the margin report.
    pub threshold_converse: Ratio<u64>,
    /// Finite-horizon slack `2/horizon`.
    pub slack: Ratio<u64>,
    pub passed: bool,
}

impl DiamMeanCertificate {
    pub fn worst_density(&self) -> Ratio<u64> {
        self.per_column
            .iter()
            .map(|c| c.density)
            .max()
            .unwrap_or_else(|| Ratio::new(0, 1))
    }
}

pub fn diam_mean_certificate<S: Arrowed>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    m: u32,
    m_prime: i64,
    horizon: usize,
) -> Result<DiamMeanCertificate, AnalysisError> {
    let threshold = Ratio::new(1u64, 1u64 << (m + 2));
    let threshold_converse = Ratio::new(1u64, 1u64 << m);
    let slack = Ratio::new(2u64, horizon as u64);
    let mut per_column = Vec::new();
    for j in 0..=(m as i64 + 1) {
        let report = sensitivity_set_arrow_extremal(x, rule, m_prime, j, horizon)?;
        per_column.push(ColumnDensity {
            column: j,
            count: report.times.len(),
            density: report.density,
        });
    }
    let left_bound = per_column[0].density;
    let passed = per_column.iter().all(|c| c.density <= threshold + slack);
    Ok(DiamMeanCertificate {
        m,
        m_prime,
        horizon,
        per_column,
        left_bound,
        threshold,
        threshold_converse,
        slack,
        passed,
    })
}

/// Tries the radius ladder `m' = l + 2^(l+1)` until the certificate passes.
/// Hypothesis failures at a given radius skip to the next; returns the last
/// failing certificate when none passes.
pub fn certificate_search<S: Arrowed>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    m: u32,
    horizon: usize,
    max_block_exponent: u32,
) -> Result<DiamMeanCertificate, AnalysisError> {
    let mut last: Option<DiamMeanCertificate> = None;
    let mut last_err = None;
    for l in 1..=max_block_exponent {
        let m_prime = l as i64 + (1i64 << (l + 1));
        match diam_mean_certificate(x, rule, m, m_prime, horizon) {
            Ok(cert) => {
                let passed = cert.passed;
                last = Some(cert);
                if passed {
                    break;
                }
            }
            Err(e) => last_err = Some(e),
        }
    }
    match last {
        Some(cert) => Ok(cert),
        None => Err(last_err.unwrap_or(AnalysisError::EmptyHorizon)),
    }
}

/// Exact diameters of the enumerated ball images, with running averages.
#[derive(Clone, Debug, PartialEq)]
pub struct DiameterProfile {
    /// Columns checked: `|j| ≤ resolution`.
    pub resolution: u32,
    /// Entry `t`: least `|j|` at which two completions disagree at time `t`,
    /// or `None` when all agree out to the resolution (diameter in
    /// `[0, 2^-resolution]`).
    pub exponents: Vec<Option<u32>>,
    /// Running mean of `2^-exponent`, using the resolution floor for `None`.
    pub running_mean: Vec<f64>,
}

pub fn ball_diameter_profile<S: Symbol>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    m_prime: i64,
    horizon: usize,
    suffix_depth: u32,
) -> Result<DiameterProfile, AnalysisError> {
    if horizon as u32 > suffix_depth {
        return Err(AnalysisError::HorizonExceedsCone {
            horizon,
            suffix_depth,
            max_column: m_prime + horizon as i64,
            n: m_prime,
        });
    }
    let count = completion_count::<S>(suffix_depth)?;
    let resolution = (m_prime + horizon as i64).max(1) as u32;
    let anchor = -(resolution as i64);
    let cols = 2 * resolution as usize + 1;
    let rows = horizon + 1;
    let n = m_prime;

    let alphabet = S::all().len() as u64;
    let base: Vec<S> = (anchor..=n).map(|i| x.get(i)).collect();
    let tail: Vec<S> = x.right_tail().to_vec();

    struct Acc<S> {
        rep: Option<Vec<S>>,
        differs: Vec<bool>,
        scratch: Vec<S>,
    }
    let make = || Acc::<S> {
        rep: None,
        differs: vec![false; rows * cols],
        scratch: Vec::new(),
    };

    let folded = parallel::fold_reduce(
        Exec::Auto,
        count,
        make,
        |mut acc, idx| {
            let mut word = base.clone();
            let mut rest = idx;
            for _ in 0..suffix_depth {
                word.push(S::from_index((rest % alphabet) as usize));
                rest /= alphabet;
            }
            let mut view = SuffixView::from_parts(word, tail.clone());
            let mut cells = Vec::with_capacity(rows * cols);
            for _ in 0..rows {
                for c in 0..cols {
                    cells.push(view.get(c));
                }
                view.step(rule, &mut acc.scratch);
            }
            match &acc.rep {
                None => acc.rep = Some(cells),
                Some(rep) => {
                    for (i, (&a, &b)) in rep.iter().zip(cells.iter()).enumerate() {
                        if a != b {
                            acc.differs[i] = true;
                        }
                    }
                }
            }
            acc
        },
        |mut a, b| {
            match (&mut a.rep, b.rep) {
                (Some(ra), Some(rb)) => {
                    for i in 0..rows * cols {
                        if b.differs[i] || ra[i] != rb[i] {
                            a.differs[i] = true;
                        }
                    }
                }
                (None, Some(rb)) => {
                    a.rep = Some(rb);
                    a.differs = b.differs;
                }
                _ => {}
            }
            a
        },
    );

    let mut exponents = Vec::with_capacity(rows);
    for t in 0..rows {
        let row = &folded.differs[t * cols..(t + 1) * cols];
        let mut found = None;
        for d in 0..=resolution {
            let center = resolution as usize;
            let hit = row[center + d as usize] || (d > 0 && row[center - d as usize]);
            if hit {
                found = Some(d);
                break;
            }
        }
        exponents.push(found);
    }
    let floor = 0.5f64.powi(resolution as i32);
    let mut running_mean = Vec::with_capacity(rows);
    let mut sum = 0.0;
    for (t, e) in exponents.iter().enumerate() {
        sum += e.map(|d| 0.5f64.powi(d as i32)).unwrap_or(floor);
        running_mean.push(sum / (t + 1) as f64);
    }
    Ok(DiameterProfile { resolution, exponents, running_mean })
}

/// Benchmark support: always-compiled sequential variants used to compare the
/// parallel and fallback paths in one build.
#[doc(hidden)]
pub mod bench_support {
    use super::*;

    pub fn sensitivity_set_bruteforce_sequential<S: Symbol>(
        x: &Configuration<S>,
        rule: &impl LocalRule<S>,
        n: i64,
        columns: &[i64],
        horizon: usize,
        suffix_depth: u32,
    ) -> Result<SensitivityReport, AnalysisError> {
        sensitivity_set_bruteforce_with(x, rule, n, columns, horizon, suffix_depth, Exec::Sequential)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::parse;
    use crate::rules::{RuleT, RuleT1};
    use crate::symbol::{A1Symbol, ProductSymbol};

    #[test]
    fn completion_counts() {
        let x: Configuration<A1Symbol> = parse("(_)|0|(_)").unwrap();
        assert_eq!(ball_completions(&x, 1, 0, &[A1Symbol::Empty]).count(), 1);
        assert_eq!(ball_completions(&x, 1, 2, &[A1Symbol::Empty]).count(), 16);
        for y in ball_completions(&x, 1, 2, &[A1Symbol::Empty]) {
            for i in -1..=1 {
                assert_eq!(y.get(i), x.get(i));
            }
        }
    }

    #[test]
    fn empty_column_set_is_never_sensitive() {
        let x: Configuration<ProductSymbol> = parse("(_)|0|(_)").unwrap();
        let r = sensitivity_set_bruteforce(&x, &RuleT, 1, &[], 3, 3).unwrap();
        assert!(r.times.is_empty());
    }

    #[test]
    fn cone_precondition_is_enforced() {
        let x: Configuration<ProductSymbol> = parse("(_)|0|(_)").unwrap();
        assert!(matches!(
            sensitivity_set_bruteforce(&x, &RuleT, 1, &[0], 5, 3),
            Err(AnalysisError::HorizonExceedsCone { .. })
        ));
        assert!(matches!(
            sensitivity_set_bruteforce(&x, &RuleT, 1, &[-3], 2, 3),
            Err(AnalysisError::ColumnLeftOfBall { .. })
        ));
    }

    #[test]
    fn digit_only_brute_force_matches_direct_enumeration() {
        // all-blank digit configuration: differences must propagate from the
        // enumerated suffix into column 0
        let x: Configuration<A1Symbol> = Configuration::uniform(A1Symbol::Empty);
        let n = 2;
        let sfx = 6;
        let horizon = 6;
        let r = sensitivity_set_bruteforce(&x, &RuleT1, n, &[0], horizon, sfx).unwrap();
        // direct oracle: quadratic pairwise comparison over materialized orbits
        let completions: Vec<_> = ball_completions(&x, n, sfx, &[A1Symbol::Empty]).collect();
        let mut expect = Vec::new();
        for t in 0..=horizon {
            let vals: Vec<A1Symbol> = completions
                .iter()
                .map(|y| crate::engine::column_trace(y, &RuleT1, 0, t)[t])
                .collect();
            if vals.windows(2).any(|w| w[0] != w[1]) {
                expect.push(t);
            }
        }
        assert_eq!(r.times, expect);
        // digits never cross a blank wall: with the blank at n pinned the
        // column is insensitive
        assert!(r.times.is_empty());
    }

    #[test]
    fn brute_force_detects_digit_differences_without_wall() {
        // all-zero window: a fixed blank in the free suffix drives cell 1 to
        // two by step 6 and column 0 bumps at step 7
        let x: Configuration<A1Symbol> = Configuration::uniform(A1Symbol::Zero);
        let r = sensitivity_set_bruteforce(&x, &RuleT1, 2, &[0], 7, 7).unwrap();
        assert!(r.times.contains(&7), "times {:?}", r.times);
    }

    #[test]
    fn extremal_hypothesis_errors() {
        let x: Configuration<ProductSymbol> = parse("(_)|0<|(_)").unwrap();
        let err = sensitivity_set_arrow_extremal(&x, &RuleT, 2, 0, 10).unwrap_err();
        assert!(matches!(err, AnalysisError::ExtremalHypothesis { .. }));
        let y: Configuration<ProductSymbol> = parse("(_)|00|(0)").unwrap();
        let err = sensitivity_set_arrow_extremal(&y, &RuleT, 3, 0, 10).unwrap_err();
        assert!(matches!(err, AnalysisError::ExtremalHypothesis { .. }));
        let z: Configuration<ProductSymbol> = parse("(_)|0|(_)").unwrap();
        assert!(matches!(
            sensitivity_set_arrow_extremal(&z, &RuleT, 1, 2, 10),
            Err(AnalysisError::ColumnOutsideBall { .. })
        ));
    }

    #[test]
    fn single_block_schedule_l0() {
        // pinned window _0_ with the wall at the right edge: passes at 3k+3
        let x: Configuration<ProductSymbol> = parse("(_)|0|(_)@1").unwrap();
        let r = sensitivity_set_arrow_extremal(&x, &RuleT, 2, 0, 30).unwrap();
        assert_eq!(r.times, vec![3, 6, 9, 12, 15, 18, 21, 24, 27, 30]);
    }

    #[test]
    fn density_trivial_cases() {
        let all: Vec<usize> = (0..100).collect();
        assert_eq!(upper_density_finite(&all, 100), Ratio::new(1, 1));
        assert_eq!(upper_density_finite(&[], 100), Ratio::new(0, 1));
    }

    #[test]
    fn density_of_the_l1_schedule() {
        let times: Vec<usize> = (0..).map(|k| 9 * k + 7).take_while(|&t| t < 1000).collect();
        let d = upper_density_finite(&times, 1000);
        let target = Ratio::new(1u64, 9u64);
        let diff = if d > target { d - target } else { target - d };
        assert!(diff < Ratio::new(1, 100), "density {d} vs 1/9");
    }

    #[test]
    fn left_columns_are_dominated_by_column_zero() {
        // brute-force check of the bound reused for mirrored columns
        let x: Configuration<ProductSymbol> = parse("(_)|0|(_)@1").unwrap();
        let n = 2;
        let horizon = 4;
        let sfx = 6;
        let s0 = sensitivity_set_bruteforce(&x, &RuleT, n, &[0], horizon, sfx).unwrap();
        for j in 1..=2i64 {
            let sj = sensitivity_set_bruteforce(&x, &RuleT, n, &[-j], horizon, sfx).unwrap();
            assert!(
                sj.times.len() <= s0.times.len(),
                "column {} has {} times vs {} at column 0",
                -j,
                sj.times.len(),
                s0.times.len()
            );
        }
    }

    #[test]
    fn profile_on_identical_cone_is_floored() {
        let x: Configuration<A1Symbol> = Configuration::uniform(A1Symbol::Empty);
        // digit blank at the window edge seals the cone: columns near 0 never
        // differ, the first disagreement sits at the enumerated cells
        let p = ball_diameter_profile(&x, &RuleT1, 2, 2, 2).unwrap();
        assert_eq!(p.exponents[0], Some(3));
        assert!(p.running_mean[0] >= 0.5f64.powi(3));
    }

    #[test]
    fn profile_requires_cone() {
        let x: Configuration<A1Symbol> = Configuration::uniform(A1Symbol::Empty);
        assert!(matches!(
            ball_diameter_profile(&x, &RuleT1, 2, 5, 2),
            Err(AnalysisError::HorizonExceedsCone { .. })
        ));
    }
}
