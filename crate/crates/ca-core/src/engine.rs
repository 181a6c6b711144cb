//! Exact global stepping, orbit traces and eventual-period certificates.
//!
//! The rules are one-sided (cell `i` reads cells `i`, `i+1`), which the engine
//! exploits twice: the image of a spatially periodic tail is spatially
//! periodic with the same alignment, so a step costs `O(core + tails)` and
//! grows the core by at most one cell at the left seam; and the restriction of
//! a configuration to `[lo, +∞)` evolves autonomously, so column traces and
//! period detection run on a finite suffix view that never grows.

use crate::config::{Configuration, Window};
use crate::rules::LocalRule;
use crate::symbol::Symbol;
use std::collections::HashMap;

/// One synchronous update of the whole configuration.
pub fn step<S: Symbol>(x: &Configuration<S>, rule: &impl LocalRule<S>) -> Configuration<S> {
    let origin = x.origin();
    let seam = x.right_seam();

    let left: Vec<S> = {
        let p = x.left_tail().len() as i64;
        // p consecutive cells ending just left of the new seam at origin−1
        (0..p)
            .map(|k| {
                let i = origin - 1 - p + k;
                rule.apply(x.get(i), x.get(i + 1))
            })
            .collect()
    };
    // cell origin−1 reads the core, so the core widens by one on the left
    let core: Vec<S> = (origin - 1..seam)
        .map(|i| rule.apply(x.get(i), x.get(i + 1)))
        .collect();
    let right: Vec<S> = {
        let p = x.right_tail().len() as i64;
        (0..p)
            .map(|k| {
                let i = seam + k;
                rule.apply(x.get(i), x.get(i + 1))
            })
            .collect()
    };

    Configuration::new(left, core, right, origin - 1).expect("tails stay nonempty")
}

/// `steps + 1` configurations starting from `x`.
pub fn orbit<S: Symbol>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    steps: usize,
) -> Vec<Configuration<S>> {
    let mut out = Vec::with_capacity(steps + 1);
    out.push(x.clone());
    for _ in 0..steps {
        let next = step(out.last().unwrap(), rule);
        out.push(next);
    }
    out
}

pub fn orbit_iter<'a, S: Symbol, R: LocalRule<S>>(
    x: &Configuration<S>,
    rule: &'a R,
) -> impl Iterator<Item = Configuration<S>> + 'a {
    let mut state = Some(x.clone());
    std::iter::from_fn(move || {
        let current = state.take()?;
        state = Some(step(&current, rule));
        Some(current)
    })
}

/// A rendered orbit restricted to a window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitTrace<S: Symbol> {
    pub rule_name: &'static str,
    pub window: Window,
    /// Row `i` is `T^i x` restricted to the window; `rows.len() = steps + 1`.
    pub rows: Vec<Vec<S>>,
}

impl<S: Symbol> OrbitTrace<S> {
    pub fn steps(&self) -> usize {
        self.rows.len() - 1
    }
}

pub fn trace_table<S: Symbol>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    window: Window,
    steps: usize,
) -> OrbitTrace<S> {
    let rows = orbit_iter(x, &rule)
        .take(steps + 1)
        .map(|c| c.window_word(window))
        .collect();
    OrbitTrace { rule_name: rule.name(), window, rows }
}

/// Cells that can influence column `j` within `t` steps: `[j, j + t]`.
pub fn dependence_cone(j: i64, t: usize) -> Window {
    Window::new(j, j + t as i64)
}

/// The restriction of a configuration to `[anchor, +∞)`: a finite word plus
/// the spatially periodic tail beyond it. One-sidedness makes this closed
/// under stepping, with both lengths fixed.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct SuffixView<S: Symbol> {
    pub word: Vec<S>,
    pub tail: Vec<S>,
}

impl<S: Symbol> SuffixView<S> {
    pub fn from_config(x: &Configuration<S>, anchor: i64) -> Self {
        let seam = x.right_seam().max(anchor);
        let word: Vec<S> = (anchor..seam).map(|i| x.get(i)).collect();
        let p = x.right_tail().len() as i64;
        let tail: Vec<S> = (0..p).map(|k| x.get(seam + k)).collect();
        SuffixView { word, tail }
    }

    pub fn from_parts(word: Vec<S>, tail: Vec<S>) -> Self {
        debug_assert!(!tail.is_empty());
        SuffixView { word, tail }
    }

    /// Cell at `anchor + off`.
    pub fn get(&self, off: usize) -> S {
        if off < self.word.len() {
            self.word[off]
        } else {
            self.tail[(off - self.word.len()) % self.tail.len()]
        }
    }

    pub fn step(&mut self, rule: &impl LocalRule<S>, scratch: &mut Vec<S>) {
        scratch.clear();
        let n = self.word.len();
        for i in 0..n {
            let right = if i + 1 < n { self.word[i + 1] } else { self.tail[0] };
            scratch.push(rule.apply(self.word[i], right));
        }
        std::mem::swap(&mut self.word, scratch);
        let p = self.tail.len();
        scratch.clear();
        for k in 0..p {
            scratch.push(rule.apply(self.tail[k], self.tail[(k + 1) % p]));
        }
        std::mem::swap(&mut self.tail, scratch);
    }

    /// Canonical form for cycle detection: primitive tail, word trimmed
    /// against it. Equal keys denote equal suffixes, hence equal futures.
    pub fn canonical_key(&self) -> (Vec<S>, Vec<S>) {
        let mut tail = minimize(&self.tail);
        let mut word = self.word.clone();
        while let Some(&last) = word.last() {
            if last == tail[tail.len() - 1] {
                word.pop();
                tail.rotate_right(1);
            } else {
                break;
            }
        }
        (word, tail)
    }
}

fn minimize<S: Symbol>(w: &[S]) -> Vec<S> {
    for p in 1..w.len() {
        if w.len() % p == 0 && (p..w.len()).all(|i| w[i] == w[i - p]) {
            return w[..p].to_vec();
        }
    }
    w.to_vec()
}

/// Values `T^n x` at column `j` for `n = 0..=steps`.
pub fn column_trace<S: Symbol>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    j: i64,
    steps: usize,
) -> Vec<S> {
    let mut view = SuffixView::from_config(x, j);
    let mut scratch = Vec::new();
    let mut out = Vec::with_capacity(steps + 1);
    for _ in 0..=steps {
        out.push(view.get(0));
        view.step(rule, &mut scratch);
    }
    out
}

/// First `n ≤ horizon` with `T^n x` and `T^n y` differing at column `j`.
pub fn first_column_difference<S: Symbol>(
    x: &Configuration<S>,
    y: &Configuration<S>,
    rule: &impl LocalRule<S>,
    j: i64,
    horizon: usize,
) -> Option<usize> {
    let mut vx = SuffixView::from_config(x, j);
    let mut vy = SuffixView::from_config(y, j);
    let mut scratch = Vec::new();
    for n in 0..=horizon {
        if vx.get(0) != vy.get(0) {
            return Some(n);
        }
        vx.step(rule, &mut scratch);
        vy.step(rule, &mut scratch);
    }
    None
}

/// Eventual-period certificate for a window sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeriodReport {
    pub preperiod: usize,
    /// Minimal period of the certified sequence (≥ 1).
    pub period: usize,
    pub confirmed: bool,
    pub horizon: usize,
}

/// Cycle detection on the canonical suffix state from the window's left edge.
///
/// A repeated suffix state at times `t0 < t1` proves every column in
/// `[lo, +∞)` is `(t0, t1−t0)`-eventually periodic; the minimal
/// `(preperiod, period)` of the window word sequence is then extracted from
/// the recorded rows. Without a repeat within `max_horizon` the report is the
/// best observed pattern, unconfirmed.
pub fn detect_eventual_period<S: Symbol>(
    x: &Configuration<S>,
    rule: &impl LocalRule<S>,
    window: Window,
    max_horizon: usize,
) -> PeriodReport {
    assert!(max_horizon >= 1);
    let mut view = SuffixView::from_config(x, window.lo);
    let mut scratch = Vec::new();
    let mut seen: HashMap<(Vec<S>, Vec<S>), usize> = HashMap::new();
    let mut rows: Vec<Vec<S>> = Vec::new();
    let width = window.len();

    for t in 0..=max_horizon {
        rows.push((0..width).map(|k| view.get(k)).collect());
        let key = view.canonical_key();
        if let Some(&t0) = seen.get(&key) {
            return confirmed_report(&rows, t0, t - t0, max_horizon);
        }
        seen.insert(key, t);
        view.step(rule, &mut scratch);
    }
    best_effort_report(&rows, max_horizon)
}

fn confirmed_report<W: Eq + Clone>(
    rows: &[Vec<W>],
    cycle_start: usize,
    cycle_len: usize,
    horizon: usize,
) -> PeriodReport {
    // rows[n] is known for n ≤ cycle_start + cycle_len and extends by
    // rows[n] = rows[cycle_start + (n − cycle_start) % cycle_len]
    let at = |n: usize| -> &Vec<W> {
        if n < rows.len() {
            &rows[n]
        } else {
            &rows[cycle_start + (n - cycle_start) % cycle_len]
        }
    };
    let mut period = cycle_len;
    for d in 1..cycle_len {
        if cycle_len % d == 0 && (cycle_start..cycle_start + cycle_len).all(|n| at(n + d) == at(n))
        {
            period = d;
            break;
        }
    }
    let mut preperiod = cycle_start;
    while preperiod > 0 && at(preperiod - 1 + period) == at(preperiod - 1) {
        preperiod -= 1;
    }
    PeriodReport { preperiod, period, confirmed: true, horizon }
}

fn best_effort_report<W: Eq>(rows: &[Vec<W>], horizon: usize) -> PeriodReport {
    let n = rows.len();
    for p in 1..=n / 2 {
        // longest p-periodic suffix of the observations
        let mut a = n - p;
        while a > 0 && rows[a - 1] == rows[a - 1 + p] {
            a -= 1;
        }
        if n - a >= 2 * p {
            return PeriodReport { preperiod: a, period: p, confirmed: false, horizon };
        }
    }
    PeriodReport { preperiod: horizon, period: 1, confirmed: false, horizon }
}
