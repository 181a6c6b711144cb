//! Bi-infinite configurations with eventually spatially periodic tails.
//!
//! A configuration is stored as a periodic left tail, a finite core word and a
//! periodic right tail, plus the integer index of the first core cell. Every
//! constructor canonicalizes, so structural equality (and hashing) coincides
//! with equality of the denoted bi-infinite points:
//!
//! * tail words are primitive (no proper repetition),
//! * the core is trimmed so its outermost cells break the tail patterns,
//! * a globally periodic point (empty core, matching tails across the seam)
//!   is normalized to origin 0 with phase-aligned tails.

use crate::symbol::Symbol;
use thiserror::Error;

/// Closed integer interval of cell indices.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub struct Window {
    pub lo: i64,
    pub hi: i64,
}

impl Window {
    /// Panics if `lo > hi`.
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "window lo must not exceed hi");
        Window { lo, hi }
    }

    pub fn len(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn cells(&self) -> impl Iterator<Item = i64> {
        self.lo..=self.hi
    }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum ConfigError {
    #[error("tail words must be nonempty ({side} tail is empty)")]
    EmptyTail { side: &'static str },
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Configuration<S: Symbol> {
    left: Vec<S>,
    core: Vec<S>,
    right: Vec<S>,
    origin: i64,
}

impl<S: Symbol> Configuration<S> {
    /// Builds and canonicalizes. The left tail repeats to −∞ with its last
    /// letter at `origin − 1 − k·|left|`; the right tail repeats from the
    /// first cell after the core.
    pub fn new(left: Vec<S>, core: Vec<S>, right: Vec<S>, origin: i64) -> Result<Self, ConfigError> {
        if left.is_empty() {
            return Err(ConfigError::EmptyTail { side: "left" });
        }
        if right.is_empty() {
            return Err(ConfigError::EmptyTail { side: "right" });
        }
        Ok(Configuration { left, core, right, origin }.canonicalized())
    }

    /// Constant configuration.
    pub fn uniform(s: S) -> Self {
        Configuration { left: vec![s], core: Vec::new(), right: vec![s], origin: 0 }
            .canonicalized()
    }

    /// Core word between constant `tail` cells on both sides.
    pub fn from_core(core: Vec<S>, tail: S, origin: i64) -> Self {
        Configuration { left: vec![tail], core, right: vec![tail], origin }.canonicalized()
    }

    pub fn left_tail(&self) -> &[S] {
        &self.left
    }

    pub fn core(&self) -> &[S] {
        &self.core
    }

    pub fn right_tail(&self) -> &[S] {
        &self.right
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    /// First cell index after the core (start of the right tail).
    pub fn right_seam(&self) -> i64 {
        self.origin + self.core.len() as i64
    }

    /// Total cell lookup.
    pub fn get(&self, i: i64) -> S {
        let seam = self.right_seam();
        if i >= seam {
            let p = self.right.len() as i64;
            self.right[((i - seam).rem_euclid(p)) as usize]
        } else if i >= self.origin {
            self.core[(i - self.origin) as usize]
        } else {
            let p = self.left.len() as i64;
            self.left[((i - self.origin).rem_euclid(p)) as usize]
        }
    }

    pub fn window_word(&self, w: Window) -> Vec<S> {
        w.cells().map(|i| self.get(i)).collect()
    }

    /// `get(shift(x), i) = get(x, i + 1)`.
    pub fn shift(&self) -> Self {
        self.shift_by(1)
    }

    /// `get(shift_by(x, k), i) = get(x, i + k)`.
    pub fn shift_by(&self, k: i64) -> Self {
        Configuration {
            left: self.left.clone(),
            core: self.core.clone(),
            right: self.right.clone(),
            origin: self.origin - k,
        }
        .canonicalized()
    }

    /// Maps every cell, preserving the tail/core split.
    pub fn map<T: Symbol>(&self, f: impl Fn(S) -> T) -> Configuration<T> {
        Configuration {
            left: self.left.iter().map(|&s| f(s)).collect(),
            core: self.core.iter().map(|&s| f(s)).collect(),
            right: self.right.iter().map(|&s| f(s)).collect(),
            origin: self.origin,
        }
        .canonicalized()
    }

    fn canonicalized(mut self) -> Self {
        self.left = minimize_period(&self.left);
        self.right = minimize_period(&self.right);

        // Absorb core cells that continue a tail pattern. Rotations keep the
        // tails aligned with the moving seams.
        let mut start = 0usize;
        let mut end = self.core.len();
        while start < end && self.core[start] == self.left[0] {
            self.left.rotate_left(1);
            self.origin += 1;
            start += 1;
        }
        while start < end && self.core[end - 1] == self.right[self.right.len() - 1] {
            self.right.rotate_right(1);
            end -= 1;
        }
        if start > 0 || end < self.core.len() {
            self.core = self.core[start..end].to_vec();
        }

        if self.core.is_empty() && !self.normalize_periodic() {
            self.slide_seam_right();
        }
        self
    }

    /// Empty core: if the right tail pattern continues the left one across the
    /// seam, the point is globally periodic; normalize to origin 0 with both
    /// tails in absolute phase. Returns whether it applied.
    fn normalize_periodic(&mut self) -> bool {
        let p = self.left.len();
        if p != self.right.len() {
            return false;
        }
        let pi = p as i64;
        for k in 1..=pi {
            let i = self.origin - k;
            let from_left = self.left[((i - self.origin).rem_euclid(pi)) as usize];
            let from_right = self.right[((i - self.origin).rem_euclid(pi)) as usize];
            if from_left != from_right {
                return false;
            }
        }
        let rot = (self.origin.rem_euclid(pi)) as usize;
        // value at absolute cell j is right[(j − origin) mod p]; rotate so
        // index j reads right[j mod p] directly
        self.right.rotate_right(rot);
        self.left = self.right.clone();
        self.origin = 0;
        true
    }

    /// Empty core between genuinely different tails: the seam may still be
    /// ambiguous when the right pattern locally continues the left one. Slide
    /// it maximally to the right; a full lcm of matching cells would mean a
    /// globally periodic point, which `normalize_periodic` already took.
    fn slide_seam_right(&mut self) {
        let bound = self.left.len() * self.right.len();
        for _ in 0..bound {
            // cell at the seam is right[0]; the left pattern would put
            // left[0] there
            if self.right[0] != self.left[0] {
                return;
            }
            self.left.rotate_left(1);
            self.right.rotate_left(1);
            self.origin += 1;
        }
        debug_assert!(false, "seam slide did not terminate; tails denote one periodic point");
    }
}

/// Primitive root of a periodic word: the shortest `u` with `w = u^k`.
fn minimize_period<S: Symbol>(w: &[S]) -> Vec<S> {
    let n = w.len();
    if n <= 1 {
        return w.to_vec();
    }
    // KMP failure function gives the smallest period candidate.
    let mut fail = vec![0usize; n];
    for i in 1..n {
        let mut k = fail[i - 1];
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n % p == 0 {
        w[..p].to_vec()
    } else {
        w.to_vec()
    }
}

/// Distance value in the 2^(−i) metric, truncated at a search depth.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum CantorDistance {
    /// First disagreement at |j| = exponent; value 2^(−exponent).
    Separated { exponent: u32 },
    /// No disagreement within the search depth; value ≤ 2^(−max_depth),
    /// reported as 0.
    Indistinguishable { max_depth: u32 },
}

impl CantorDistance {
    pub fn as_f64(&self) -> f64 {
        match *self {
            CantorDistance::Separated { exponent } => 0.5f64.powi(exponent as i32),
            CantorDistance::Indistinguishable { .. } => 0.0,
        }
    }

    pub fn exponent(&self) -> Option<u32> {
        match *self {
            CantorDistance::Separated { exponent } => Some(exponent),
            CantorDistance::Indistinguishable { .. } => None,
        }
    }
}

impl std::fmt::Display for CantorDistance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            CantorDistance::Separated { exponent } => write!(f, "2^-{exponent}"),
            CantorDistance::Indistinguishable { max_depth } => {
                write!(f, "0 (<= 2^-{max_depth})")
            }
        }
    }
}

/// Least |j| ≤ max_depth with `x_j ≠ y_j`, as 2^(−|j|).
pub fn cantor_distance<S: Symbol>(
    x: &Configuration<S>,
    y: &Configuration<S>,
    max_depth: u32,
) -> CantorDistance {
    for d in 0..=max_depth {
        let j = d as i64;
        if x.get(j) != y.get(j) || (d > 0 && x.get(-j) != y.get(-j)) {
            return CantorDistance::Separated { exponent: d };
        }
    }
    CantorDistance::Indistinguishable { max_depth }
}
