//! Exact simulation and sensitivity analysis for a small family of one-sided
//! radius-1 cellular automata: a digit automaton whose blanks block all
//! right-to-left influence (`t1`), its skew product with a leftward arrow
//! transport layer (`t`), a three-letter involution (`t3`), and the stacked
//! product of the two (`ts`).
//!
//! Configurations are bi-infinite points with eventually spatially periodic
//! tails, stored in canonical form so equality is equality of points. On top
//! of exact stepping the crate provides orbit traces, eventual-period
//! certificates via suffix-state cycle detection, sensitivity time sets
//! computed by two independent methods (exhaustive ball enumeration and the
//! all-arrows extremal orbit), finite-horizon upper densities, and the
//! averaged-diameter certificate machinery, together with builders for the
//! named configurations these are applied to.
//!
//! The `parallel` feature (default) fans enumeration and batch checks out
//! over rayon; without it the same code runs sequentially and produces
//! identical results.

pub mod analysis;
pub mod config;
pub mod constructions;
pub mod engine;
pub mod format;
mod parallel;
pub mod rules;
pub mod sampling;
pub mod symbol;
pub mod verify;

pub use analysis::{
    ball_completions, ball_diameter_profile, diam_mean_certificate, sensitivity_set_arrow_extremal,
    sensitivity_set_bruteforce, upper_density_finite, AnalysisError, DiamMeanCertificate,
    SensitivityMethod, SensitivityReport,
};
pub use config::{cantor_distance, CantorDistance, ConfigError, Configuration, Window};
pub use engine::{
    column_trace, dependence_cone, detect_eventual_period, orbit, orbit_iter, step, trace_table,
    OrbitTrace, PeriodReport,
};
pub use format::ParseError;
pub use rules::{rule_t, rule_t1, rule_t3, rule_ts, LocalRule, RuleT, RuleT1, RuleT3, RuleTs};
pub use symbol::{A1Symbol, A2Symbol, A3Symbol, Arrowed, ProductSymbol, StackedSymbol, Symbol};
