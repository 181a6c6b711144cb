//! Data-parallel driving loops with a sequential fallback.
//!
//! With the default `parallel` feature the workload fans out over rayon;
//! without it the same folds run sequentially. Results must be merged with
//! commutative, associative operations so the outcome is independent of the
//! split (and of `--jobs`).

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution choice. `Auto` follows the crate feature; `Sequential` forces
/// the fallback path (kept for benchmarks comparing the two).
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Exec {
    Auto,
    Sequential,
}

/// Index-preserving parallel map.
pub(crate) fn map_collect<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(f).collect()
    }
}

/// Fold `0..count` into per-worker accumulators, then merge.
pub(crate) fn fold_reduce<A, Make, Fold, Merge>(
    exec: Exec,
    count: u64,
    make: Make,
    fold: Fold,
    merge: Merge,
) -> A
where
    A: Send,
    Make: Fn() -> A + Sync + Send,
    Fold: Fn(A, u64) -> A + Sync,
    Merge: Fn(A, A) -> A + Sync + Send,
{
    match exec {
        Exec::Sequential => {
            let _ = &merge;
            (0..count).fold(make(), fold)
        }
        Exec::Auto => {
            #[cfg(feature = "parallel")]
            {
                (0..count)
                    .into_par_iter()
                    .fold(&make, |acc, i| fold(acc, i))
                    .reduce(&make, merge)
            }
            #[cfg(not(feature = "parallel"))]
            {
                let _ = &merge;
                (0..count).fold(make(), fold)
            }
        }
    }
}
