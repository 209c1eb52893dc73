//! Deterministic chunked parallel reduction.
//!
//! A search space `0..total` is split into contiguous chunks whose
//! boundaries depend only on `total`. Each chunk is folded sequentially and
//! chunk tallies are merged in index order, so any worker count gives the
//! same result.

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Default ceiling on exhaustive search spaces.
pub const DEFAULT_EXHAUSTIVE_CEILING: u64 = 1 << 26;

const TARGET_CHUNKS: u64 = 512;
const MIN_CHUNK: u64 = 256;

fn chunk_size(total: u64) -> u64 {
    (total / TARGET_CHUNKS).max(MIN_CHUNK)
}

/// Folds every index of `0..total` with per-chunk accumulators.
pub fn fold_indices<A, I, F, M>(total: u64, init: I, fold: F, merge: M) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, u64) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let size = chunk_size(total);
    let chunks = total.div_ceil(size);
    (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut acc = init();
            for i in c * size..((c + 1) * size).min(total) {
                fold(&mut acc, i);
            }
            acc
        })
        .reduce(&init, &merge)
}

/// Counts indices satisfying `pred`.
pub fn count_indices<F>(total: u64, pred: F) -> u64
where
    F: Fn(u64) -> bool + Sync + Send,
{
    fold_indices(total, || 0u64, |acc, i| *acc += pred(i) as u64, |a, b| a + b)
}

/// Fallible variant: the error from the lowest failing index wins.
pub fn try_fold_indices<A, I, F, M>(total: u64, init: I, fold: F, merge: M) -> Result<A>
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, u64) -> Result<()> + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    fold_indices(
        total,
        || Ok(init()),
        |acc: &mut Result<A>, i| {
            if let Ok(a) = acc {
                if let Err(e) = fold(a, i) {
                    *acc = Err(e);
                }
            }
        },
        |a, b| match (a, b) {
            (Ok(a), Ok(b)) => Ok(merge(a, b)),
            (Err(e), _) | (_, Err(e)) => Err(e),
        },
    )
}

/// Rejects search spaces above the exhaustive ceiling.
pub fn check_ceiling(what: &str, size: u128, ceiling: u64) -> Result<u64> {
    if size > ceiling as u128 {
        return Err(Error::CeilingExceeded { what: what.to_string(), size, ceiling });
    }
    Ok(size as u64)
}

/// `base^exp` as `u128`, saturating.
pub fn space_size(base: u64, exp: u32) -> u128 {
    (base as u128).checked_pow(exp).unwrap_or(u128::MAX)
}

/// Runs `f` on a dedicated pool with `workers` threads (all cores if `None`).
pub fn with_workers<R: Send>(workers: Option<usize>, f: impl FnOnce() -> R + Send) -> Result<R> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w.max(1));
    }
    let pool = builder.build().map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_are_worker_independent() {
        let pred = |i: u64| i % 7 == 3 || i.count_ones() == 5;
        let serial = (0..100_000u64).filter(|&i| pred(i)).count() as u64;
        for w in [1, 2, 8] {
            assert_eq!(with_workers(Some(w), || count_indices(100_000, pred)).unwrap(), serial);
        }
    }

    #[test]
    fn ordered_merge() {
        let v = with_workers(Some(4), || {
            fold_indices(2000, Vec::new, |acc: &mut Vec<u64>, i| acc.push(i), |mut a, b| {
                a.extend(b);
                a
            })
        })
        .unwrap();
        assert_eq!(v, (0..2000).collect::<Vec<_>>());
    }

    #[test]
    fn first_error_wins() {
        let r: Result<u64> = try_fold_indices(
            10_000,
            || 0,
            |acc, i| {
                if i == 4321 || i == 9000 {
                    Err(Error::Internal(format!("{i}")))
                } else {
                    *acc += 1;
                    Ok(())
                }
            },
            |a, b| a + b,
        );
        assert_eq!(r, Err(Error::Internal("4321".into())));
        assert!(check_ceiling("x", 10, 9).is_err());
        assert_eq!(check_ceiling("x", 9, 9).unwrap(), 9);
    }
}
