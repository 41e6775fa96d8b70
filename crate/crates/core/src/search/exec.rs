//! Sequential and data-parallel scanning of an index range.

#[cfg(feature = "parallel")]
use std::sync::atomic::{AtomicU64, Ordering};
#[cfg(feature = "parallel")]
use std::sync::Arc;

use super::SearchError;

/// Result of testing one index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Step {
    /// Not part of the enumeration (e.g. a non-canonical duplicate).
    Skip,
    Pass,
    Hit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Scan {
    /// Smallest index that returned [`Step::Hit`].
    pub first_hit: Option<u64>,
    /// Indices that returned `Pass` or `Hit`. Exact only when nothing was
    /// hit, since workers stop early once a smaller hit is known.
    pub counted: u64,
}

#[derive(Clone)]
enum Mode {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel(Option<Arc<rayon::ThreadPool>>),
}

/// Runs scans either on the calling thread or on a rayon pool. Both modes
/// report the same `first_hit` for the same predicate.
#[derive(Clone)]
pub struct Executor {
    mode: Mode,
}

#[cfg(feature = "parallel")]
const CHUNK: u64 = 2048;

impl Default for Executor {
    fn default() -> Self {
        Executor::parallel()
    }
}

impl std::fmt::Debug for Executor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self.mode {
            Mode::Sequential => "Executor::Sequential",
            #[cfg(feature = "parallel")]
            Mode::Parallel(_) => "Executor::Parallel",
        })
    }
}

impl Executor {
    pub fn sequential() -> Self {
        Executor {
            mode: Mode::Sequential,
        }
    }

    /// Rayon's global pool, or sequential when built without `parallel`.
    pub fn parallel() -> Self {
        #[cfg(feature = "parallel")]
        {
            Executor {
                mode: Mode::Parallel(None),
            }
        }
        #[cfg(not(feature = "parallel"))]
        {
            Executor::sequential()
        }
    }

    /// A dedicated pool with `jobs` threads; one job means sequential.
    pub fn with_jobs(jobs: usize) -> Result<Self, SearchError> {
        if jobs == 0 {
            return Err(SearchError::Jobs("--jobs must be at least 1".into()));
        }
        if jobs == 1 {
            return Ok(Executor::sequential());
        }
        #[cfg(feature = "parallel")]
        {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| SearchError::Jobs(e.to_string()))?;
            Ok(Executor {
                mode: Mode::Parallel(Some(Arc::new(pool))),
            })
        }
        #[cfg(not(feature = "parallel"))]
        {
            Ok(Executor::sequential())
        }
    }

    pub fn is_parallel(&self) -> bool {
        !matches!(self.mode, Mode::Sequential)
    }

    /// Tests indices `0..total` and returns the smallest hit. `init` builds
    /// per-worker state that `test` may reuse between indices.
    pub fn scan<S, I, F>(&self, total: u64, init: I, test: F) -> Scan
    where
        I: Fn() -> S + Sync + Send,
        F: Fn(&mut S, u64) -> Step + Sync + Send,
    {
        match &self.mode {
            Mode::Sequential => scan_sequential(total, init, test),
            #[cfg(feature = "parallel")]
            Mode::Parallel(None) => scan_parallel(total, init, test),
            #[cfg(feature = "parallel")]
            Mode::Parallel(Some(pool)) => pool.install(|| scan_parallel(total, init, test)),
        }
    }
}

fn scan_sequential<S, I, F>(total: u64, init: I, test: F) -> Scan
where
    I: Fn() -> S,
    F: Fn(&mut S, u64) -> Step,
{
    let mut state = init();
    let mut counted = 0;
    for i in 0..total {
        match test(&mut state, i) {
            Step::Skip => {}
            Step::Pass => counted += 1,
            Step::Hit => {
                return Scan {
                    first_hit: Some(i),
                    counted: counted + 1,
                }
            }
        }
    }
    Scan {
        first_hit: None,
        counted,
    }
}

#[cfg(feature = "parallel")]
fn scan_parallel<S, I, F>(total: u64, init: I, test: F) -> Scan
where
    I: Fn() -> S + Sync + Send,
    F: Fn(&mut S, u64) -> Step + Sync + Send,
{
    use rayon::prelude::*;

    let best = AtomicU64::new(u64::MAX);
    let chunks = total.div_ceil(CHUNK);
    let counted = (0..chunks)
        .into_par_iter()
        .map_init(init, |state, c| {
            let start = c * CHUNK;
            let end = (start + CHUNK).min(total);
            let mut counted = 0;
            for i in start..end {
                if i >= best.load(Ordering::Relaxed) {
                    break;
                }
                match test(state, i) {
                    Step::Skip => {}
                    Step::Pass => counted += 1,
                    Step::Hit => {
                        counted += 1;
                        best.fetch_min(i, Ordering::Relaxed);
                        break;
                    }
                }
            }
            counted
        })
        .sum();
    let best = best.into_inner();
    Scan {
        first_hit: (best != u64::MAX).then_some(best),
        counted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hits_at(targets: &'static [u64]) -> impl Fn(&mut (), u64) -> Step + Sync + Send {
        move |_, i| {
            if targets.contains(&i) {
                Step::Hit
            } else if i % 3 == 0 {
                Step::Skip
            } else {
                Step::Pass
            }
        }
    }

    #[test]
    fn modes_agree() {
        let execs = [
            Executor::sequential(),
            Executor::parallel(),
            Executor::with_jobs(4).unwrap(),
        ];
        for targets in [&[][..], &[5], &[99_999, 7_000], &[0]] {
            let scans: Vec<Scan> = execs
                .iter()
                .map(|e| e.scan(100_000, || (), hits_at(targets)))
                .collect();
            for s in &scans {
                assert_eq!(s.first_hit, targets.iter().min().copied());
            }
            if targets.is_empty() {
                assert_eq!(scans[0].counted, 100_000 - 33_334);
                assert!(scans.iter().all(|s| s.counted == scans[0].counted));
            }
        }
    }

    #[test]
    fn zero_jobs_rejected() {
        assert!(Executor::with_jobs(0).is_err());
    }
}
