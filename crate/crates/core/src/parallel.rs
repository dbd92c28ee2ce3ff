//! Partition plans and worker pools for the exhaustive searches.
//!
//! A search over `total` candidates is split into contiguous index ranges by a
//! [`PartitionPlan`]. [`Workers`] maps a function over those ranges and folds
//! the per-range results in range order, so the outcome never depends on the
//! number of threads. The library never creates threads on its own: callers
//! either use [`Workers::sequential`] or hand over a pool sized by them.

use std::ops::Range;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Disjoint, ordered, covering ranges of `0..total`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionPlan {
    total: u64,
    ranges: Vec<Range<u64>>,
}

impl PartitionPlan {
    /// Splits `0..total` into at most `parts` nearly equal ranges.
    pub fn new(total: u64, parts: usize) -> Self {
        let parts = (parts.max(1) as u64).min(total.max(1));
        let base = total / parts;
        let extra = total % parts;
        let mut ranges = Vec::with_capacity(parts as usize);
        let mut start = 0;
        for i in 0..parts {
            let len = base + u64::from(i < extra);
            ranges.push(start..start + len);
            start += len;
        }
        PartitionPlan { total, ranges }
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn ranges(&self) -> &[Range<u64>] {
        &self.ranges
    }
}

/// Executes partitioned work, sequentially or on a caller-provided pool.
#[derive(Debug)]
pub struct Workers {
    pool: Option<rayon::ThreadPool>,
    jobs: usize,
}

impl Default for Workers {
    fn default() -> Self {
        Workers::sequential()
    }
}

impl Workers {
    pub fn sequential() -> Self {
        Workers {
            pool: None,
            jobs: 1,
        }
    }

    /// A dedicated pool with `jobs` threads; `jobs <= 1` runs sequentially.
    pub fn new(jobs: usize) -> Result<Self> {
        if jobs <= 1 {
            return Ok(Workers::sequential());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| Error::InvalidInput(format!("cannot build worker pool: {e}")))?;
        Ok(Workers {
            pool: Some(pool),
            jobs,
        })
    }

    pub fn jobs(&self) -> usize {
        self.jobs
    }

    /// A plan with a few ranges per worker.
    pub fn plan(&self, total: u64) -> PartitionPlan {
        PartitionPlan::new(total, self.jobs * 8)
    }

    /// Runs `map` on every range of `plan` and folds the results in range order.
    pub fn map_reduce<T, M, R>(&self, plan: &PartitionPlan, map: M, init: T, reduce: R) -> T
    where
        T: Send,
        M: Fn(Range<u64>) -> T + Sync,
        R: Fn(T, T) -> T,
    {
        let parts: Vec<T> = match &self.pool {
            None => plan.ranges().iter().cloned().map(&map).collect(),
            Some(pool) => pool.install(|| plan.ranges().par_iter().cloned().map(&map).collect()),
        };
        parts.into_iter().fold(init, reduce)
    }

    /// Fallible version of [`Workers::map_reduce`]; the first error in range order wins.
    pub fn try_map_reduce<T, M, R>(
        &self,
        plan: &PartitionPlan,
        map: M,
        init: T,
        reduce: R,
    ) -> Result<T>
    where
        T: Send,
        M: Fn(Range<u64>) -> Result<T> + Sync,
        R: Fn(T, T) -> T,
    {
        let parts: Vec<Result<T>> = match &self.pool {
            None => plan.ranges().iter().cloned().map(&map).collect(),
            Some(pool) => pool.install(|| plan.ranges().par_iter().cloned().map(&map).collect()),
        };
        let mut acc = init;
        for part in parts {
            acc = reduce(acc, part?);
        }
        Ok(acc)
    }
}
