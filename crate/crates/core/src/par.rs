//! Range partitioning over worker threads.
//!
//! With the `parallel` feature the chunks of a range are folded on a rayon
//! pool; without it, or with a single worker, the same chunks are folded in
//! order on the calling thread. Both paths visit identical chunk boundaries.

use std::ops::Range;

/// Worker configuration for the enumeration kernels.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Exec {
    /// `0` selects the rayon default (all available cores).
    threads: usize,
}

impl Default for Exec {
    fn default() -> Self {
        Exec::auto()
    }
}

impl Exec {
    pub const fn sequential() -> Self {
        Exec { threads: 1 }
    }

    pub const fn auto() -> Self {
        Exec { threads: 0 }
    }

    pub fn with_threads(threads: usize) -> Self {
        Exec { threads }
    }

    pub fn threads(self) -> usize {
        self.threads
    }

    pub fn is_sequential(self) -> bool {
        self.threads == 1 || !cfg!(feature = "parallel")
    }

    /// Splits `range` into chunks, maps each with `work` and combines the
    /// partial results with `merge`.
    pub fn map_reduce<T, W, M>(self, range: Range<u64>, work: W, merge: M) -> T
    where
        T: Send + Default,
        W: Fn(Range<u64>) -> T + Sync + Send,
        M: Fn(T, T) -> T + Sync + Send,
    {
        let chunks = chunk_bounds(range, 4096);
        #[cfg(feature = "parallel")]
        if !self.is_sequential() {
            use rayon::prelude::*;
            let run = || chunks.into_par_iter().map(&work).reduce(T::default, &merge);
            if self.threads == 0 {
                return run();
            }
            let pool = rayon::ThreadPoolBuilder::new().num_threads(self.threads).build().expect("thread pool");
            return pool.install(run);
        }
        chunks.into_iter().map(work).fold(T::default(), merge)
    }
}

fn chunk_bounds(range: Range<u64>, target_chunks: u64) -> Vec<Range<u64>> {
    let len = range.end.saturating_sub(range.start);
    if len == 0 {
        return Vec::new();
    }
    let size = len.div_ceil(target_chunks).max(256);
    let mut out = Vec::new();
    let mut lo = range.start;
    while lo < range.end {
        let hi = (lo + size).min(range.end);
        out.push(lo..hi);
        lo = hi;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunks_cover_range() {
        for (lo, hi) in [(0, 0), (0, 1), (3, 1000), (0, 1 << 20)] {
            let ch = chunk_bounds(lo..hi, 64);
            let total: u64 = ch.iter().map(|r| r.end - r.start).sum();
            assert_eq!(total, hi - lo);
            assert!(ch.windows(2).all(|w| w[0].end == w[1].start));
        }
    }

    #[test]
    fn sequential_and_parallel_agree() {
        let sum = |ex: Exec| ex.map_reduce(0..100_000, |r| r.map(|x| x * x % 7).sum::<u64>(), |a, b| a + b);
        let expect: u64 = (0..100_000u64).map(|x| x * x % 7).sum();
        assert_eq!(sum(Exec::sequential()), expect);
        assert_eq!(sum(Exec::auto()), expect);
        assert_eq!(sum(Exec::with_threads(3)), expect);
    }
}
