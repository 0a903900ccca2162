//! Deterministic block execution.
//!
//! Work is split into fixed blocks whose boundaries do not depend on the
//! thread count; block partials are combined in block order. The parallel
//! and sequential paths therefore produce bit-identical results.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Samples per block for Monte Carlo loops.
pub const MC_BLOCK: u64 = 4096;

/// Map block indices `0..n_blocks` to partials, in parallel when the
/// `parallel` feature is enabled. Output order is always block order.
pub fn map_blocks<T, F>(n_blocks: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..n_blocks).into_par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n_blocks).map(f).collect()
    }
}

/// Sequential twin of [`map_blocks`]; always runs on the calling thread.
pub fn map_blocks_seq<T, F>(n_blocks: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T,
{
    (0..n_blocks).map(f).collect()
}

/// Neumaier-compensated accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct Accumulator {
    sum: f64,
    comp: f64,
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, v: f64) {
        let t = self.sum + v;
        if self.sum.abs() >= v.abs() {
            self.comp += (self.sum - t) + v;
        } else {
            self.comp += (v - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Compensated sum of a slice in index order.
pub fn compensated_sum(values: &[f64]) -> f64 {
    let mut acc = Accumulator::new();
    for &v in values {
        acc.add(v);
    }
    acc.total()
}
