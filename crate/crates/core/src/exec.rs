//! Data-parallel helpers with a fixed reduction order.
//!
//! Floating-point sums depend on association order, so naive parallel
//! reduction breaks bit-reproducibility. Every helper here produces results
//! in a deterministic order that is independent of thread count: items (or
//! fixed-size chunks) are mapped in parallel, collected by index, and any
//! cross-chunk combination is left to the caller to run sequentially in
//! chunk order. With the `parallel` feature disabled the same helpers run
//! sequentially and produce identical bits.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Execution strategy for a kernel. `Auto` resolves to parallel when the
/// `parallel` feature is enabled, sequential otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Auto,
    Parallel,
    Sequential,
}

impl Default for Strategy {
    fn default() -> Self {
        Strategy::Auto
    }
}

impl Strategy {
    #[cfg(feature = "parallel")]
    fn parallel(self) -> bool {
        !matches!(self, Strategy::Sequential)
    }
}

/// Chunk length used by gradient and loss reductions. Fixed (not derived
/// from thread count) so the reduction tree never changes shape.
pub const REDUCE_CHUNK: usize = 32;

/// Maps `f` over `0..n`, collecting results in index order.
pub fn map_range<U: Send>(n: usize, f: impl Fn(usize) -> U + Sync) -> Vec<U> {
    map_range_with(Strategy::Auto, n, f)
}

pub fn map_range_with<U: Send>(
    strategy: Strategy,
    n: usize,
    f: impl Fn(usize) -> U + Sync,
) -> Vec<U> {
    #[cfg(feature = "parallel")]
    if strategy.parallel() {
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = strategy;
    (0..n).map(f).collect()
}

/// Maps `f` over items with their index, collecting in input order.
pub fn map_indexed<T: Sync, U: Send>(
    items: &[T],
    f: impl Fn(usize, &T) -> U + Sync,
) -> Vec<U> {
    map_indexed_with(Strategy::Auto, items, f)
}

pub fn map_indexed_with<T: Sync, U: Send>(
    strategy: Strategy,
    items: &[T],
    f: impl Fn(usize, &T) -> U + Sync,
) -> Vec<U> {
    #[cfg(feature = "parallel")]
    if strategy.parallel() {
        return items.par_iter().enumerate().map(|(i, t)| f(i, t)).collect();
    }
    let _ = strategy;
    items.iter().enumerate().map(|(i, t)| f(i, t)).collect()
}

/// Maps `f` over fixed-length chunks of `items`, collecting per-chunk
/// results in chunk order. Callers combine the chunk results sequentially,
/// which pins the overall reduction order regardless of scheduling.
pub fn chunk_map<T: Sync, U: Send>(
    items: &[T],
    chunk_len: usize,
    f: impl Fn(&[T]) -> U + Sync,
) -> Vec<U> {
    chunk_map_with(Strategy::Auto, items, chunk_len, f)
}

pub fn chunk_map_with<T: Sync, U: Send>(
    strategy: Strategy,
    items: &[T],
    chunk_len: usize,
    f: impl Fn(&[T]) -> U + Sync,
) -> Vec<U> {
    let chunk_len = chunk_len.max(1);
    #[cfg(feature = "parallel")]
    if strategy.parallel() {
        return items.par_chunks(chunk_len).map(f).collect();
    }
    let _ = strategy;
    items.chunks(chunk_len).map(f).collect()
}

/// Sums `f(i)` over `0..n` by fixed-size chunks: chunk-internal sums run in
/// index order, cross-chunk accumulation runs in chunk order.
pub fn sum_range(n: usize, f: impl Fn(usize) -> f64 + Sync) -> f64 {
    sum_range_with(Strategy::Auto, n, f)
}

pub fn sum_range_with(strategy: Strategy, n: usize, f: impl Fn(usize) -> f64 + Sync) -> f64 {
    let indices: Vec<usize> = (0..n).collect();
    chunk_map_with(strategy, &indices, REDUCE_CHUNK, |chunk| {
        chunk.iter().map(|&i| f(i)).sum::<f64>()
    })
    .into_iter()
    .sum()
}
