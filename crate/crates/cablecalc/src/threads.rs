//! Worker-count resolution and order-preserving parallel map.
//!
//! The `CABLECALC_THREADS` environment variable caps the number of worker
//! threads; without it the machine's available parallelism is used. Results
//! are always merged back in input order, so output bytes are independent
//! of the worker count.

use crate::error::{CliError, Result};

/// Name of the environment variable capping worker count.
pub const THREADS_VAR: &str = "CABLECALC_THREADS";

/// Resolve the worker count: `CABLECALC_THREADS` when set (a positive
/// integer), otherwise the available parallelism.
pub fn resolve_thread_count() -> Result<usize> {
    match std::env::var(THREADS_VAR) {
        Ok(value) => match value.trim().parse::<usize>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => Err(CliError::Threads { value }),
        },
        Err(std::env::VarError::NotPresent) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
        Err(std::env::VarError::NotUnicode(raw)) => Err(CliError::Threads {
            value: raw.to_string_lossy().into_owned(),
        }),
    }
}

/// Apply `f` to every item, sharding contiguous chunks across at most
/// `workers` threads, and return the results in input order.
pub fn map_ordered<I, O, F>(items: Vec<I>, workers: usize, f: F) -> Vec<O>
where
    I: Send,
    O: Send,
    F: Fn(I) -> O + Sync,
{
    let workers = workers.clamp(1, items.len().max(1));
    if workers == 1 {
        return items.into_iter().map(f).collect();
    }
    let chunk_len = items.len().div_ceil(workers);
    let mut chunks: Vec<Vec<I>> = Vec::with_capacity(workers);
    let mut items = items;
    while !items.is_empty() {
        let tail = items.split_off(items.len().min(chunk_len));
        chunks.push(std::mem::replace(&mut items, tail));
    }
    let f = &f;
    let results: Vec<Vec<O>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| scope.spawn(move || chunk.into_iter().map(f).collect()))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    results.into_iter().flatten().collect()
}
