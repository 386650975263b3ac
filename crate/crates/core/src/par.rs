//! Data-parallel map helpers. With the `parallel` feature (the default)
//! these fan out over rayon; without it they run on the calling thread
//! with identical signatures, so downstream code compiles either way.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Whether this build fans work out over a thread pool.
pub const fn parallelism_enabled() -> bool {
    cfg!(feature = "parallel")
}

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    T: Send,
    R: Send,
    F: Fn(T) -> R + Sync + Send,
{
    items.into_iter().map(f).collect()
}

/// Sequential twin of [`map`], available in every build; benchmarks use
/// it as the baseline against the parallel path.
pub fn map_seq<T, R, F>(items: Vec<T>, f: F) -> Vec<R>
where
    F: Fn(T) -> R,
{
    items.into_iter().map(f).collect()
}

/// Runs `f` inside a pool of `jobs` threads when a count is given and the
/// `parallel` feature is on; otherwise just calls it.
#[cfg(feature = "parallel")]
pub fn with_thread_count<R: Send>(jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    match jobs {
        Some(jobs) if jobs > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool construction")
            .install(f),
        _ => f(),
    }
}

#[cfg(not(feature = "parallel"))]
pub fn with_thread_count<R: Send>(_jobs: Option<usize>, f: impl FnOnce() -> R + Send) -> R {
    f()
}
