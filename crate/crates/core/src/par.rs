//! Data-parallel helpers. With the `parallel` feature these dispatch to
//! rayon; without it they are plain sequential loops with the same results.
//!
//! Work lists shorter than [`MIN_PARALLEL_LEN`] always run sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const MIN_PARALLEL_LEN: usize = 16;

/// `(0..n).map(f).collect()`, preserving order.
pub fn map_range<R, F>(n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if n >= MIN_PARALLEL_LEN {
        return (0..n).into_par_iter().map(f).collect();
    }
    (0..n).map(f).collect()
}

/// `items.iter().map(f).collect()`, preserving order.
pub fn map_slice<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if items.len() >= MIN_PARALLEL_LEN {
        return items.par_iter().map(f).collect();
    }
    items.iter().map(f).collect()
}

pub fn for_each_mut<T, F>(items: &mut [T], f: F)
where
    T: Send,
    F: Fn(&mut T) + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if items.len() >= MIN_PARALLEL_LEN {
        items.par_iter_mut().for_each(f);
        return;
    }
    items.iter_mut().for_each(f);
}

/// First `Some` produced by `f` over `0..n`, in index order.
pub fn find_map_first<R, F>(n: usize, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if n >= MIN_PARALLEL_LEN {
        return (0..n).into_par_iter().find_map_first(f);
    }
    (0..n).find_map(f)
}

/// Runs `f` on a single worker thread so callers can compare against the
/// parallel path. Without the `parallel` feature this just calls `f`.
pub fn sequentially<R: Send, F: FnOnce() -> R + Send>(f: F) -> R {
    #[cfg(feature = "parallel")]
    {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .expect("single-thread pool");
        pool.install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        f()
    }
}
