//! Data-parallel helpers. With the `parallel` feature these dispatch to
//! rayon; without it, or under [`Exec::Sequential`], they run in order on
//! the calling thread. Results are always returned in input order.

/// Execution strategy for batch work.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Exec {
    Sequential,
    #[default]
    Parallel,
}

impl Exec {
    /// True when work will actually be spread over a thread pool.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Exec::Parallel
    }
}

/// `items.map(f)`, order preserved.
pub fn map<T, R, F>(exec: Exec, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(f).collect();
    }
    let _ = exec;
    items.iter().map(f).collect()
}

/// `(0..n).map(f)`, order preserved.
pub fn map_range<R, F>(exec: Exec, n: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return (0..n).into_par_iter().map(f).collect();
    }
    let _ = exec;
    (0..n).map(f).collect()
}

/// Folds `f(item)` over `items` with an associative `combine`.
pub fn map_reduce<T, R, F, C>(exec: Exec, items: &[T], identity: impl Fn() -> R + Sync + Send, f: F, combine: C) -> R
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
    C: Fn(R, R) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if exec.is_parallel() {
        use rayon::prelude::*;
        return items.par_iter().map(&f).reduce(&identity, &combine);
    }
    let _ = exec;
    items.iter().map(f).fold(identity(), combine)
}
