//! Choice between sequential and data-parallel evaluation of index ranges.
//!
//! Results are always returned in index order, so both strategies produce
//! identical output. Without the `parallel` feature, [`Execution::Parallel`]
//! runs sequentially.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

impl Execution {
    /// `f(0), f(1), ..., f(len - 1)` collected in order.
    pub fn map_range<T, F>(self, len: usize, f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(usize) -> T + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().map(f).collect(),
            _ => (0..len).map(f).collect(),
        }
    }

    /// The `Some` with the lowest index, regardless of scheduling.
    pub fn find_map_first<T, F>(self, len: usize, f: F) -> Option<T>
    where
        T: Send,
        F: Fn(usize) -> Option<T> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => (0..len).into_par_iter().find_map_first(f),
            _ => (0..len).find_map(f),
        }
    }

    /// Runs `f` over the range and returns the first error by index.
    pub fn try_map_range<T, E, F>(self, len: usize, f: F) -> Result<Vec<T>, E>
    where
        T: Send,
        E: Send,
        F: Fn(usize) -> Result<T, E> + Sync + Send,
    {
        match self {
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                let results: Vec<Result<T, E>> = (0..len).into_par_iter().map(f).collect();
                results.into_iter().collect()
            }
            _ => (0..len).map(f).collect(),
        }
    }
}
