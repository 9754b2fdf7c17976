//! Sequential or data-parallel evaluation of independent sweep items.
//!
//! With the `parallel` feature disabled, [`Execution::Parallel`] quietly runs
//! sequentially. Output order always matches input order.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
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
    /// Maps `f` over `items`, preserving order.
    pub fn map<I, T, F>(self, items: Vec<I>, f: F) -> Vec<T>
    where
        I: Send,
        T: Send,
        F: Fn(I) -> T + Sync + Send,
    {
        match self {
            Execution::Sequential => items.into_iter().map(f).collect(),
            #[cfg(feature = "parallel")]
            Execution::Parallel => {
                use rayon::prelude::*;
                items.into_par_iter().map(f).collect()
            }
            #[cfg(not(feature = "parallel"))]
            Execution::Parallel => items.into_iter().map(f).collect(),
        }
    }

    /// True if every item satisfies `f`.
    pub fn all<I, F>(self, items: Vec<I>, f: F) -> bool
    where
        I: Send,
        F: Fn(I) -> bool + Sync + Send,
    {
        self.map(items, f).into_iter().all(|b| b)
    }
}
