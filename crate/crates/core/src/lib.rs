//! Grundy (First-Fit) chromatic number of graphs.
//!
//! * [`block`]: exact Γ for block graphs (and so trees) by list assignment,
//!   and the bounds Γ(G) ≤ Γ(G↑𝓑) ≤ (β−1)Δ̃+1.
//! * [`girth`]: exact Γ when the girth is at least `2Δ₂+1`, the decision
//!   `Γ ≥ k` for `k ≤ (g+1)/2`, and the resulting approximation.
//! * [`oracle`]: First-Fit, validity checks and exhaustive Γ for small graphs.
//! * [`report`]: structural summaries and method routing shared by the CLI
//!   and the Python bindings.

pub mod block;
pub mod error;
pub mod generators;
pub mod girth;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod report;
mod witness;

pub use error::{GrundyError, Result};
pub use graph::{Girth, Graph, Vertex};
pub use oracle::GrundyColoring;

use rayon::prelude::*;

/// Execution knobs for the per-root and per-center drivers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Worker threads; `1` runs inline.
    pub threads: usize,
    /// Skip roots that provably cannot beat the current answer. Never
    /// changes results.
    pub pruning: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { threads: 1, pruning: true }
    }
}

impl SolveOptions {
    pub fn with_threads(threads: usize) -> Self {
        SolveOptions { threads: threads.max(1), ..Default::default() }
    }

    pub(crate) fn map<T, R, F>(&self, items: &[T], f: F) -> Vec<R>
    where
        T: Sync,
        R: Send,
        F: Fn(&T) -> R + Sync + Send,
    {
        if self.threads <= 1 || items.len() <= 1 {
            return items.iter().map(f).collect();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.threads).build() {
            Ok(pool) => pool.install(|| items.par_iter().map(&f).collect()),
            Err(_) => items.iter().map(f).collect(),
        }
    }
}
