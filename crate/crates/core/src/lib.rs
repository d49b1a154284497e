//! Finite additive 2-bases.
//!
//! Exact sumset arithmetic ([`intset`]), elementary segments and
//! generalized Mrose bases ([`segments`]), the abstract square coverage
//! model ([`coverage`]), placement search ([`search`]), small extremal
//! values `n(k)` ([`extremal`]) and the command-line layer ([`io`], [`cli`]).
//!
//! Sizes count the zero element: `k = |A|` with `0 ∈ A`.

pub mod cli;
pub mod coverage;
pub mod error;
pub mod extremal;
pub mod intset;
pub mod io;
pub mod search;
pub mod segments;

pub use coverage::{counting_bound, covered_set, CoverageResult, Placement};
pub use error::{Error, Result};
pub use intset::{make_ap, BasisReport, IntSet, Rational};
pub use segments::{build_basis, build_segment, simple_basis, SegmentKind};

/// Runs `f` on a pool of `threads` workers, or on the calling thread where
/// threads are unavailable (wasm32). Results never depend on the pool.
pub(crate) fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
