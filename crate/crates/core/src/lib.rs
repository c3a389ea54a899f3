//! Extremal numbers and rainbow (anti-Ramsey) numbers for matchings in
//! complete bipartite graphs.
//!
//! The crate is split into:
//!
//! - [`bipartite`]: graphs with parts `A` (size `m`) and `B` (size `n`),
//!   maximum matchings and deficiency witnesses.
//! - [`extremal`]: `ext(m, n, kK2) = m(k-1)`, the extremal graph
//!   `K_{m,k-1}` and its uniqueness check.
//! - [`coloring`]: edge-colorings of `K_{m,n}`, closed-form rainbow numbers,
//!   the extremal coloring, an exact rainbow-matching finder and the special
//!   graph recognizers.
//! - [`oracle`]: brute-force `f(K_{m,n}, kK2)` over all set partitions of
//!   the edge set.
//! - [`cli`]: the `rainbow-lab` command line front end.

pub mod bipartite;
pub mod cli;
pub mod coloring;
mod error;
pub mod extremal;
pub mod oracle;

pub use bipartite::{BipartiteGraph, DeficiencyWitness, Matching};
pub use coloring::{ColoredCompleteBipartite, RainbowCertificate, RbRegime, Regime};
pub use error::{Error, Result};
pub use extremal::ExtremalReport;
pub use oracle::{OracleResult, PartitionEnumerator};
