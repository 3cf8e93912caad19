//! Exact and statistical tools for deciding whether the cycle space of a
//! graph over GF(2) is spanned by its Hamilton circuits.
//!
//! The crate is `no_std` (it needs `alloc`). File formats, the parallel
//! Monte Carlo harness and the command line live in the `hamspan` crate.
//!
//! Module map:
//!
//! - [`graph`]: simple undirected graphs with a canonical lexicographic edge
//!   indexing, the generator families and structural predicates.
//! - [`gf2`]: packed GF(2) edge vectors and an incremental reduced basis.
//! - [`cycle_space`]: fundamental cycle bases, cycle membership and quotient
//!   dimensions.
//! - [`hamilton`]: pruned enumeration of Hamilton circuits, paths and
//!   fixed-length circuits, and the Hamilton-generation classifier.
//! - [`verify`]: reproduction of the `K^{4^,3}` certificate, the small cases
//!   of the `K^{s^,s-1}` family and degree-2 vertex deletion.
//! - [`experiments`]: threshold formulas, Wilson intervals, the predicate
//!   registry and per-trial evaluation over `G(n, p)`.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod cycle_space;
pub mod experiments;
pub mod gf2;
pub mod graph;
pub mod hamilton;
pub mod rng;
pub mod verify;

pub use cycle_space::{fundamental_cycle_basis, is_cycle, quotient_dim, CycleBasis};
pub use gf2::{rank_of, EdgeVector, Gf2Basis, Gf2Error};
pub use graph::{Graph, GraphError, Structure};
pub use hamilton::{hamilton_generated_status, HamKind, HamStatus, SearchLimits};
