//! File formats, the parallel experiment harness and report plumbing for the
//! `hamspan` command-line tool. The algorithms live in [`hamspan_core`].

pub mod io;
pub mod report;
pub mod sweep;

pub use hamspan_core as core;
