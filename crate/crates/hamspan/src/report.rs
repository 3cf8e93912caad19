//! JSON envelopes shared by every report-producing command.
//!
//! Each document has three keys, in this order: `config` (the resolved
//! inputs, seeds included), `metadata` (tool and RNG identification) and
//! `result`. No key depends on the clock except fields named `wall_ms`.

use std::io::{self, Write};

use hamspan_core::rng::{RNG_ALGORITHM, SEED_DERIVATION};
use serde::Serialize;

/// Master seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_601;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub rng_algorithm: &'static str,
    pub seed_derivation: &'static str,
}

impl Default for Metadata {
    fn default() -> Self {
        Self {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            rng_algorithm: RNG_ALGORITHM,
            seed_derivation: SEED_DERIVATION,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report<C: Serialize, R: Serialize> {
    pub config: C,
    pub metadata: Metadata,
    pub result: R,
}

impl<C: Serialize, R: Serialize> Report<C, R> {
    pub fn new(config: C, result: R) -> Self {
        Self { config, metadata: Metadata::default(), result }
    }

    /// One line of JSON.
    pub fn write(&self, mut out: impl Write) -> io::Result<()> {
        serde_json::to_writer(&mut out, self)?;
        writeln!(out)?;
        out.flush()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}
