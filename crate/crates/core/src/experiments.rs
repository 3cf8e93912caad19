//! Monte Carlo primitives over `G(n, p)`: edge-probability formulas, limit
//! values of the minimum-degree law, Wilson intervals, the registry of
//! graph predicates and single-trial evaluation.
//!
//! The parallel driver and CSV output live in the `hamspan` crate; everything
//! here is deterministic given a [`TrialConfig`] and a trial index.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::cycle_space::cycle_space_dim;
use crate::graph::{Graph, GraphError};
use crate::hamilton::{
    hamilton_generated_status, is_hamilton_connected, is_hamiltonian, near_hamilton_span_full, HamiltonError,
    SearchLimits,
};
use crate::rng::derive_seed;

/// Two-sided 95% standard normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

/// Default vertex limit for exact Hamilton predicates inside experiments.
pub const DEFAULT_EXACT_VERTICES: usize = 16;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExperimentError {
    #[error("log log n is undefined or negative for n = {0}; need n >= 3")]
    NTooSmall(usize),
    #[error("unknown property `{0}`")]
    UnknownProperty(String),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("edge probability {0} is not a number in [0, 1]")]
    BadProbability(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn factorial(k: u32) -> f64 {
    (1..=k).fold(1.0, |acc, i| acc * f64::from(i))
}

/// `(ln n + k ln ln n + c) / n`, clamped to `[0, 1]`; the flag reports
/// whether clamping happened.
pub fn threshold_p(n: usize, k: u32, c: f64) -> Result<(f64, bool), ExperimentError> {
    if n < 3 {
        return Err(ExperimentError::NTooSmall(n));
    }
    let nf = n as f64;
    let ln = libm::log(nf);
    let raw = (ln + f64::from(k) * libm::log(ln) + c) / nf;
    Ok(clamp_unit(raw))
}

/// `n^(-1/2 + eps)`, clamped to `[0, 1]`.
pub fn power_p(n: usize, eps: f64) -> (f64, bool) {
    clamp_unit(libm::pow(n as f64, -0.5 + eps))
}

fn clamp_unit(raw: f64) -> (f64, bool) {
    if raw > 1.0 {
        (1.0, true)
    } else if raw < 0.0 {
        (0.0, true)
    } else {
        (raw, false)
    }
}

/// Limit of `P[min degree = k + 1]` at `p = (ln n + k ln ln n + c) / n`,
/// taken as `exp(-exp(-c / k!))`.
pub fn limit_min_degree(k: u32, c: f64) -> f64 {
    libm::exp(-libm::exp(-c / factorial(k)))
}

/// 95% Wilson score interval for `successes` out of `trials`.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    wilson_interval_z(successes, trials, Z_95)
}

pub fn wilson_interval_z(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z / denom * libm::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
    ((center - half).clamp(0.0, p), (center + half).clamp(p, 1.0))
}

/// How the edge probability of a trial is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PSpec {
    Fixed(f64),
    /// `(ln n + k ln ln n + c) / n`.
    MinDegree { k: u32, c: f64 },
    /// `n^(-1/2 + eps)`.
    Power { eps: f64 },
}

impl PSpec {
    /// The probability for `n` and whether it was clamped into `[0, 1]`.
    pub fn resolve(&self, n: usize) -> Result<(f64, bool), ExperimentError> {
        match *self {
            PSpec::Fixed(p) if (0.0..=1.0).contains(&p) => Ok((p, false)),
            PSpec::Fixed(p) => Err(ExperimentError::BadProbability(p)),
            PSpec::MinDegree { k, c } => threshold_p(n, k, c),
            PSpec::Power { eps } => Ok(power_p(n, eps)),
        }
    }
}

/// The `G(n, p)` sampler used for trials.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Sampler {
    /// One variate per pair, [`Graph::gnp`].
    #[default]
    PerPair,
    /// Geometric skipping, [`Graph::gnp_geometric`].
    Geometric,
}

impl Sampler {
    pub fn sample(self, n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
        match self {
            Sampler::PerPair => Graph::gnp(n, p, seed),
            Sampler::Geometric => Graph::gnp_geometric(n, p, seed),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Sampler::PerPair => "per-pair",
            Sampler::Geometric => "geometric",
        }
    }
}

impl FromStr for Sampler {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "per-pair" => Ok(Sampler::PerPair),
            "geometric" => Ok(Sampler::Geometric),
            other => Err(alloc::format!("unknown sampler `{other}` (per-pair | geometric)")),
        }
    }
}

/// Graph predicates available to experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Property {
    MinDegreeAtLeast(usize),
    MinDegreeExactly(usize),
    Connected,
    /// Some vertex has degree exactly 2.
    ExistsDegree2,
    /// Deleting any degree-2 vertex leaves a bipartite graph (vacuously true
    /// without degree-2 vertices).
    Degree2DeletionsBipartite,
    ContainsTriangle,
    /// For every vertex `v`, `G - v` still contains a triangle.
    EveryDeletionHasTriangle,
    Hamiltonian,
    HamiltonGeneratedFull,
    QuotientDimAtMost(usize),
    NearHamiltonSpanFull,
    HamiltonConnected,
}

/// Outcome of one predicate evaluation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Yes,
    No,
    /// Exact search refused (too large) or hit its cap.
    Unknown,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::Yes
        } else {
            Verdict::No
        }
    }
}

impl From<Result<bool, HamiltonError>> for Verdict {
    fn from(r: Result<bool, HamiltonError>) -> Self {
        r.map_or(Verdict::Unknown, Verdict::from)
    }
}

impl Property {
    /// Canonical names, as accepted by [`Property::from_str`]. `K` and `D`
    /// stand for non-negative integers.
    pub const NAMES: [&'static str; 12] = [
        "min_degree>=K",
        "min_degree=K",
        "connected",
        "exists_degree2",
        "degree2_deletions_bipartite",
        "contains_triangle",
        "every_deletion_has_triangle",
        "hamiltonian",
        "hamilton_generated_full",
        "quotient_dim<=D",
        "near_hamilton_span_full",
        "hamilton_connected",
    ];

    /// Whether the predicate needs exhaustive Hamilton search.
    pub fn is_exact_search(&self) -> bool {
        matches!(
            self,
            Property::Hamiltonian
                | Property::HamiltonGeneratedFull
                | Property::QuotientDimAtMost(_)
                | Property::NearHamiltonSpanFull
                | Property::HamiltonConnected
        )
    }

    /// Monotone increasing under edge addition.
    pub fn is_monotone(&self) -> bool {
        matches!(
            self,
            Property::MinDegreeAtLeast(_)
                | Property::Connected
                | Property::ContainsTriangle
                | Property::Hamiltonian
                | Property::HamiltonConnected
        )
    }

    pub fn evaluate(&self, g: &Graph, limits: &SearchLimits) -> Verdict {
        if self.is_exact_search() && g.n() > limits.max_vertices {
            return Verdict::Unknown;
        }
        match *self {
            Property::MinDegreeAtLeast(k) => Verdict::from(g.min_degree().is_some_and(|d| d >= k)),
            Property::MinDegreeExactly(k) => Verdict::from(g.min_degree() == Some(k)),
            Property::Connected => Verdict::from(g.is_connected()),
            Property::ExistsDegree2 => Verdict::from((0..g.n()).any(|v| g.degree(v) == 2)),
            Property::Degree2DeletionsBipartite => Verdict::from(
                g.degree2_vertices()
                    .into_iter()
                    .all(|v| g.delete_vertex(v).expect("in range").is_bipartite()),
            ),
            Property::ContainsTriangle => Verdict::from(g.has_triangle()),
            Property::EveryDeletionHasTriangle => {
                // G - v keeps a triangle iff some triangle avoids v.
                let (total, per_vertex) = g.triangle_counts();
                Verdict::from(total > 0 && per_vertex.iter().all(|&t| t < total))
            }
            Property::Hamiltonian => Verdict::from(is_hamiltonian(g, limits)),
            Property::HamiltonGeneratedFull => {
                match hamilton_generated_status(g, limits).quotient_dim() {
                    // A forest has a trivial cycle space, vacuously spanned.
                    Some(d) => Verdict::from(d == 0 && cycle_space_dim(g) > 0),
                    None => Verdict::Unknown,
                }
            }
            Property::QuotientDimAtMost(bound) => match hamilton_generated_status(g, limits).quotient_dim() {
                Some(d) => Verdict::from(d <= bound),
                None => Verdict::Unknown,
            },
            Property::NearHamiltonSpanFull => Verdict::from(near_hamilton_span_full(g, limits)),
            Property::HamiltonConnected => {
                if g.n() < 2 {
                    Verdict::No
                } else {
                    Verdict::from(is_hamilton_connected(g, limits))
                }
            }
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::MinDegreeAtLeast(k) => write!(f, "min_degree>={k}"),
            Property::MinDegreeExactly(k) => write!(f, "min_degree={k}"),
            Property::Connected => f.write_str("connected"),
            Property::ExistsDegree2 => f.write_str("exists_degree2"),
            Property::Degree2DeletionsBipartite => f.write_str("degree2_deletions_bipartite"),
            Property::ContainsTriangle => f.write_str("contains_triangle"),
            Property::EveryDeletionHasTriangle => f.write_str("every_deletion_has_triangle"),
            Property::Hamiltonian => f.write_str("hamiltonian"),
            Property::HamiltonGeneratedFull => f.write_str("hamilton_generated_full"),
            Property::QuotientDimAtMost(d) => write!(f, "quotient_dim<={d}"),
            Property::NearHamiltonSpanFull => f.write_str("near_hamilton_span_full"),
            Property::HamiltonConnected => f.write_str("hamilton_connected"),
        }
    }
}

impl FromStr for Property {
    type Err = ExperimentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || ExperimentError::UnknownProperty(s.to_string());
        let number = |rest: &str| rest.trim().parse::<usize>().map_err(|_| unknown());
        if let Some(rest) = s.strip_prefix("min_degree>=") {
            return number(rest).map(Property::MinDegreeAtLeast);
        }
        if let Some(rest) = s.strip_prefix("min_degree=") {
            return number(rest).map(Property::MinDegreeExactly);
        }
        if let Some(rest) = s.strip_prefix("quotient_dim<=") {
            return number(rest).map(Property::QuotientDimAtMost);
        }
        Ok(match s {
            "connected" => Property::Connected,
            "exists_degree2" => Property::ExistsDegree2,
            "degree2_deletions_bipartite" => Property::Degree2DeletionsBipartite,
            "contains_triangle" => Property::ContainsTriangle,
            "every_deletion_has_triangle" => Property::EveryDeletionHasTriangle,
            "hamiltonian" => Property::Hamiltonian,
            "hamilton_generated_full" => Property::HamiltonGeneratedFull,
            "near_hamilton_span_full" => Property::NearHamiltonSpanFull,
            "hamilton_connected" => Property::HamiltonConnected,
            _ => return Err(unknown()),
        })
    }
}

impl Serialize for Property {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// One Monte Carlo experiment: `trials` samples of `G(n, p)` tested against
/// one property.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialConfig {
    pub property: Property,
    pub n: usize,
    pub p: PSpec,
    pub trials: u64,
    pub master_seed: u64,
    pub limits: SearchLimits,
    pub sampler: Sampler,
}

impl TrialConfig {
    pub fn new(property: Property, n: usize, p: PSpec, trials: u64, master_seed: u64) -> Self {
        Self {
            property,
            n,
            p,
            trials,
            master_seed,
            limits: SearchLimits { max_vertices: DEFAULT_EXACT_VERTICES, ..SearchLimits::default() },
            sampler: Sampler::default(),
        }
    }

    /// Checks the config and resolves `p`.
    pub fn resolve(&self) -> Result<(f64, bool), ExperimentError> {
        if self.trials == 0 {
            return Err(ExperimentError::NoTrials);
        }
        self.p.resolve(self.n)
    }

    pub fn trial_seed(&self, index: u64) -> u64 {
        derive_seed(self.master_seed, index)
    }

    /// Samples and evaluates trial `index` at the resolved probability `p`.
    pub fn run_trial(&self, p: f64, index: u64) -> Result<Verdict, ExperimentError> {
        let g = self.sampler.sample(self.n, p, self.trial_seed(index))?;
        Ok(self.property.evaluate(&g, &self.limits))
    }
}

/// Counts of trial outcomes; merging is commutative and associative.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub successes: u64,
    pub failures: u64,
    pub unknown: u64,
}

impl Tally {
    pub fn record(&mut self, v: Verdict) {
        match v {
            Verdict::Yes => self.successes += 1,
            Verdict::No => self.failures += 1,
            Verdict::Unknown => self.unknown += 1,
        }
    }

    pub fn merge(self, other: Self) -> Self {
        Self {
            successes: self.successes + other.successes,
            failures: self.failures + other.failures,
            unknown: self.unknown + other.unknown,
        }
    }

    pub fn trials(&self) -> u64 {
        self.successes + self.failures + self.unknown
    }

    /// Trials with a definite answer.
    pub fn decided(&self) -> u64 {
        self.successes + self.failures
    }

    /// Success fraction among decided trials; `NaN` if none were decided.
    pub fn p_hat(&self) -> f64 {
        if self.decided() == 0 {
            f64::NAN
        } else {
            self.successes as f64 / self.decided() as f64
        }
    }

    /// Wilson interval over the decided trials.
    pub fn interval(&self) -> (f64, f64) {
        wilson_interval(self.successes, self.decided())
    }
}

/// Runs every trial sequentially.
pub fn run_sequential(config: &TrialConfig) -> Result<Tally, ExperimentError> {
    let (p, _) = config.resolve()?;
    let mut tally = Tally::default();
    for i in 0..config.trials {
        tally.record(config.run_trial(p, i)?);
    }
    Ok(tally)
}

/// Per-trial verdicts for two probabilities on shared variates
/// ([`Sampler::PerPair`] with identical trial seeds).
pub fn coupled_verdicts(config: &TrialConfig, p_low: f64, p_high: f64) -> Result<Vec<(Verdict, Verdict)>, ExperimentError> {
    let mut out = Vec::new();
    for i in 0..config.trials {
        let seed = config.trial_seed(i);
        let lo = Graph::gnp(config.n, p_low, seed)?;
        let hi = Graph::gnp(config.n, p_high, seed)?;
        out.push((config.property.evaluate(&lo, &config.limits), config.property.evaluate(&hi, &config.limits)));
    }
    Ok(out)
}
