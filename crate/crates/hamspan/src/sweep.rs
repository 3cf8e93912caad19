//! Parallel estimation of property probabilities and the sweep CSV sink.

use std::io::Write;
use std::time::Instant;

use hamspan_core::experiments::{ExperimentError, Tally, TrialConfig};
use rayon::prelude::*;
use serde::Serialize;

pub const CSV_HEADER: [&str; 11] =
    ["property", "n", "p", "trials", "successes", "unknown", "p_hat", "ci_low", "ci_high", "seed", "wall_ms"];

/// Result of one [`TrialConfig`]; one CSV row.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRecord {
    pub property: String,
    pub n: usize,
    pub p: f64,
    /// The formula for `p` exceeded `[0, 1]` and was clamped.
    pub clamped: bool,
    pub trials: u64,
    pub successes: u64,
    pub unknown: u64,
    /// Success fraction over trials with a definite verdict.
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub seed: u64,
    pub wall_ms: u64,
}

impl SweepRecord {
    fn from_tally(config: &TrialConfig, p: f64, clamped: bool, tally: Tally, wall_ms: u64) -> Self {
        let (ci_low, ci_high) = tally.interval();
        Self {
            property: config.property.to_string(),
            n: config.n,
            p,
            clamped,
            trials: tally.trials(),
            successes: tally.successes,
            unknown: tally.unknown,
            p_hat: tally.p_hat(),
            ci_low,
            ci_high,
            seed: config.master_seed,
            wall_ms,
        }
    }

    pub fn csv_fields(&self) -> [String; 11] {
        [
            self.property.clone(),
            self.n.to_string(),
            format_g(self.p),
            self.trials.to_string(),
            self.successes.to_string(),
            self.unknown.to_string(),
            format_g(self.p_hat),
            format_g(self.ci_low),
            format_g(self.ci_high),
            self.seed.to_string(),
            self.wall_ms.to_string(),
        ]
    }
}

/// Runs all trials of `config` on the current rayon pool. The tally does not
/// depend on how trials are scheduled.
pub fn estimate(config: &TrialConfig) -> Result<SweepRecord, ExperimentError> {
    let start = Instant::now();
    let (p, clamped) = config.resolve()?;
    let tally = (0..config.trials)
        .into_par_iter()
        .map(|i| config.run_trial(p, i))
        .try_fold(Tally::default, |mut acc, verdict| {
            acc.record(verdict?);
            Ok::<_, ExperimentError>(acc)
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    Ok(SweepRecord::from_tally(config, p, clamped, tally, start.elapsed().as_millis() as u64))
}

/// `printf("%.6g")`: six significant digits, trailing zeros removed,
/// scientific notation below `1e-4` or from `1e6` up.
pub fn format_g(x: f64) -> String {
    const DIGITS: i32 = 6;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.into();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.into();
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        trim_zeros(&format!("{:.*}", (DIGITS - 1 - exp) as usize, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Writes sweep rows as CSV, flushing after each row so that a failure
/// leaves only whole rows behind.
pub struct SweepWriter<W: Write> {
    csv: csv::Writer<W>,
}

impl<W: Write> SweepWriter<W> {
    pub fn new(out: W) -> csv::Result<Self> {
        let mut csv = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        csv.write_record(CSV_HEADER)?;
        csv.flush()?;
        Ok(Self { csv })
    }

    pub fn write(&mut self, record: &SweepRecord) -> csv::Result<()> {
        self.csv.write_record(record.csv_fields())?;
        self.csv.flush()?;
        Ok(())
    }

    pub fn into_inner(self) -> W {
        self.csv.into_inner().unwrap_or_else(|e| panic!("flushed writer: {e}"))
    }
}

#[derive(Debug, thiserror::Error)]
pub enum SweepError {
    #[error("config {index}: {source}")]
    Experiment {
        index: usize,
        #[source]
        source: ExperimentError,
    },
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Estimates every config in order and streams one row per config.
pub fn sweep<W: Write>(
    configs: &[TrialConfig],
    out: &mut SweepWriter<W>,
) -> Result<Vec<SweepRecord>, SweepError> {
    let mut records = Vec::with_capacity(configs.len());
    for (index, config) in configs.iter().enumerate() {
        let record = estimate(config).map_err(|source| SweepError::Experiment { index, source })?;
        out.write(&record)?;
        records.push(record);
    }
    Ok(records)
}
