//! `hamspan`: Hamilton-generated cycle spaces from the command line.
//!
//! Reports go to standard output as JSON (sweeps as CSV); diagnostics go to
//! standard error. Exit status: 0 success, 1 failed verification, 2 invalid
//! arguments or input, 3 a definite answer was requested but the search was
//! capped.

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hamspan::io::{read_graph, write_graph, write_matrix};
use hamspan::report::{Report, DEFAULT_SEED};
use hamspan::sweep::{sweep, SweepWriter};
use hamspan_core::experiments::{PSpec, Property, Sampler, TrialConfig, DEFAULT_EXACT_VERTICES};
use hamspan_core::hamilton::DEFAULT_CAP;
use hamspan_core::verify::{check_k_hat, verify_k43};
use hamspan_core::{hamilton_generated_status, Graph, HamKind, SearchLimits};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "hamspan", version, about = "Decide whether Hamilton circuits generate a graph's cycle space")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the rank-7 certificate for K^(4^,3).
    #[command(name = "verify-k43")]
    VerifyK43 {
        /// Also write the 14x7 edge/circuit matrix in the matrix dump format.
        #[arg(long)]
        matrix_out: Option<PathBuf>,
    },
    /// Hamilton span status of K^(s^,s-1), with a full circuit census.
    Conjecture {
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Structure and Hamilton span status of a graph file.
    Status {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
    /// Monte Carlo estimates over G(n, p) as CSV, one row per (n, p) pair.
    Sweep(SweepArgs),
    /// Write a generated graph in the graph file format.
    Gen(GenArgs),
}

#[derive(Args)]
struct SweepArgs {
    /// Vertex counts (comma separated).
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<usize>,
    /// Edge probabilities (comma separated).
    #[arg(long, value_delimiter = ',', group = "pspec")]
    p: Vec<f64>,
    /// p = (ln n + k ln ln n + c) / n, given as `k,c`; repeatable.
    #[arg(long, value_parser = parse_formula, group = "pspec")]
    formula: Vec<(u32, f64)>,
    /// p = n^(-1/2 + eps) (comma separated).
    #[arg(long, value_delimiter = ',', group = "pspec")]
    eps: Vec<f64>,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, value_parser = |s: &str| s.parse::<Property>().map_err(|e| e.to_string()))]
    property: Property,
    /// Enumeration cap per exact search.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Largest n on which exact Hamilton predicates run; beyond it trials are Unknown.
    #[arg(long, default_value_t = DEFAULT_EXACT_VERTICES)]
    max_exact: usize,
    #[arg(long, default_value = "per-pair", value_parser = |s: &str| s.parse::<Sampler>())]
    sampler: Sampler,
    /// Worker threads (default: all cores).
    #[arg(long, env = "HAMSPAN_THREADS")]
    threads: Option<usize>,
    /// CSV destination (default: standard output).
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// K^(s^,s-1); needs --s.
    Khat,
    /// Square of the circuit C_n; needs --n.
    Csq,
    /// G(n, p); needs --n and --p.
    Gnp,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    #[arg(long)]
    s: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<f64>,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value = "per-pair", value_parser = |s: &str| s.parse::<Sampler>())]
    sampler: Sampler,
    /// Destination (default: standard output).
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_formula(s: &str) -> Result<(u32, f64), String> {
    let (k, c) = s.split_once(',').ok_or("expected `k,c`")?;
    let k = k.trim().parse().map_err(|_| format!("bad k `{k}`"))?;
    let c = c.trim().parse().map_err(|_| format!("bad c `{c}`"))?;
    Ok((k, c))
}

/// Failures mapped to exit statuses.
enum Failure {
    Usage(anyhow::Error),
    Verification,
    Undecided,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

fn limits(cap: u64) -> SearchLimits {
    SearchLimits { cap, ..SearchLimits::default() }
}

fn emit<C: Serialize, R: Serialize>(config: C, result: R) -> anyhow::Result<()> {
    Report::new(config, result).write(io::stdout().lock()).context("writing report")
}

#[derive(Serialize)]
struct CommandConfig<'a, T: Serialize> {
    command: &'a str,
    #[serde(flatten)]
    args: T,
}

fn run_verify(matrix_out: Option<PathBuf>) -> Result<(), Failure> {
    let report = verify_k43();
    let passed = report.passed();
    if let Some(path) = &matrix_out {
        let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
        write_matrix(&report.edges, &report.matrix, BufWriter::new(file))
            .with_context(|| format!("writing {}", path.display()))?;
    }
    emit(CommandConfig { command: "verify-k43", args: () }, report)?;
    if passed {
        Ok(())
    } else {
        eprintln!("verification failed");
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct CapConfig {
    s: usize,
    cap: u64,
}

#[derive(Serialize)]
struct Timed<T: Serialize> {
    #[serde(flatten)]
    inner: T,
    wall_ms: u64,
}

fn run_conjecture(s: usize, cap: u64) -> Result<(), Failure> {
    let start = Instant::now();
    let report = check_k_hat(s, &limits(cap)).map_err(|e| Failure::Usage(e.into()))?;
    let unknown = report.status.kind == HamKind::Unknown;
    if !report.census.completed {
        eprintln!("census capped at {cap} circuits; counts are lower bounds");
    }
    let wall_ms = start.elapsed().as_millis() as u64;
    emit(CommandConfig { command: "conjecture", args: CapConfig { s, cap } }, Timed { inner: report, wall_ms })?;
    if unknown {
        Err(Failure::Undecided)
    } else {
        Ok(())
    }
}

#[derive(Serialize)]
struct StatusConfig {
    input: String,
    cap: u64,
}

#[derive(Serialize)]
struct StatusResult {
    structure: hamspan_core::Structure,
    edges: Vec<(usize, usize)>,
    status: hamspan_core::HamStatus,
}

fn open_graph(path: &PathBuf) -> anyhow::Result<Graph> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_graph(BufReader::new(file)).with_context(|| format!("reading {}", path.display()))
}

fn run_status(input: PathBuf, cap: u64) -> Result<(), Failure> {
    let g = open_graph(&input)?;
    let structure = g.structure().context("graph has no vertices")?;
    let status = hamilton_generated_status(&g, &limits(cap));
    let unknown = status.kind == HamKind::Unknown;
    let config = StatusConfig { input: input.display().to_string(), cap };
    emit(CommandConfig { command: "status", args: config }, StatusResult { structure, edges: g.edges().collect(), status })?;
    if unknown {
        eprintln!("search capped; span status unknown");
        Err(Failure::Undecided)
    } else {
        Ok(())
    }
}

fn sweep_configs(args: &SweepArgs) -> anyhow::Result<Vec<TrialConfig>> {
    let specs: Vec<PSpec> = if !args.p.is_empty() {
        args.p.iter().map(|&p| PSpec::Fixed(p)).collect()
    } else if !args.formula.is_empty() {
        args.formula.iter().map(|&(k, c)| PSpec::MinDegree { k, c }).collect()
    } else if !args.eps.is_empty() {
        args.eps.iter().map(|&eps| PSpec::Power { eps }).collect()
    } else {
        bail!("one of --p, --formula or --eps is required");
    };
    let mut configs = Vec::new();
    for &n in &args.n {
        for &spec in &specs {
            let mut config = TrialConfig::new(args.property, n, spec, args.trials, args.seed);
            config.limits.cap = args.cap;
            config.limits.max_vertices = args.max_exact;
            config.sampler = args.sampler;
            let (_, clamped) = config.resolve().with_context(|| format!("n = {n}, p = {spec:?}"))?;
            if clamped {
                eprintln!("warning: p for n = {n}, {spec:?} clamped to [0, 1]");
            }
            configs.push(config);
        }
    }
    Ok(configs)
}

#[derive(Serialize)]
struct SweepConfigs<'a> {
    configs: &'a [TrialConfig],
}

fn run_sweep(args: SweepArgs) -> Result<(), Failure> {
    if let Some(threads) = args.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring worker threads")?;
    }
    let configs = sweep_configs(&args)?;
    let resolved = Report::new(CommandConfig { command: "sweep", args: SweepConfigs { configs: &configs } }, ());
    eprintln!("{}", serde_json::to_string(&resolved).expect("config serializes"));
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(
            File::create(path).with_context(|| format!("creating {}", path.display()))?,
        )),
        None => Box::new(io::stdout().lock()),
    };
    let mut writer = SweepWriter::new(sink).context("writing CSV header")?;
    let records = sweep(&configs, &mut writer).map_err(anyhow::Error::from)?;
    let unknown: u64 = records.iter().map(|r| r.unknown).sum();
    if unknown > 0 {
        eprintln!("{unknown} trials were undecided (reported in the `unknown` column)");
    }
    Ok(())
}

#[derive(Serialize)]
struct GenConfig {
    family: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    s: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    p: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sampler: Option<&'static str>,
}

fn run_gen(args: GenArgs) -> Result<(), Failure> {
    let need = |v: Option<usize>, flag: &str| v.with_context(|| format!("--{flag} is required for this family"));
    let (g, config) = match args.family {
        Family::Khat => {
            let s = need(args.s, "s")?;
            let config = GenConfig { family: "khat", s: Some(s), n: None, p: None, seed: None, sampler: None };
            (Graph::k_hat(s).map_err(anyhow::Error::from)?, config)
        }
        Family::Csq => {
            let n = need(args.n, "n")?;
            let config = GenConfig { family: "csq", s: None, n: Some(n), p: None, seed: None, sampler: None };
            (Graph::square_cycle(n).map_err(anyhow::Error::from)?, config)
        }
        Family::Gnp => {
            let n = need(args.n, "n")?;
            let p = args.p.context("--p is required for this family")?;
            let config = GenConfig {
                family: "gnp",
                s: None,
                n: Some(n),
                p: Some(p),
                seed: Some(args.seed),
                sampler: Some(args.sampler.name()),
            };
            (args.sampler.sample(n, p, args.seed).map_err(anyhow::Error::from)?, config)
        }
    };
    eprintln!("{}", serde_json::to_string(&Report::new(config, ())).expect("config serializes"));
    match &args.output {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("creating {}", path.display()))?;
            write_graph(&g, BufWriter::new(file)).with_context(|| format!("writing {}", path.display()))?;
        }
        None => write_graph(&g, io::stdout().lock()).context("writing graph")?,
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::VerifyK43 { matrix_out } => run_verify(matrix_out),
        Command::Conjecture { s, cap } => run_conjecture(s, cap),
        Command::Status { input, cap } => run_status(input, cap),
        Command::Sweep(args) => run_sweep(args),
        Command::Gen(args) => run_gen(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Undecided) => ExitCode::from(3),
    }
}
