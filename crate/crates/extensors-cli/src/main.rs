//! `extensors` — command-line front end for the extensor toolkit.
//!
//! Every run prints one JSON object to standard output (the machine-readable
//! report) and a one-line human summary to standard error. Reports carry the
//! command name, a SHA-256 digest of every input file, the effective
//! parameters, the result, and per-trial statistics, so a run can be
//! reproduced and audited from its output alone. Wall time is reported but
//! excluded from the determinism contract: re-running with the same inputs,
//! flags, and seed yields identical result fields.
//!
//! Exit codes: 0 = found / success, 1 = not found, 2 = error.

mod bench;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use extensors::circuit::{detect_multilinear, multilinear_trial_count, parse_circuit};
use extensors::coding::SeedSpec;
use extensors::decomp::{find_td_exhaustive, parse_td, validate_td};
use extensors::graph::parse_graph;
use extensors::paths::{
    approx_count_paths, detect_deterministic, detect_few_paths, detect_random_edge_weights,
    detect_representative, detect_unambiguous, parse_ratio, CountEstimate, CountOptions,
    TrialDistribution,
};
use extensors::ring::Rational;
use extensors::subgraph::{approx_count_subgraphs, aut_size, SubgraphOptions};

/// Environment variable consulted for the master seed when `--seed` is not
/// given. Absent both, the seed defaults to 0.
const SEED_ENV: &str = "EXTENSORS_SEED";

#[derive(Parser)]
#[command(
    name = "extensors",
    version,
    about = "Detect and approximately count paths, subgraphs, and multilinear terms",
    long_about = "Detect and approximately count k-vertex paths in directed graphs, \
                  approximately count bounded-pathwidth subgraphs, and detect degree-k \
                  multilinear terms in arithmetic circuits.\n\n\
                  Each run writes one JSON report line to stdout and a human summary to \
                  stderr. Runs are deterministic: the same inputs, flags, and seed \
                  reproduce the same result fields (wall time aside)."
)]
struct Cli {
    /// Master seed for randomized algorithms (default: $EXTENSORS_SEED, else 0)
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Worker threads for per-trial parallelism; 0 keeps the default pool.
    /// Affects speed only, never results.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the graph contains a simple directed path on k vertices
    Detect(DetectArgs),
    /// Estimate the number of k-vertex paths within relative error eps
    CountPaths(CountPathsArgs),
    /// Estimate how many copies of a pattern a host graph contains
    CountSub(CountSubArgs),
    /// Decide whether a circuit's polynomial has a degree-k multilinear term
    DetectMultilinear(DetectMultilinearArgs),
    /// Measure wedge-product, walk-sum, and zeon-multiplication costs
    Bench(bench::BenchArgs),
}

#[derive(clap::Args)]
struct DetectArgs {
    /// Graph file: `p <directed|undirected> <n> <m>` header, then 1-based edge lines
    graph: PathBuf,

    /// Number of vertices on the sought path
    #[arg(short, long)]
    k: usize,

    /// Detector: unambiguous (promise: at most one k-path), deterministic,
    /// random-edge (randomized, small false-negative rate), representative,
    /// or few:<C> (promise: at most C k-paths)
    #[arg(long, default_value = "deterministic")]
    mode: String,
}

#[derive(clap::Args)]
struct CountPathsArgs {
    /// Graph file
    graph: PathBuf,

    /// Number of vertices on the counted paths
    #[arg(short, long)]
    k: usize,

    /// Relative error bound, as a fraction or decimal (e.g. 1/5 or 0.2)
    #[arg(long, default_value = "0.2")]
    eps: String,

    /// Fixed trial count instead of the default ceil(100k^3/eps^2) schedule
    #[arg(long)]
    trials: Option<u64>,

    /// Per-trial code entry distribution
    #[arg(long, value_enum, default_value_t = DistArg::Pm1)]
    dist: DistArg,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum DistArg {
    /// Uniform ±1 entries (integer arithmetic)
    Pm1,
    /// Entries −√3, 0, √3 with probabilities 1/6, 2/3, 1/6
    Sqrt3,
}

#[derive(clap::Args)]
struct CountSubArgs {
    /// Pattern graph file (the subgraph being counted)
    pattern: PathBuf,

    /// Host graph file (the graph being searched)
    host: PathBuf,

    /// Relative error bound, as a fraction or decimal
    #[arg(long, default_value = "0.25")]
    eps: String,

    /// Fixed trial count instead of the default schedule
    #[arg(long)]
    trials: Option<u64>,

    /// Path decomposition of the pattern (`s td` format); searched exhaustively
    /// when omitted
    #[arg(long)]
    td: Option<PathBuf>,
}

#[derive(clap::Args)]
struct DetectMultilinearArgs {
    /// Circuit file in the gate-per-line DSL (`g1 = input 1`, `g3 = add g1 g2`, …)
    circuit: PathBuf,

    /// Degree of the sought multilinear term
    #[arg(short, long)]
    k: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    if cli.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
            .context("failed to configure the worker pool")?;
    }
    let seed = resolve_seed(cli.seed)?;
    match cli.command {
        Command::Detect(args) => cmd_detect(args, seed),
        Command::CountPaths(args) => cmd_count_paths(args, seed),
        Command::CountSub(args) => cmd_count_sub(args, seed),
        Command::DetectMultilinear(args) => cmd_detect_multilinear(args, seed),
        Command::Bench(args) => bench::run(&args),
    }
}

fn resolve_seed(flag: Option<u64>) -> Result<u64> {
    if let Some(seed) = flag {
        return Ok(seed);
    }
    match std::env::var(SEED_ENV) {
        Ok(text) => text
            .trim()
            .parse()
            .with_context(|| format!("{SEED_ENV} must be an unsigned 64-bit integer")),
        Err(_) => Ok(0),
    }
}

/// One JSON report line per run. Everything except `wall_ms` is a pure
/// function of the inputs, flags, and seed.
#[derive(Serialize)]
struct RunReport {
    command: &'static str,
    inputs: Vec<InputDigest>,
    parameters: Value,
    result: Value,
    trials: Value,
    wall_ms: f64,
}

#[derive(Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

struct InputFile {
    text: String,
    digest: InputDigest,
}

fn read_input(path: &Path) -> Result<InputFile> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()));
    let text = text?;
    let sha256 = format!("{:x}", Sha256::digest(text.as_bytes()));
    Ok(InputFile {
        text,
        digest: InputDigest {
            path: path.display().to_string(),
            sha256,
        },
    })
}

fn emit(report: &RunReport, summary: &str) -> Result<()> {
    println!("{}", serde_json::to_string(report)?);
    eprintln!("{summary}");
    Ok(())
}

fn ms_since(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// The estimate both exactly (`numer/denom` string) and as a float.
fn estimate_json(est: &CountEstimate) -> Value {
    json!({
        "estimate": est.estimate.to_string(),
        "estimate_float": rational_to_f64(&est.estimate),
    })
}

/// Per-trial summary: how many trials ran and how many drew a nonzero
/// sample. `raw` is empty when the answer was forced without sampling.
fn trial_stats(est: &CountEstimate) -> Value {
    let nonzero = est.raw.iter().filter(|x| !x.is_zero()).count();
    json!({
        "count": est.trials,
        "sampled": est.raw.len(),
        "nonzero": nonzero,
    })
}

enum DetectMode {
    Unambiguous,
    Deterministic,
    RandomEdge,
    Representative,
    Few(u64),
}

fn parse_mode(s: &str) -> Result<DetectMode> {
    if let Some(c) = s.strip_prefix("few:") {
        let c: u64 = c
            .parse()
            .with_context(|| format!("bad path bound in mode {s:?}"))?;
        return Ok(DetectMode::Few(c));
    }
    match s {
        "unambiguous" => Ok(DetectMode::Unambiguous),
        "deterministic" => Ok(DetectMode::Deterministic),
        "random-edge" => Ok(DetectMode::RandomEdge),
        "representative" => Ok(DetectMode::Representative),
        _ => bail!(
            "unknown mode {s:?}; expected unambiguous, deterministic, random-edge, \
             representative, or few:<C>"
        ),
    }
}

fn cmd_detect(args: DetectArgs, seed: u64) -> Result<u8> {
    let mode = parse_mode(&args.mode)?;
    let input = read_input(&args.graph)?;
    let g = parse_graph(&input.text)?;

    let started = Instant::now();
    // More vertices on the path than in the graph: trivially absent, and the
    // detectors reject the walk length rather than answering.
    let found = if args.k > g.n() {
        false
    } else {
        match mode {
            DetectMode::Unambiguous => detect_unambiguous(&g, args.k)?,
            DetectMode::Deterministic => detect_deterministic(&g, args.k)?,
            DetectMode::RandomEdge => detect_random_edge_weights(&g, args.k, SeedSpec::new(seed))?,
            DetectMode::Representative => detect_representative(&g, args.k)?,
            DetectMode::Few(c) => detect_few_paths(&g, args.k, c)?,
        }
    };
    let wall_ms = ms_since(started);

    let mut parameters = json!({
        "k": args.k,
        "mode": args.mode,
        "seed": seed,
    });
    if let DetectMode::Few(c) = mode {
        parameters["c"] = json!(c);
    }
    let report = RunReport {
        command: "detect",
        inputs: vec![input.digest],
        parameters,
        result: json!({ "found": found }),
        trials: Value::Null,
        wall_ms,
    };
    let verdict = if found { "found" } else { "not found" };
    emit(
        &report,
        &format!(
            "detect: {verdict} (k = {}, mode {}, {:.1} ms)",
            args.k, args.mode, wall_ms
        ),
    )?;
    Ok(if found { 0 } else { 1 })
}

fn cmd_count_paths(args: CountPathsArgs, seed: u64) -> Result<u8> {
    let input = read_input(&args.graph)?;
    let g = parse_graph(&input.text)?;
    let eps = parse_ratio(&args.eps)?;
    let options = CountOptions {
        trials_override: args.trials,
        distribution: match args.dist {
            DistArg::Pm1 => TrialDistribution::Bernoulli,
            DistArg::Sqrt3 => TrialDistribution::Sqrt3,
        },
    };

    let started = Instant::now();
    let est = approx_count_paths(&g, args.k, &eps, SeedSpec::new(seed), &options)?;
    let wall_ms = ms_since(started);

    let report = RunReport {
        command: "count-paths",
        inputs: vec![input.digest],
        parameters: json!({
            "k": args.k,
            "eps": eps.to_string(),
            "trials": est.trials,
            "dist": format!("{:?}", args.dist).to_lowercase(),
            "seed": seed,
        }),
        result: estimate_json(&est),
        trials: trial_stats(&est),
        wall_ms,
    };
    emit(
        &report,
        &format!(
            "count-paths: ~{:.3} paths on {} vertices (exact {}, {} trials, {:.1} ms)",
            rational_to_f64(&est.estimate),
            args.k,
            est.estimate,
            est.trials,
            wall_ms
        ),
    )?;
    Ok(0)
}

fn cmd_count_sub(args: CountSubArgs, seed: u64) -> Result<u8> {
    let pattern_in = read_input(&args.pattern)?;
    let host_in = read_input(&args.host)?;
    let h = parse_graph(&pattern_in.text)?;
    let g = parse_graph(&host_in.text)?;
    let eps = parse_ratio(&args.eps)?;

    let mut inputs = vec![pattern_in.digest, host_in.digest];
    let (td, td_source) = match &args.td {
        Some(path) => {
            let td_in = read_input(path)?;
            let (td, declared) = parse_td(&td_in.text)?;
            if declared != h.n() {
                bail!(
                    "decomposition declares {declared} pattern vertices, but the pattern has {}",
                    h.n()
                );
            }
            inputs.push(td_in.digest);
            (td, "file")
        }
        None => (find_td_exhaustive(&h, true)?, "search"),
    };
    let width = validate_td(&h, &td)?;
    let options = SubgraphOptions {
        trials_override: args.trials,
        decomposition: Some(td),
    };

    let started = Instant::now();
    let est = approx_count_subgraphs(&h, &g, &eps, SeedSpec::new(seed), &options)?;
    let wall_ms = ms_since(started);
    let aut = aut_size(&h)?;

    let mut result = estimate_json(&est);
    result["aut"] = json!(aut);
    result["width"] = json!(width);
    let report = RunReport {
        command: "count-sub",
        inputs,
        parameters: json!({
            "k": h.n(),
            "eps": eps.to_string(),
            "trials": est.trials,
            "td_source": td_source,
            "seed": seed,
        }),
        result,
        trials: trial_stats(&est),
        wall_ms,
    };
    emit(
        &report,
        &format!(
            "count-sub: ~{:.3} copies (exact {}, |Aut| = {aut}, width {width}, {} trials, {:.1} ms)",
            rational_to_f64(&est.estimate),
            est.estimate,
            est.trials,
            wall_ms
        ),
    )?;
    Ok(0)
}

fn cmd_detect_multilinear(args: DetectMultilinearArgs, seed: u64) -> Result<u8> {
    let input = read_input(&args.circuit)?;
    let circuit = parse_circuit(&input.text)?;

    let started = Instant::now();
    let found = detect_multilinear(&circuit, args.k, SeedSpec::new(seed))?;
    let wall_ms = ms_since(started);

    // A degree-k multilinear term needs k distinct variables, so the search
    // is skipped (and no trials run) when the circuit has fewer.
    let ran_trials = if args.k > circuit.num_vars() {
        0
    } else {
        multilinear_trial_count(args.k)
    };
    let report = RunReport {
        command: "detect-multilinear",
        inputs: vec![input.digest],
        parameters: json!({
            "k": args.k,
            "seed": seed,
        }),
        result: json!({ "found": found }),
        trials: json!({ "count": ran_trials }),
        wall_ms,
    };
    let verdict = if found {
        "has a multilinear term"
    } else {
        "no multilinear term found"
    };
    emit(
        &report,
        &format!(
            "detect-multilinear: {verdict} at degree {} ({ran_trials} trials, {:.1} ms)",
            args.k, wall_ms
        ),
    )?;
    Ok(if found { 0 } else { 1 })
}
