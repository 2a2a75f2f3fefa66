//! Command-line front end: build codes, decode single instances, run
//! failure-rate sweeps, and emit figure-ready CSV.
//!
//! Every run that writes data also writes a JSON manifest carrying the tool
//! version, the full parameter set, the master seed, and a fingerprint of
//! the code, which is enough to regenerate the data file byte-for-byte.

use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::code::{read_alist_file, regular_ldpc, repetition_code, CssCode};
use crate::decoder::{DecodeError, DecoderKind, ErasureDecoder, FailureKind};
use crate::gf2::{BitMatrix, BitVector};
use crate::sim::{cluster_stats, run_trials, RateResult, SimConfig, StatsRow};

#[derive(Parser)]
#[command(
    name = "qldpc-erasure",
    version,
    about = "Erasure decoding of CSS quantum LDPC codes: peeling, cluster decomposition, and Monte Carlo sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a hypergraph product code from classical parity-check matrices.
    Hgp(HgpArgs),
    /// Estimate failure rates over a list of erasure rates.
    Simulate(SimulateArgs),
    /// Decode a single erasure/syndrome instance from files.
    Decode(DecodeArgs),
    /// Cluster-size census: how often stopping sets decompose into clusters
    /// above given size thresholds.
    Stats(StatsArgs),
}

#[derive(Args)]
struct HgpArgs {
    /// First classical factor: `rep:N`, `regular:N0,COLDEG,ROWDEG[,SEED]`,
    /// or a path to an alist file.
    #[arg(long = "a")]
    a: String,
    /// Second factor; defaults to the first (square product).
    #[arg(long = "b")]
    b: Option<String>,
    /// Output directory for h1.alist, h2.alist, and code.json.
    #[arg(long)]
    out: PathBuf,
    /// Code name recorded in the manifest.
    #[arg(long, default_value = "hgp")]
    name: String,
}

#[derive(Args)]
struct SimulateArgs {
    /// Directory holding code.json plus the alist files.
    #[arg(long)]
    code: PathBuf,
    /// peeling | cluster | gaussian
    #[arg(long)]
    decoder: String,
    /// Cluster size bound: a positive integer or `inf`. Required with
    /// --decoder cluster and rejected otherwise.
    #[arg(long = "max-cluster-size")]
    max_cluster_size: Option<String>,
    /// Comma-separated erasure rates, e.g. 0.1,0.2,0.3.
    #[arg(long, value_delimiter = ',')]
    rates: Vec<f64>,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output CSV path; a JSON manifest is written next to it.
    #[arg(long)]
    out: PathBuf,
    /// Worker threads; 0 picks the machine default.
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

#[derive(Args)]
struct DecodeArgs {
    #[arg(long)]
    code: PathBuf,
    /// File with an ASCII bit string per line; the first line is used.
    #[arg(long)]
    erasure: PathBuf,
    #[arg(long)]
    syndrome: PathBuf,
    #[arg(long)]
    decoder: String,
    #[arg(long = "max-cluster-size")]
    max_cluster_size: Option<String>,
    /// Where to write the estimate as a bit string (stdout when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also dump the cluster forest of the residual, one record per line.
    #[arg(long)]
    dump_forest: Option<PathBuf>,
}

#[derive(Args)]
struct StatsArgs {
    #[arg(long)]
    code: PathBuf,
    #[arg(long, value_delimiter = ',')]
    rates: Vec<f64>,
    #[arg(long)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Cluster-size thresholds for the census columns.
    #[arg(long, value_delimiter = ',', default_values_t = vec![10usize, 20, 50, 100, 200])]
    thresholds: Vec<usize>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = 0)]
    threads: usize,
}

/// Parses argv and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap renders its own help/usage output.
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let outcome = match cli.command {
        Command::Hgp(args) => cmd_hgp(&args),
        Command::Simulate(args) => cmd_simulate(&args),
        Command::Decode(args) => cmd_decode(&args),
        Command::Stats(args) => cmd_stats(&args),
    };
    match outcome {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn parse_factor(spec: &str) -> Result<BitMatrix, String> {
    if let Some(rest) = spec.strip_prefix("rep:") {
        let n: usize = rest.parse().map_err(|_| format!("invalid repetition length {rest:?}"))?;
        if n < 2 {
            return Err("repetition length must be at least 2".into());
        }
        return Ok(repetition_code(n));
    }
    if let Some(rest) = spec.strip_prefix("regular:") {
        let parts: Vec<&str> = rest.split(',').collect();
        if !(parts.len() == 3 || parts.len() == 4) {
            return Err(format!("expected regular:N0,COLDEG,ROWDEG[,SEED], got {spec:?}"));
        }
        let parse = |s: &str| s.trim().parse::<usize>().map_err(|_| format!("invalid number {s:?}"));
        let n0 = parse(parts[0])?;
        let col_deg = parse(parts[1])?;
        let row_deg = parse(parts[2])?;
        let seed = if parts.len() == 4 {
            parts[3].trim().parse::<u64>().map_err(|_| format!("invalid seed {:?}", parts[3]))?
        } else {
            0
        };
        return regular_ldpc(n0, col_deg, row_deg, seed).map_err(|e| e.to_string());
    }
    read_alist_file(Path::new(spec)).map_err(|e| e.to_string())
}

fn parse_decoder(name: &str, max_cluster_size: Option<&str>) -> Result<DecoderKind, String> {
    let kind = match name {
        "peeling" => DecoderKind::Peeling,
        "gaussian" => DecoderKind::Gaussian,
        "cluster" => {
            let spec = max_cluster_size.ok_or(
                "--max-cluster-size is required with --decoder cluster (an integer or `inf`)",
            )?;
            let bound = if spec.eq_ignore_ascii_case("inf") {
                None
            } else {
                let c: usize = spec
                    .parse()
                    .map_err(|_| format!("invalid --max-cluster-size {spec:?}"))?;
                Some(c)
            };
            return Ok(DecoderKind::Cluster { bound });
        }
        other => return Err(format!("unknown decoder {other:?}; use peeling, cluster, or gaussian")),
    };
    if max_cluster_size.is_some() {
        return Err(format!("--max-cluster-size only applies to --decoder cluster, not {name}"));
    }
    Ok(kind)
}

fn thread_pool(threads: usize) -> Result<rayon::ThreadPool, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| e.to_string())
}

fn cmd_hgp(args: &HgpArgs) -> Result<i32, String> {
    let a = parse_factor(&args.a)?;
    let b = match &args.b {
        Some(spec) => parse_factor(spec)?,
        None => a.clone(),
    };
    let code = CssCode::hypergraph_product(args.name.clone(), &a, &b);
    code.save_dir(&args.out).map_err(|e| e.to_string())?;
    println!("[[{},{}]]", code.n(), code.k());
    if code.k() == 0 {
        eprintln!("warning: code encodes no logical qubits (k = 0)");
    }
    Ok(0)
}

#[derive(Serialize)]
struct ToolInfo {
    name: &'static str,
    version: &'static str,
}

#[derive(Serialize)]
struct CodeInfo {
    dir: String,
    name: String,
    n: usize,
    k: usize,
    fingerprint: String,
}

#[derive(Serialize)]
struct SimulateManifest<'a> {
    tool: ToolInfo,
    created_unix: u64,
    command: &'static str,
    code: CodeInfo,
    decoder: String,
    rates: &'a [f64],
    trials: usize,
    seed: u64,
    threads: usize,
    results: &'a [RateResult],
}

#[derive(Serialize)]
struct StatsManifest<'a> {
    tool: ToolInfo,
    created_unix: u64,
    command: &'static str,
    code: CodeInfo,
    rates: &'a [f64],
    trials: usize,
    seed: u64,
    threads: usize,
    thresholds: &'a [usize],
    results: &'a [StatsRow],
}

fn tool_info() -> ToolInfo {
    ToolInfo {
        name: env!("CARGO_PKG_NAME"),
        version: env!("CARGO_PKG_VERSION"),
    }
}

fn code_info(dir: &Path, code: &CssCode) -> CodeInfo {
    CodeInfo {
        dir: dir.display().to_string(),
        name: code.name().to_string(),
        n: code.n(),
        k: code.k(),
        fingerprint: code.fingerprint(),
    }
}

fn now_unix() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map_or(0, |d| d.as_secs())
}

fn write_text(path: &Path, text: &str) -> Result<(), String> {
    std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn manifest_path(out: &Path) -> PathBuf {
    out.with_extension("json")
}

/// Figure-data layout: rate, failure rate, then the CI deltas above and
/// below the point.
pub fn simulate_csv(results: &[RateResult]) -> String {
    let mut out = String::from("x,y,error1,error2\n");
    for r in results {
        out.push_str(&format!(
            "{},{:.10},{:.10},{:.10}\n",
            r.rate,
            r.failure_rate,
            r.ci_high - r.failure_rate,
            r.failure_rate - r.ci_low,
        ));
    }
    out
}

pub fn stats_csv(rows: &[StatsRow], thresholds: &[usize]) -> String {
    let mut out = String::from("rate,not_peelable");
    for t in thresholds {
        out.push_str(&format!(",smax_gt_{t}"));
    }
    out.push('\n');
    for row in rows {
        out.push_str(&format!("{},{:.10}", row.rate, row.not_peelable_fraction));
        for f in &row.exceed_fractions {
            out.push_str(&format!(",{f:.10}"));
        }
        out.push('\n');
    }
    out
}

fn cmd_simulate(args: &SimulateArgs) -> Result<i32, String> {
    let code = CssCode::load_dir(&args.code).map_err(|e| e.to_string())?;
    let decoder = parse_decoder(&args.decoder, args.max_cluster_size.as_deref())?;
    let cfg = SimConfig {
        decoder,
        erasure_rates: args.rates.clone(),
        trials: args.trials,
        master_seed: args.seed,
    };
    let pool = thread_pool(args.threads)?;
    let result = pool
        .install(|| run_trials(&code, &cfg))
        .map_err(|e| e.to_string())?;
    write_text(&args.out, &simulate_csv(&result.per_rate))?;
    let manifest = SimulateManifest {
        tool: tool_info(),
        created_unix: now_unix(),
        command: "simulate",
        code: code_info(&args.code, &code),
        decoder: decoder.label(),
        rates: &args.rates,
        trials: args.trials,
        seed: args.seed,
        threads: args.threads,
        results: &result.per_rate,
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write_text(&manifest_path(&args.out), &json)?;
    for r in &result.per_rate {
        println!(
            "rate {:.4}: {}/{} failures ({:.6e}), 95% CI [{:.6e}, {:.6e}]",
            r.rate, r.failures, r.trials, r.failure_rate, r.ci_low, r.ci_high
        );
    }
    Ok(0)
}

fn read_vector(path: &Path, expected_len: usize, role: &str) -> Result<BitVector, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let line = text
        .lines()
        .find(|l| !l.trim().is_empty())
        .ok_or_else(|| format!("{}: no bit string found", path.display()))?;
    let v: BitVector = line
        .trim()
        .parse()
        .map_err(|e| format!("{}: {e}", path.display()))?;
    if v.len() != expected_len {
        return Err(format!(
            "{}: {role} has length {}, code expects {expected_len}",
            path.display(),
            v.len()
        ));
    }
    Ok(v)
}

fn cmd_decode(args: &DecodeArgs) -> Result<i32, String> {
    let code = CssCode::load_dir(&args.code).map_err(|e| e.to_string())?;
    let kind = parse_decoder(&args.decoder, args.max_cluster_size.as_deref())?;
    let erasure = read_vector(&args.erasure, code.n(), "erasure pattern")?;
    let syndrome = read_vector(&args.syndrome, code.h1().rows(), "syndrome")?;
    let decoder = ErasureDecoder::new(&code, kind);

    if let Some(dump) = &args.dump_forest {
        let state = decoder
            .graph()
            .peel(&syndrome, &erasure)
            .map_err(|e| e.to_string())?;
        let mut forest = crate::cluster::ClusterForest::build(&state, decoder.graph());
        forest.root();
        write_text(dump, &forest.dump_text())?;
    }

    let decoded = match decoder.decode(&syndrome, &erasure) {
        Ok(d) => d,
        Err(DecodeError::InconsistentSyndrome) => {
            eprintln!("inconsistent syndrome: no error on this erasure matches it");
            return Ok(2);
        }
        Err(e) => return Err(e.to_string()),
    };
    println!("peelable: {}", decoded.peelable);
    if !decoded.cluster_sizes.is_empty() {
        let sizes: Vec<String> = decoded.cluster_sizes.iter().map(ToString::to_string).collect();
        println!("cluster sizes: {{{}}}", sizes.join(","));
    }
    match (&decoded.solution, decoded.failure) {
        (Some(solution), _) => {
            println!("outcome: solved");
            match &args.out {
                Some(path) => write_text(path, &format!("{solution}\n"))?,
                None => println!("{solution}"),
            }
            Ok(0)
        }
        (None, Some(FailureKind::OversizeCluster)) => {
            println!("outcome: oversize-cluster");
            Ok(1)
        }
        (None, _) => {
            // The Gaussian route is exact, so a miss there means no solution
            // exists at all.
            if kind == DecoderKind::Gaussian {
                eprintln!("inconsistent syndrome: no error on this erasure matches it");
                return Ok(2);
            }
            println!("outcome: no-solution");
            Ok(1)
        }
    }
}

fn cmd_stats(args: &StatsArgs) -> Result<i32, String> {
    let code = CssCode::load_dir(&args.code).map_err(|e| e.to_string())?;
    let pool = thread_pool(args.threads)?;
    let rows = pool
        .install(|| cluster_stats(&code, &args.rates, args.trials, args.seed, &args.thresholds))
        .map_err(|e| e.to_string())?;
    write_text(&args.out, &stats_csv(&rows, &args.thresholds))?;
    let manifest = StatsManifest {
        tool: tool_info(),
        created_unix: now_unix(),
        command: "stats",
        code: code_info(&args.code, &code),
        rates: &args.rates,
        trials: args.trials,
        seed: args.seed,
        threads: args.threads,
        thresholds: &args.thresholds,
        results: &rows,
    };
    let json = serde_json::to_string_pretty(&manifest).expect("manifest serializes");
    write_text(&manifest_path(&args.out), &json)?;
    for row in &rows {
        println!("rate {:.4}: not peelable {:.4}", row.rate, row.not_peelable_fraction);
    }
    Ok(0)
}
