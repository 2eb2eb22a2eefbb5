use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use zcl_core::cuplength::{zcl_from_witness, GProbe};
use zcl_core::join::verify_join;
use zcl_core::zero_divisors::check_degree;
use zcl_core::{
    build_row, emit, g_stabilization_probe, g_value, zcl_exact_with, BoundsRow, Cache, Error, Format, Policy,
    RingSpec, RowContext, SearchLimits, TwoAdicProfile, WitnessRecord, ZclResult, DEFAULT_BASIS_LIMIT,
};

const EXIT_DEFECT: u8 = 1;
const EXIT_UNDETERMINED: u8 = 2;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(
    name = "rpzcl",
    version,
    about = "Zero-divisor cup-length and TC bounds for powers of RP^m"
)]
struct Cli {
    /// Cap on the ring basis size (m+1)^s.
    #[arg(long, global = true, default_value_t = DEFAULT_BASIS_LIMIT)]
    limit_bits: u64,

    /// Cap on the number of generator words examined by an exact search.
    #[arg(long, global = true, default_value_t = SearchLimits::default().max_candidates)]
    max_candidates: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print e, z(m) and sigma for m.
    Profile {
        #[arg(long)]
        m: u32,
    },
    /// Cup-length computations.
    #[command(subcommand)]
    Zcl(ZclCommand),
    /// Computational checks of structural facts.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Table of bounds for TC_s(RP^m).
    Report(ReportArgs),
}

#[derive(Subcommand)]
enum ZclCommand {
    /// Certified maximum by exhaustive search.
    Exact {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
    },
    /// The explicit witness construction only.
    Witness {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
    },
    /// G(m, s) for s = 2..=s-max.
    Probe {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s_max: u32,
    },
}

#[derive(Subcommand)]
enum VerifyCommand {
    /// Zero-divisors = ideal generated by x_i + x_s, degree by degree.
    Generators {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        s: u32,
        #[arg(long)]
        max_degree: Option<u32>,
    },
    /// Component structure of U_j in the join J_k((Z/2)^{s-1}).
    Join {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 0x5eed)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    Exact,
    WitnessOnly,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Args)]
struct ReportArgs {
    /// Inclusive range `A..B`.
    #[arg(long, value_parser = parse_range)]
    m_range: RangeInclusive<u32>,
    /// Inclusive range `C..D`.
    #[arg(long, value_parser = parse_range)]
    s_range: RangeInclusive<u32>,
    #[arg(long, value_enum, default_value = "exact")]
    policy: PolicyArg,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Append-only result cache (JSON lines).
    #[arg(long, env = "ZCL_CACHE")]
    cache: Option<PathBuf>,
}

fn parse_range(text: &str) -> Result<RangeInclusive<u32>, String> {
    let (a, b) = text
        .split_once("..")
        .ok_or_else(|| format!("expected A..B, got {text:?}"))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let a: u32 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: u32 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {text:?}"));
    }
    Ok(a..=b)
}

#[derive(Serialize)]
struct ZclOutput {
    m: u32,
    s: u32,
    zcl: Option<u32>,
    method: &'static str,
    g: Option<u32>,
    witness: Option<WitnessRecord>,
    elapsed_ms: u128,
}

impl ZclOutput {
    fn new(m: u32, s: u32, method: &'static str, result: Option<&ZclResult>, started: Instant) -> Self {
        ZclOutput {
            m,
            s,
            zcl: result.map(|r| r.value),
            method,
            g: result.map(|r| g_value(r).value),
            witness: result.map(|r| r.witness.to_record()),
            elapsed_ms: started.elapsed().as_millis(),
        }
    }
}

#[derive(Serialize)]
struct ProbeOutput {
    #[serde(flatten)]
    probe: GProbe,
    elapsed_ms: u128,
}

enum Failure {
    Undetermined(String),
    Defect(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_undetermined() {
            Failure::Undetermined(e.to_string())
        } else {
            Failure::Defect(e.to_string())
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Defect(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Defect(e.to_string())
    }
}

fn print_json<T: Serialize>(value: &T) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let limits = SearchLimits {
        basis_limit: cli.limit_bits,
        max_candidates: cli.max_candidates,
    };
    match cli.command {
        Command::Profile { m } => {
            if m == 0 {
                return Err(Failure::Defect("m must be at least 1".into()));
            }
            print_json(&TwoAdicProfile::of(m as u64))
        }
        Command::Zcl(ZclCommand::Exact { m, s }) => {
            let started = Instant::now();
            let r = zcl_exact_with(m, s, &limits)?;
            print_json(&ZclOutput::new(m, s, r.method.as_str(), Some(&r), started))
        }
        Command::Zcl(ZclCommand::Witness { m, s }) => {
            let started = Instant::now();
            let r = zcl_from_witness(m, s, limits.basis_limit)?;
            print_json(&ZclOutput::new(m, s, "paper-lower-bound", r.as_ref(), started))?;
            match r {
                Some(_) => Ok(()),
                None => Err(Failure::Undetermined(format!(
                    "no explicit construction applies to m={m}, s={s}"
                ))),
            }
        }
        Command::Zcl(ZclCommand::Probe { m, s_max }) => {
            let started = Instant::now();
            let probe = g_stabilization_probe(m, s_max, &limits)?;
            print_json(&ProbeOutput {
                probe,
                elapsed_ms: started.elapsed().as_millis(),
            })
        }
        Command::Verify(VerifyCommand::Generators { m, s, max_degree }) => {
            let spec = RingSpec::with_limit(m, s, limits.basis_limit)?;
            let max_degree = max_degree.unwrap_or(spec.top_degree()).min(spec.top_degree());
            let mut failed = Vec::new();
            for d in 1..=max_degree {
                let check = check_degree(spec, d);
                if !check.pass {
                    failed.push(d);
                }
                print_json(&check)?;
            }
            if failed.is_empty() {
                Ok(())
            } else {
                Err(Failure::Defect(format!(
                    "kernel and ideal differ in degrees {failed:?}"
                )))
            }
        }
        Command::Verify(VerifyCommand::Join { s, k, samples, seed }) => {
            let report = verify_join(s, k, samples, seed)?;
            print_json(&report)?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Defect("join component check failed".into()))
            }
        }
        Command::Report(args) => report(args, limits),
    }
}

fn report(args: ReportArgs, limits: SearchLimits) -> Result<(), Failure> {
    let ctx = RowContext {
        limits,
        cache: args
            .cache
            .map(|p| Cache::new(p).with_basis_limit(limits.basis_limit)),
    };
    let policy = match args.policy {
        PolicyArg::Exact => Policy::Exact,
        PolicyArg::WitnessOnly => Policy::WitnessOnly,
    };
    let format = match args.format {
        FormatArg::Json => Format::Json,
        FormatArg::Csv => Format::Csv,
    };
    let mut rows: Vec<BoundsRow> = Vec::new();
    let mut skipped = Vec::new();
    for m in args.m_range.clone() {
        for s in args.s_range.clone() {
            match build_row(m, s, policy, &ctx) {
                Ok(row) => rows.push(row),
                Err(e) if e.is_undetermined() => {
                    eprintln!("skipping m={m}, s={s}: {e}");
                    skipped.push((m, s));
                }
                Err(e) => return Err(e.into()),
            }
        }
    }
    let mut out = io::stdout().lock();
    emit(&rows, format, &mut out)?;
    out.flush()?;
    if skipped.is_empty() {
        Ok(())
    } else {
        Err(Failure::Undetermined(format!(
            "{} row(s) undetermined",
            skipped.len()
        )))
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Undetermined(msg)) => {
            eprintln!("undetermined: {msg}");
            ExitCode::from(EXIT_UNDETERMINED)
        }
        Err(Failure::Defect(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_DEFECT)
        }
    }
}
