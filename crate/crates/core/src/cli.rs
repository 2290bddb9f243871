//! Command-line front end.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::casimir::{
    c2_eigenvalue, c2_is_injective, center_basis, degeneracy_search, isotypic_blocks_with_tol, spectrum,
    CenterBasis,
};
use crate::closure::{lie_closure, preset, subspace_controllability, ControllabilityReport, GeneratorSet};
use crate::error::{Error, Result};
use crate::linalg::{CLUSTER_TOL, RANK_TOL};
use crate::rep_theory::{
    cg_decompose, center_dimension, irrep_dimension, symmetric_algebra_dimension, IWeight,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_UNSATURATED: i32 = 2;
pub const EXIT_NUMERICAL: i32 = 3;

/// Largest `d^n` for which `center` materializes the center basis.
const CENTER_MATERIALIZE_LIMIT: usize = 4096;

#[derive(Debug, Parser)]
#[command(name = "symqudit", version, about = "Subspace controllability of symmetric qudit networks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Irreps of (C^d)^{⊗n} with dimensions and multiplicities.
    Decompose(SizeArgs),
    /// Dimension of the center of u^{S_n}(d^n).
    Center(SizeArgs),
    /// Isotypic blocks from the Casimir spectrum.
    Spectrum(SpectrumArgs),
    /// Lie closure and per-block controllability verdicts.
    Closure(ClosureArgs),
    /// All (p, q) sharing the su(3) quadratic Casimir value of (p0, q0).
    Degeneracy(DegeneracyArgs),
}

#[derive(Debug, Args)]
pub struct SizeArgs {
    /// Local dimension.
    #[arg(long)]
    pub d: usize,
    /// Number of sites.
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub size: SizeArgs,
    /// Relative gap separating eigenvalue clusters.
    #[arg(long, default_value_t = CLUSTER_TOL)]
    pub cluster_tol: f64,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["preset", "spec"])))]
pub struct ClosureArgs {
    /// Named generator set, e.g. `qutrits:n=3:H`.
    #[arg(long)]
    pub preset: Option<String>,
    /// Generator-spec JSON file.
    #[arg(long)]
    pub spec: Option<PathBuf>,
    /// Must match the generators' local dimension when given.
    #[arg(long)]
    pub d: Option<usize>,
    /// Must match the generators' site count when given.
    #[arg(long)]
    pub n: Option<usize>,
    /// Rank tolerance of the closure.
    #[arg(long, default_value_t = RANK_TOL)]
    pub tol: f64,
    /// Relative gap separating Casimir eigenvalue clusters.
    #[arg(long, default_value_t = CLUSTER_TOL)]
    pub cluster_tol: f64,
    /// Dimension cap; defaults to dim u^{S_n}(d^n) = C(n+d²−1, d²−1).
    #[arg(long)]
    pub max_dim: Option<usize>,
}

#[derive(Debug, Args)]
pub struct DegeneracyArgs {
    #[arg(long)]
    pub p: u32,
    #[arg(long)]
    pub q: u32,
}

/// Rendered command output and its exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub body: String,
    pub code: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Unsaturated => EXIT_UNSATURATED,
        e if e.is_numerical() => EXIT_NUMERICAL,
        _ => EXIT_USAGE,
    }
}

/// Rounds to a multiple of 1e−12 so that output is stable across
/// platforms; negative zero prints as zero.
pub fn round12(x: f64) -> f64 {
    (x * 1e12).round() / 1e12 + 0.0
}

/// Parses `args` (including the program name), runs the command and
/// writes its output. Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let out_path = cli.out.clone();
    match execute(&cli) {
        Ok(out) => {
            let written = match &out_path {
                Some(p) => std::fs::write(p, &out.body),
                None => {
                    print!("{}", out.body);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            out.code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Decompose(a) => cmd_decompose(a.d, a.n, cli.format),
        Command::Center(a) => cmd_center(a.d, a.n, cli.format),
        Command::Spectrum(a) => cmd_spectrum(a.size.d, a.size.n, a.cluster_tol, cli.format),
        Command::Closure(a) => cmd_closure(a, cli.format),
        Command::Degeneracy(a) => cmd_degeneracy(a.p, a.q, cli.format),
    }
}

fn check_size(d: usize, n: usize) -> Result<()> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("--d must be ≥ 2, got {d}")));
    }
    if n < 1 {
        return Err(Error::InvalidArgument("--n must be ≥ 1".into()));
    }
    Ok(())
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable output");
    s.push('\n');
    s
}

fn ok(body: String) -> Result<Output> {
    Ok(Output { body, code: EXIT_OK })
}

fn label(w: &[u32]) -> String {
    let parts: Vec<String> = w.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

#[derive(Debug, Serialize)]
struct DecomposeRow {
    iweight: Vec<u32>,
    dim: u64,
    multiplicity: u64,
}

#[derive(Debug, Serialize)]
struct DecomposeReport {
    d: usize,
    n: usize,
    rows: Vec<DecomposeRow>,
    total_dim: u64,
    sum_dim_squared: u64,
    distinct: usize,
    total_dim_ok: bool,
    sum_dim_squared_ok: bool,
    distinct_ok: bool,
}

pub fn cmd_decompose(d: usize, n: usize, format: Format) -> Result<Output> {
    check_size(d, n)?;
    let ms = cg_decompose(n, d)?;
    let rows: Vec<DecomposeRow> = ms
        .entries()
        .into_iter()
        .map(|(w, k)| DecomposeRow {
            iweight: w.with_size(n as u32).unwrap_or(w.clone()).entries().to_vec(),
            dim: irrep_dimension(&w),
            multiplicity: k,
        })
        .collect();
    let full = (d as u128).pow(n as u32);
    let ops = symmetric_algebra_dimension(n, d);
    let f = center_dimension(n, d);
    let report = DecomposeReport {
        d,
        n,
        total_dim: ms.total_dim(),
        sum_dim_squared: ms.sum_dim_squared(),
        distinct: ms.distinct(),
        total_dim_ok: ms.total_dim() as u128 == full,
        sum_dim_squared_ok: ms.sum_dim_squared() as u128 == ops,
        distinct_ok: ms.distinct() as u64 == f,
        rows,
    };
    if format == Format::Json {
        return ok(json(&report));
    }
    let verdict = |b: bool| if b { "OK" } else { "MISMATCH" };
    let mut s = String::new();
    writeln!(s, "{:<16} {:>10} {:>6}", "i-weight", "dim", "mult").unwrap();
    for r in &report.rows {
        writeln!(s, "{:<16} {:>10} {:>6}", label(&r.iweight), r.dim, r.multiplicity).unwrap();
    }
    writeln!(s, "sum k·dim = d^n: {} ({})", verdict(report.total_dim_ok), report.total_dim).unwrap();
    writeln!(
        s,
        "sum dim² = C(n+d²−1, d²−1): {} ({})",
        verdict(report.sum_dim_squared_ok),
        report.sum_dim_squared
    )
    .unwrap();
    writeln!(s, "distinct irreps = f(n,d): {} ({})", verdict(report.distinct_ok), report.distinct).unwrap();
    ok(s)
}

#[derive(Debug, Serialize)]
struct CenterReport {
    d: usize,
    n: usize,
    center_dim: u64,
    /// Dimension of the materialized center basis, when built.
    materialized_dim: Option<usize>,
}

pub fn cmd_center(d: usize, n: usize, format: Format) -> Result<Output> {
    check_size(d, n)?;
    let f = center_dimension(n, d);
    let materialized_dim = match d.checked_pow(n as u32) {
        Some(dim) if dim <= CENTER_MATERIALIZE_LIMIT => Some(center_basis(d, n)?.dim()),
        _ => None,
    };
    if let Some(m) = materialized_dim {
        if m as u64 != f {
            return Err(Error::UnresolvedDegeneracy(format!(
                "materialized center has dimension {m}, expected {f}"
            )));
        }
    }
    let report = CenterReport {
        d,
        n,
        center_dim: f,
        materialized_dim,
    };
    if format == Format::Json {
        return ok(json(&report));
    }
    let mut s = format!("{f}\n");
    match materialized_dim {
        Some(m) => writeln!(s, "center basis built: {m} block projectors").unwrap(),
        None => writeln!(s, "center basis not built (d^n > {CENTER_MATERIALIZE_LIMIT})").unwrap(),
    }
    ok(s)
}

#[derive(Debug, Serialize)]
struct SpectrumReport {
    d: usize,
    n: usize,
    c2_injective: bool,
    blocks: Vec<crate::casimir::SpectrumEntry>,
}

pub fn cmd_spectrum(d: usize, n: usize, cluster_tol: f64, format: Format) -> Result<Output> {
    check_size(d, n)?;
    let injective = c2_is_injective(d, n)?;
    let blocks = isotypic_blocks_with_tol(d, n, cluster_tol)?;
    let entries = spectrum(&blocks);
    if format == Format::Json {
        return ok(json(&SpectrumReport {
            d,
            n,
            c2_injective: injective,
            blocks: entries,
        }));
    }
    let mut s = String::new();
    writeln!(s, "{:<16} {:>10} {:>8} {:>18}", "block", "block_dim", "cluster", "C2").unwrap();
    for (e, b) in entries.iter().zip(&blocks) {
        writeln!(
            s,
            "{:<16} {:>10} {:>8} {:>18}",
            label(&e.block_label),
            e.block_dim,
            e.c2_cluster_index,
            round12(b.c2_value)
        )
        .unwrap();
    }
    if !injective {
        writeln!(s, "C2 is degenerate across labels; blocks were separated with C3").unwrap();
    }
    ok(s)
}

fn load_generators(a: &ClosureArgs) -> Result<GeneratorSet> {
    let gens = match (&a.preset, &a.spec) {
        (Some(name), None) => preset(name)?,
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
            GeneratorSet::from_spec_json(&text)?
        }
        _ => return Err(Error::InvalidArgument("give exactly one of --preset and --spec".into())),
    };
    if let Some(d) = a.d {
        if d != gens.d() {
            return Err(Error::InvalidArgument(format!("--d {d} but generators act on d={}", gens.d())));
        }
    }
    if let Some(n) = a.n {
        if n != gens.n() {
            return Err(Error::InvalidArgument(format!("--n {n} but generators act on n={}", gens.n())));
        }
    }
    Ok(gens)
}

pub fn closure_report(a: &ClosureArgs) -> Result<ControllabilityReport> {
    if !(a.tol > 0.0 && a.cluster_tol > 0.0) {
        return Err(Error::InvalidArgument("tolerances must be positive".into()));
    }
    let gens = load_generators(a)?;
    let (d, n) = (gens.d(), gens.n());
    let max_dim = match a.max_dim {
        Some(m) => m,
        None => usize::try_from(symmetric_algebra_dimension(n, d)).unwrap_or(usize::MAX),
    };
    let closure = lie_closure(&gens, a.tol, max_dim)?;
    if !closure.saturated {
        return Ok(ControllabilityReport {
            blocks: Vec::new(),
            center_dim: 0,
            total_dim: closure.dim,
            subspace_controllable: false,
            saturated: false,
            rounds: closure.rounds,
        });
    }
    let blocks = isotypic_blocks_with_tol(d, n, a.cluster_tol)?;
    let cb = CenterBasis::from_blocks(&blocks);
    subspace_controllability(&closure, &blocks, &cb)
}

pub fn cmd_closure(a: &ClosureArgs, format: Format) -> Result<Output> {
    let report = closure_report(a)?;
    let code = if report.saturated { EXIT_OK } else { EXIT_UNSATURATED };
    let body = if format == Format::Json {
        json(&report)
    } else {
        let mut s = String::new();
        if report.saturated {
            writeln!(
                s,
                "{:<16} {:>10} {:>6} {:>11} {:>8} {:>4}",
                "block", "irrep_dim", "mult", "restricted", "target", "ok"
            )
            .unwrap();
            for b in &report.blocks {
                writeln!(
                    s,
                    "{:<16} {:>10} {:>6} {:>11} {:>8} {:>4}",
                    label(&b.label),
                    b.irrep_dim,
                    b.multiplicity,
                    b.restricted_dim,
                    b.irrep_dim * b.irrep_dim - 1,
                    if b.ok { "yes" } else { "no" }
                )
                .unwrap();
            }
            writeln!(s, "center_dim: {}", report.center_dim).unwrap();
        }
        writeln!(s, "total_dim: {}", report.total_dim).unwrap();
        writeln!(s, "saturated: {} (rounds: {})", report.saturated, report.rounds).unwrap();
        writeln!(s, "subspace_controllable: {}", report.subspace_controllable).unwrap();
        s
    };
    Ok(Output { body, code })
}

#[derive(Debug, Serialize)]
struct DegeneracyReport {
    seed: (u32, u32),
    c2: i64,
    pairs: Vec<(u32, u32)>,
}

pub fn cmd_degeneracy(p: u32, q: u32, format: Format) -> Result<Output> {
    let c2 = c2_eigenvalue(p as i64, q as i64)?;
    let pairs = degeneracy_search(p, q);
    if format == Format::Json {
        return ok(json(&DegeneracyReport { seed: (p, q), c2, pairs }));
    }
    let list: Vec<String> = pairs.iter().map(|(a, b)| format!("({a},{b})")).collect();
    ok(format!("c2({p},{q}) = {c2}\n{}\n", list.join(" ")))
}

/// Text label of an i-weight, as printed in tables.
pub fn format_iweight(w: &IWeight) -> String {
    label(w.entries())
}
