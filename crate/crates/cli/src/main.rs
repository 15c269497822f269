//! `sumsets` — sumset computations, theorem sweeps, and exhaustive
//! size scans with deterministic JSON/CSV reports.
//!
//! Exit codes: 0 success, 1 precondition or parse error, 2 guard or cap
//! refusal, 3 verification failure.

mod cache;
mod report;

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sumset_core::{
    disjointness_threshold, h_fold_sumset, layer_intersection_size, layer_intervals,
    layer_size_formula, popular_set, predicted_popular_size, problem1_scan, problem2_scan_with,
    verify_theorem, Error as CoreError, ExplorerOptions, IntSet, SearchSpace,
};

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(
    name = "sumsets",
    version,
    about = "Exact h-fold sumset sizes: compute, verify, and search"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputOpts {
    /// Report format
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report to this file instead of standard output
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Reuse results from this directory when parameters match
    #[arg(long, value_name = "PATH")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct ScanOpts {
    /// Worker threads for the scan
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Refuse scans visiting more candidate sets than this
    #[arg(long, default_value_t = sumset_core::DEFAULT_ENUM_GUARD)]
    guard: u64,
}

impl ScanOpts {
    fn explorer(&self) -> ExplorerOptions {
        ExplorerOptions {
            jobs: self.jobs,
            guard: self.guard,
        }
    }
}

#[derive(Clone)]
struct SetLiteral(Vec<i64>);

fn parse_set_literal(raw: &str) -> Result<SetLiteral, String> {
    let mut elements = Vec::new();
    for part in raw.split(',') {
        let part = part.trim();
        let value: i64 = part
            .parse()
            .map_err(|_| format!("invalid integer {part:?} in set literal"))?;
        elements.push(value);
    }
    // duplicates are an error: collapsing them would change k
    let set = IntSet::new(elements).map_err(|e| e.to_string())?;
    Ok(SetLiteral(set.elements().to_vec()))
}

#[derive(Subcommand)]
enum Command {
    /// Compute the h-fold sumset of an explicit set
    Sumset {
        /// Comma-separated integers, e.g. 0,1,4
        #[arg(long, value_parser = parse_set_literal)]
        set: SetLiteral,
        #[arg(long)]
        h: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Check computed vs. predicted sizes of the popular family at h
    Verify {
        #[arg(long)]
        h: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Enumerate achieved sizes over canonical k-sets with max <= N
    Range {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_element: i64,
        #[command(flatten)]
        scan: ScanOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Frequency table of sizes over canonical k-sets with max <= N
    Histogram {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        max_element: i64,
        #[command(flatten)]
        scan: ScanOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Sizes of {0, 1, h+1, h^2+h+1-p} over p in [0, h^2-1]
    Scan1 {
        #[arg(long)]
        h: u32,
        /// Restrict the scan to a single p
        #[arg(long)]
        p: Option<i64>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Sizes of {0, 1, a, b} for 2 <= a <= h, a+1 <= b <= ha+1
    Scan2 {
        #[arg(long)]
        h: u32,
        #[command(flatten)]
        scan: ScanOpts,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Layer decomposition of the popular set at (h, i0)
    Decompose {
        #[arg(long)]
        h: u32,
        #[arg(long)]
        i0: u32,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Debug)]
enum CliError {
    Core(CoreError),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

fn refusal(err: &CliError) -> bool {
    matches!(
        err,
        CliError::Core(CoreError::GuardExceeded { .. }) | CliError::Core(CoreError::CapExceeded { .. })
    )
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(if refusal(&err) { 2 } else { 1 })
        }
    }
}

struct Invocation {
    name: &'static str,
    /// Everything the run depended on, echoed in the JSON envelope.
    params: Value,
    /// Result-determining parameters only; the cache key. Worker count
    /// and guard are excluded: reports are identical across them.
    cache_params: Value,
    out: OutputOpts,
}

fn run(command: Command) -> Result<u8, CliError> {
    match command {
        Command::Sumset { set, h, out } => {
            let input = IntSet::from_sorted(set.0.clone())?;
            let invocation = Invocation {
                name: "sumset",
                params: json!({"set": set.0, "h": h}),
                cache_params: json!({"set": set.0, "h": h}),
                out,
            };
            execute(invocation, move || {
                let sumset = h_fold_sumset(&input, h)?;
                Ok(report::sumset_results(&input, h, &sumset))
            })
        }
        Command::Verify { h, out } => {
            let invocation = Invocation {
                name: "verify",
                params: json!({"h": h}),
                cache_params: json!({"h": h}),
                out,
            };
            execute(invocation, move || {
                Ok(report::verify_results(&verify_theorem(h)?))
            })
        }
        Command::Range {
            h,
            k,
            max_element,
            scan,
            out,
        } => {
            let opts = scan.explorer();
            let invocation = Invocation {
                name: "range",
                params: json!({
                    "h": h, "k": k, "max_element": max_element,
                    "jobs": scan.jobs, "guard": scan.guard,
                }),
                cache_params: json!({"h": h, "k": k, "max_element": max_element}),
                out,
            };
            execute(invocation, move || {
                let space = SearchSpace::canonical_all(k, max_element)?;
                let report = sumset_core::enumerate_sizes_with(h, &space, &opts)?;
                Ok(report::range_results(&report))
            })
        }
        Command::Histogram {
            h,
            k,
            max_element,
            scan,
            out,
        } => {
            let opts = scan.explorer();
            let invocation = Invocation {
                name: "histogram",
                params: json!({
                    "h": h, "k": k, "max_element": max_element,
                    "jobs": scan.jobs, "guard": scan.guard,
                }),
                cache_params: json!({"h": h, "k": k, "max_element": max_element}),
                out,
            };
            execute(invocation, move || {
                let space = SearchSpace::canonical_all(k, max_element)?;
                let report = sumset_core::popularity_histogram_with(h, &space, &opts)?;
                Ok(report::histogram_results(&report))
            })
        }
        Command::Scan1 { h, p, out } => {
            let invocation = Invocation {
                name: "scan1",
                params: json!({"h": h, "p": p}),
                cache_params: json!({"h": h, "p": p}),
                out,
            };
            execute(invocation, move || {
                let mut rows = problem1_scan(h)?;
                if let Some(p) = p {
                    rows.retain(|row| row.p == p);
                    if rows.is_empty() {
                        return Err(CoreError::Domain(format!(
                            "p = {p} outside [0, {}]",
                            h as i64 * h as i64 - 1
                        )));
                    }
                }
                Ok(report::scan1_results(h, &rows))
            })
        }
        Command::Scan2 { h, scan, out } => {
            let opts = scan.explorer();
            let invocation = Invocation {
                name: "scan2",
                params: json!({"h": h, "jobs": scan.jobs, "guard": scan.guard}),
                cache_params: json!({"h": h}),
                out,
            };
            execute(invocation, move || {
                Ok(report::range_results(&problem2_scan_with(h, &opts)?))
            })
        }
        Command::Decompose { h, i0, out } => {
            let invocation = Invocation {
                name: "decompose",
                params: json!({"h": h, "i0": i0}),
                cache_params: json!({"h": h, "i0": i0}),
                out,
            };
            execute(invocation, move || decompose(h, i0))
        }
    }
}

fn decompose(h: u32, i0: u32) -> Result<Value, CoreError> {
    let family = popular_set(h, i0)?;
    let mut layers = Vec::with_capacity(h as usize + 1);
    let mut formula_sizes = Vec::with_capacity(h as usize + 1);
    let mut union = BTreeSet::new();
    for i in 0..=h {
        let layer = layer_intervals(&family, i)?;
        union.extend(layer.elements()?.iter());
        formula_sizes.push(layer_size_formula(h, i)?);
        layers.push(layer);
    }
    let mut t1_intersections = Vec::with_capacity(h as usize);
    for i in 0..h {
        t1_intersections.push(layer_intersection_size(&family, i, 1)?);
    }
    let data = report::DecomposeData {
        predicted_size: predicted_popular_size(h, i0)?,
        sumset_size: h_fold_sumset(&family.set, h)?.len() as u64,
        union_size: union.len() as u64,
        threshold: disjointness_threshold(&family)?,
        family,
        layers,
        t1_intersections,
        formula_sizes,
    };
    Ok(report::decompose_results(&data))
}

fn execute(
    invocation: Invocation,
    compute: impl FnOnce() -> Result<Value, CoreError>,
) -> Result<u8, CliError> {
    let started = Instant::now();
    let key = cache::key(VERSION, invocation.name, &invocation.cache_params);
    let cached = invocation
        .out
        .cache_dir
        .as_deref()
        .and_then(|dir| cache::load(dir, &key))
        .filter(|v| report::schema_ok(invocation.name, v));
    let results = match cached {
        Some(results) => results,
        None => {
            let results = compute()?;
            if let Some(dir) = invocation.out.cache_dir.as_deref() {
                cache::store(dir, &key, &results).map_err(CliError::Io)?;
            }
            results
        }
    };

    let mut verification_failed = false;
    if invocation.name == "verify" {
        let rows = results["rows"].as_array().map_or(&[][..], |r| r);
        let passed = rows.iter().filter(|r| r["pass"] == Value::Bool(true)).count();
        verification_failed = results.get("all_pass").and_then(Value::as_bool) != Some(true);
        eprintln!(
            "verify h={}: {}/{} rows pass",
            results["h"],
            passed,
            rows.len()
        );
    }

    let rendered = match invocation.out.format {
        Format::Json => {
            let envelope = json!({
                "command": invocation.name,
                "params": invocation.params,
                "artifact_version": VERSION,
                "results": results,
                "elapsed_ms": started.elapsed().as_millis() as u64,
            });
            let mut text =
                serde_json::to_string_pretty(&envelope).expect("report serialization");
            text.push('\n');
            text
        }
        Format::Csv => report::render_csv(invocation.name, &results),
    };

    match &invocation.out.output {
        Some(path) => fs::write(path, rendered).map_err(CliError::Io)?,
        None => print!("{rendered}"),
    }
    Ok(if verification_failed { 3 } else { 0 })
}
