//! Command-line front end.
//!
//! Exit codes: 0 success, 1 a `check` suite failed, 2 usage or precondition
//! error, 3 I/O error.

mod render;
mod svg;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{
    conic_bundle_threshold, default_sieve_limit, genus_threshold_holds, min_degree_for_genus,
    BoundEngine, Hypersurface,
};
use crate::error::Error;
use crate::sweep::{grid_with_engine, intro_table, run_checks, CheckLimits};

pub use render::ThresholdResult;
pub use svg::{render_svg, PALETTE};

/// Environment variable overriding the prime sieve limit.
pub const SIEVE_LIMIT_VAR: &str = "FIBGEN_SIEVE_LIMIT";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Human,
    Json,
    Csv,
    Svg,
}

#[derive(Debug, Parser)]
#[command(
    name = "fibgen",
    version,
    about = "Certified bounds on the fibering genus of very general hypersurfaces X_{n,d} in P^{n+1}"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// All certificates and the best lower bound for one (n, d)
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        d: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Degree thresholds for fib.gen >= 1, 2, 3, 5, 6, 8, 9
    Table {
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Best lower bound over a rectangle of (n, d)
    Grid {
        #[arg(long, default_value_t = 3)]
        n_min: u64,
        #[arg(long)]
        n_max: u64,
        #[arg(long, default_value_t = 1)]
        d_min: u64,
        #[arg(long)]
        d_max: u64,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        /// Write to this file (atomically) instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Least degree guaranteeing fib.gen >= g + 1 in dimension n
    Threshold {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        g: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
    /// Run the oracle, identity and soundness suites
    Check {
        #[arg(long, default_value_t = 120)]
        n_max: u64,
        #[arg(long, default_value_t = 240)]
        d_max: u64,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Bound(#[from] Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{0} check suite(s) failed")]
    ChecksFailed(usize),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Bound(_) => 2,
            CliError::Io { .. } => 3,
            CliError::ChecksFailed(_) => 1,
        }
    }
}

fn stdout_err(source: io::Error) -> CliError {
    CliError::Io { path: "<stdout>".into(), source }
}

/// Process entry point.
pub fn main() -> ExitCode {
    let sieve = std::env::var(SIEVE_LIMIT_VAR).ok();
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(std::env::args_os(), sieve.as_deref(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. `sieve_override` is the value of [`SIEVE_LIMIT_VAR`], if set.
pub fn run<I, T>(args: I, sieve_override: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return e.exit_code();
        }
    };
    match execute(cli.command, sieve_override, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn parse_sieve_override(raw: Option<&str>) -> Result<Option<u64>, CliError> {
    match raw {
        None => Ok(None),
        Some(s) => match s.trim().parse::<u64>() {
            Ok(v) if v > 0 => Ok(Some(v)),
            _ => Err(CliError::Usage(format!(
                "{SIEVE_LIMIT_VAR} must be a positive integer (got {s:?})"
            ))),
        },
    }
}

/// The override can only enlarge the sieve; a smaller table would drop primes
/// the optimizers must see.
fn engine_for(n: u64, d: u64, sieve_override: Option<u64>) -> BoundEngine {
    let limit = default_sieve_limit(n, d).max(sieve_override.unwrap_or(0));
    BoundEngine::new(limit)
}

fn reject_svg(format: OutputFormat) -> Result<(), CliError> {
    if format == OutputFormat::Svg {
        return Err(CliError::Usage("--format svg is only supported by the grid subcommand".into()));
    }
    Ok(())
}

fn execute(command: Command, sieve: Option<&str>, out: &mut dyn Write) -> Result<(), CliError> {
    let sieve = parse_sieve_override(sieve)?;
    match command {
        Command::Bound { n, d, format } => {
            reject_svg(format)?;
            let h = Hypersurface::new(n, d)?;
            let report = engine_for(n, d, sieve).combined_bound(h)?;
            let text = match format {
                OutputFormat::Human => render::report_human(&report),
                OutputFormat::Json => render::json(&report.to_record()),
                OutputFormat::Csv => render::report_csv(&report),
                OutputFormat::Svg => unreachable!(),
            };
            out.write_all(text.as_bytes()).map_err(stdout_err)
        }
        Command::Table { format } => {
            reject_svg(format)?;
            let rows = intro_table();
            let text = match format {
                OutputFormat::Human => render::table_human(&rows),
                OutputFormat::Json => render::json(&render::table_records(&rows)),
                OutputFormat::Csv => render::table_csv(&rows),
                OutputFormat::Svg => unreachable!(),
            };
            out.write_all(text.as_bytes()).map_err(stdout_err)
        }
        Command::Grid { n_min, n_max, d_min, d_max, format, out: path } => {
            let engine = engine_for(n_max, d_max, sieve);
            let cells = grid_with_engine(&engine, n_min, n_max, d_min, d_max)?;
            let text = match format {
                OutputFormat::Human => render::grid_human(&cells, n_min, n_max, d_min, d_max),
                OutputFormat::Json => render::json(&cells),
                OutputFormat::Csv => render::grid_csv(&cells),
                OutputFormat::Svg => render_svg(&cells, n_min, n_max, d_min, d_max),
            };
            match path {
                Some(p) => write_atomically(&p, text.as_bytes()),
                None => out.write_all(text.as_bytes()).map_err(stdout_err),
            }
        }
        Command::Threshold { n, g, format } => {
            reject_svg(format)?;
            if g == 0 && n >= 3 {
                return Err(CliError::Usage(format!(
                    "g must be >= 1; for g = 0 use the conic-bundle threshold: \
                     fib.gen >= 1 once d >= 3*ceil((n+3)/4) = {}",
                    conic_bundle_threshold(n)?
                )));
            }
            let (d_min, p) = min_degree_for_genus(n, g)?;
            let result = ThresholdResult {
                n,
                g,
                fibgen_at_least: g + 1,
                d_min,
                prime: p,
                holds_at_d_min: genus_threshold_holds(n, d_min, g, p)?,
                holds_below: genus_threshold_holds(n, d_min - 1, g, p)?,
            };
            let text = match format {
                OutputFormat::Human => render::threshold_human(&result),
                OutputFormat::Json => render::json(&result),
                OutputFormat::Csv => render::threshold_csv(&result),
                OutputFormat::Svg => unreachable!(),
            };
            out.write_all(text.as_bytes()).map_err(stdout_err)
        }
        Command::Check { n_max, d_max, format } => {
            reject_svg(format)?;
            if format == OutputFormat::Csv {
                return Err(CliError::Usage("check supports --format human or json".into()));
            }
            let results = run_checks(CheckLimits { n_max, d_max });
            let text = match format {
                OutputFormat::Json => render::json(&results),
                _ => render::checks_human(&results),
            };
            out.write_all(text.as_bytes()).map_err(stdout_err)?;
            match results.iter().filter(|r| !r.passed).count() {
                0 => Ok(()),
                k => Err(CliError::ChecksFailed(k)),
            }
        }
    }
}

fn write_atomically(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let io_err = |source| CliError::Io { path: path.display().to_string(), source };
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io_err)?;
    tmp.write_all(bytes).map_err(io_err)?;
    tmp.as_file().sync_all().map_err(io_err)?;
    tmp.persist(path).map_err(|e| io_err(e.error))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        call_env(args, None)
    }

    fn call_env(args: &[&str], sieve: Option<&str>) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("fibgen").chain(args.iter().copied());
        let code = run(argv, sieve, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn bound_json() {
        let (code, out, _) = call(&["bound", "--n", "3", "--d", "5", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["best_lower"], 2);
        assert_eq!(v["upper_genus"], 6);
        assert_eq!(v["upper_gonality"], 4);
    }

    #[test]
    fn bound_human_general_type() {
        let (code, out, _) = call(&["bound", "--n", "3", "--d", "10"]);
        assert_eq!(code, 0);
        assert!(out.contains("fib.gen >= 11 (GeneralTypeCovGon)"), "{out}");
    }

    #[test]
    fn bound_rejects_low_dimension() {
        let (code, _, err) = call(&["bound", "--n", "2", "--d", "5"]);
        assert_eq!(code, 2);
        assert!(err.contains("dimension n >= 3"), "{err}");
    }

    #[test]
    fn malformed_flags() {
        assert_eq!(call(&["bound", "--n", "x", "--d", "5"]).0, 2);
        assert_eq!(call(&["bound", "--n", "3"]).0, 2);
        assert_eq!(call(&["nope"]).0, 2);
        assert_eq!(call(&["bound", "--n", "3", "--d", "5", "--format", "svg"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn threshold_subcommand() {
        let (code, out, _) = call(&["threshold", "--n", "3", "--g", "1", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!((v["d_min"].as_u64(), v["prime"].as_u64()), (Some(5), Some(5)));
        assert_eq!(v["holds_at_d_min"], true);
        assert_eq!(v["holds_below"], false);

        let (code, _, err) = call(&["threshold", "--n", "3", "--g", "0"]);
        assert_eq!(code, 2);
        assert!(err.contains("conic-bundle"), "{err}");
    }

    #[test]
    fn sieve_override() {
        let args = ["bound", "--n", "3", "--d", "5", "--format", "json"];
        let base = call(&args);
        assert_eq!(call_env(&args, Some("100000")).1, base.1);
        // a too-small override cannot shrink the table
        assert_eq!(call_env(&args, Some("3")).1, base.1);
        assert_eq!(call_env(&args, Some("zero")).0, 2);
        assert_eq!(call_env(&args, Some("0")).0, 2);
    }

    #[test]
    fn unwritable_output_path() {
        let (code, _, _) = call(&[
            "grid", "--n-max", "3", "--d-max", "3", "--out", "/nonexistent-dir/x/grid.csv",
        ]);
        assert_eq!(code, 3);
    }

    #[test]
    fn small_check_passes() {
        let (code, out, _) = call(&["check", "--n-max", "20", "--d-max", "40"]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().filter(|l| l.starts_with("PASS")).count(), 7);
    }
}
