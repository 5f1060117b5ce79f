//! Command-line front end. Every command builds a [`RunConfig`], calls one
//! library operation and writes the result, with the configuration and
//! library version embedded, as JSON or CSV.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::io::Write;
use std::path::PathBuf;

use crate::identity::{
    asymptotic_sweep, asymptotic_target, hl_identity, oracle_suite, verify_main_identity_with_zeros,
    zagier_c0, zagier_c0_auto, IdentityError, TransformPair,
};
use crate::lfunc::{delta_tau, LfuncError, SkInstance};
use crate::sum::PrecisionMode;
use crate::zeta::{bracket_zeros, find_zeros, ZetaError, ZetaZero, DEFAULT_A0};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable consulted when `--workers` is absent.
pub const WORKERS_ENV: &str = "SIEGEL_LAMBERT_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "siegel-lambert", version, about = "Lambert series of Siegel modular forms and their zero expansions")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args, Serialize)]
pub struct GlobalOpts {
    /// Summation mode.
    #[arg(long, global = true, value_enum, default_value_t = PrecisionArg::Standard)]
    pub precision: PrecisionArg,
    /// Write the artifact here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
    /// Worker threads (default: logical cores).
    #[arg(long, global = true, env = WORKERS_ENV)]
    pub workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum PrecisionArg {
    Standard,
    Extended,
}

impl From<PrecisionArg> for PrecisionMode {
    fn from(p: PrecisionArg) -> Self {
        match p {
            PrecisionArg::Standard => PrecisionMode::Standard,
            PrecisionArg::Extended => PrecisionMode::Extended,
        }
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be a positive number, got {s}"))
    }
}

#[derive(Debug, Clone, Subcommand, Serialize)]
#[serde(rename_all = "lowercase", tag = "command")]
pub enum Command {
    /// First zeros of ζ on the critical line.
    Zeros {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Exact coefficients τ(n), c_n and a(n).
    Coeffs {
        #[arg(long, default_value_t = 10)]
        k: u32,
        #[arg(long, default_value_t = 100)]
        terms: usize,
    },
    /// Both sides of the main identity at one α.
    Verify {
        #[arg(long, default_value_t = 10)]
        k: u32,
        #[arg(long, default_value_t = 1.0, value_parser = positive)]
        alpha: f64,
        #[arg(long, default_value_t = 100)]
        zeros: usize,
        /// Series length; by default each series stops at its tail bound.
        #[arg(long)]
        terms: Option<usize>,
    },
    /// α^k times the Lambert series along decreasing α.
    Asymptotic {
        #[arg(long, default_value_t = 10)]
        k: u32,
        #[arg(long, value_delimiter = ',', default_value = "0.1,0.03,0.01", value_parser = positive)]
        alphas: Vec<f64>,
        #[arg(long, default_value_t = 4096)]
        terms: usize,
    },
    /// The Hardy–Littlewood Möbius identity.
    Hl {
        #[arg(long, default_value_t = 1.0, value_parser = positive)]
        alpha: f64,
        #[arg(long, default_value_t = 100)]
        zeros: usize,
        #[arg(long, default_value_t = 1_000_000)]
        terms: usize,
    },
    /// Constant term c₀(y) of y^{12}|Δ|².
    C0 {
        #[arg(long, value_delimiter = ',', default_value = "0.05,0.02,0.01", value_parser = positive)]
        y: Vec<f64>,
        #[arg(long)]
        terms: Option<usize>,
    },
    /// All mutual-oracle closures at one α.
    Oracles {
        #[arg(long, default_value_t = 10)]
        k: u32,
        #[arg(long, default_value_t = 1.0, value_parser = positive)]
        alpha: f64,
        #[arg(long, default_value_t = 100)]
        zeros: usize,
    },
}

/// Everything that determines an output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    #[serde(flatten)]
    pub command: Command,
    pub precision: PrecisionArg,
    pub format: OutputFormat,
}

/// Failure of a run, mapped to an exit status.
#[derive(Debug)]
pub enum RunError {
    /// Bad configuration (exit 2).
    Config(String),
    /// A numerical tolerance could not be met (exit 3).
    Numerical(String),
    /// An oracle pair disagreed (exit 4).
    Oracle(String),
    Io(std::io::Error),
}

impl RunError {
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Config(_) => 2,
            RunError::Numerical(_) | RunError::Io(_) => 3,
            RunError::Oracle(_) => 4,
        }
    }

    fn kind(&self) -> &'static str {
        match self {
            RunError::Config(_) => "config",
            RunError::Numerical(_) => "numerical",
            RunError::Oracle(_) => "oracle_mismatch",
            RunError::Io(_) => "io",
        }
    }

    /// One-line JSON for standard error.
    pub fn to_json(&self) -> String {
        let message = match self {
            RunError::Config(m) | RunError::Numerical(m) | RunError::Oracle(m) => m.clone(),
            RunError::Io(e) => e.to_string(),
        };
        serde_json::json!({ "error": self.kind(), "message": message, "exit_code": self.exit_code() }).to_string()
    }
}

impl From<IdentityError> for RunError {
    fn from(e: IdentityError) -> Self {
        match e {
            IdentityError::InvalidArgument(m) => RunError::Config(m),
            IdentityError::Lfunc(l) => l.into(),
            IdentityError::Zeta(z) => z.into(),
            other => RunError::Numerical(other.to_string()),
        }
    }
}

impl From<LfuncError> for RunError {
    fn from(e: LfuncError) -> Self {
        match e {
            LfuncError::UnsupportedWeight(_) | LfuncError::InvalidArgument(_) => RunError::Config(e.to_string()),
            LfuncError::Zeta(z) => z.into(),
            other => RunError::Numerical(other.to_string()),
        }
    }
}

impl From<ZetaError> for RunError {
    fn from(e: ZetaError) -> Self {
        match e {
            ZetaError::InvalidArgument(m) => RunError::Config(m),
            other => RunError::Numerical(other.to_string()),
        }
    }
}

impl From<std::io::Error> for RunError {
    fn from(e: std::io::Error) -> Self {
        RunError::Io(e)
    }
}

impl From<csv::Error> for RunError {
    fn from(e: csv::Error) -> Self {
        RunError::Io(std::io::Error::other(e))
    }
}

fn pair(alpha: f64) -> Result<TransformPair, RunError> {
    Ok(TransformPair::new(alpha)?)
}

fn zeros_and_brackets(count: usize) -> Result<(Vec<ZetaZero>, Vec<crate::zeta::Bracket>), RunError> {
    let zeros = if count == 0 { Vec::new() } else { find_zeros(count)? };
    let brackets = bracket_zeros(&zeros, DEFAULT_A0);
    Ok((zeros, brackets))
}

/// A finished artifact: JSON payload and, where a table exists, CSV rows.
struct Artifact {
    json: serde_json::Value,
    csv: Option<(Vec<&'static str>, Vec<Vec<String>>)>,
}

fn table(header: Vec<&'static str>, rows: Vec<Vec<String>>) -> Option<(Vec<&'static str>, Vec<Vec<String>>)> {
    Some((header, rows))
}

fn execute(cfg: &RunConfig) -> Result<Artifact, RunError> {
    let mode: PrecisionMode = cfg.precision.into();
    match cfg.command.clone() {
        Command::Zeros { count } => {
            if count == 0 {
                return Err(RunError::Config("--count must be at least 1".into()));
            }
            let zeros = find_zeros(count)?;
            let rows = zeros.iter().map(|z| vec![z.index.to_string(), format!("{:.12}", z.gamma), format!("{:e}", z.tol)]).collect();
            Ok(Artifact { json: serde_json::to_value(&zeros).unwrap(), csv: table(vec!["index", "gamma", "tol"], rows) })
        }
        Command::Coeffs { k, terms } => {
            let inst = SkInstance::new(k, terms, 1.0)?;
            let tau = delta_tau(terms);
            let rows: Vec<Vec<String>> = (0..terms)
                .map(|i| vec![(i + 1).to_string(), tau[i].to_string(), inst.c_exact()[i].to_string(), inst.a_exact()[i].to_string()])
                .collect();
            // Exact integers exceed binary64, so JSON carries them as decimal strings.
            let json_rows: Vec<serde_json::Value> = rows
                .iter()
                .enumerate()
                .map(|(i, r)| serde_json::json!({ "n": i + 1, "tau": r[1], "c_n": r[2], "a_n": r[3] }))
                .collect();
            Ok(Artifact {
                json: serde_json::json!({ "instance": inst.describe(), "coefficients": json_rows }),
                csv: table(vec!["n", "tau", "c_n", "a_n"], rows),
            })
        }
        Command::Verify { k, alpha, zeros, terms } => {
            let p = pair(alpha)?;
            let inst = SkInstance::new(k, terms.unwrap_or(4096), 1.0)?;
            let (zs, brackets) = zeros_and_brackets(zeros)?;
            let report = verify_main_identity_with_zeros(&inst, p, &zs, &brackets, terms, mode)?;
            let rows = report.zero_sum_partials.iter().map(|z| vec![z.bracket.to_string(), format!("{:e}", z.cum)]).collect();
            Ok(Artifact { json: serde_json::to_value(&report).unwrap(), csv: table(vec!["bracket", "cum"], rows) })
        }
        Command::Asymptotic { k, alphas, terms } => {
            let inst = SkInstance::new(k, terms, 1.0)?;
            let sweep = asymptotic_sweep(&inst, &alphas, mode)?;
            let rows = sweep.iter().map(|s| vec![format!("{}", s.alpha), format!("{:e}", s.scaled_lhs)]).collect();
            Ok(Artifact {
                json: serde_json::json!({ "target": asymptotic_target(&inst), "sweep": sweep }),
                csv: table(vec!["alpha", "scaled_lhs"], rows),
            })
        }
        Command::Hl { alpha, zeros, terms } => {
            let p = pair(alpha)?;
            let (zs, brackets) = zeros_and_brackets(zeros)?;
            let report = hl_identity(p, &zs, &brackets, terms, mode)?;
            let rows = report.rhs_partials.iter().map(|z| vec![z.bracket.to_string(), format!("{:e}", z.cum)]).collect();
            Ok(Artifact { json: serde_json::to_value(&report).unwrap(), csv: table(vec!["bracket", "cum"], rows) })
        }
        Command::C0 { y, terms } => {
            let values = y
                .iter()
                .map(|&yv| match terms {
                    Some(n) => zagier_c0(yv, n, mode),
                    None => zagier_c0_auto(yv, mode),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let rows = y.iter().zip(&values).map(|(yv, v)| vec![format!("{yv}"), format!("{:e}", v.value)]).collect();
            let json: Vec<serde_json::Value> = y
                .iter()
                .zip(&values)
                .map(|(yv, v)| serde_json::json!({ "y": yv, "c0": v.value, "n_terms": v.n_terms, "tail_bound": v.tail_bound }))
                .collect();
            Ok(Artifact { json: serde_json::Value::Array(json), csv: table(vec!["y", "c0"], rows) })
        }
        Command::Oracles { k, alpha, zeros } => {
            let p = pair(alpha)?;
            let inst = SkInstance::new(k, 4096, 1.0)?;
            let (zs, brackets) = zeros_and_brackets(zeros)?;
            let checks = oracle_suite(&inst, p, &zs, &brackets, mode)?;
            let failed: Vec<&str> = checks.iter().filter(|c| !c.pass).map(|c| c.name.as_str()).collect();
            if !failed.is_empty() {
                return Err(RunError::Oracle(format!("oracle mismatch: {}", failed.join(", "))));
            }
            let rows = checks
                .iter()
                .map(|c| vec![c.name.clone(), format!("{:e}", c.value), format!("{:e}", c.reference), format!("{:e}", c.rel_err), c.pass.to_string()])
                .collect();
            Ok(Artifact { json: serde_json::to_value(&checks).unwrap(), csv: table(vec!["name", "value", "reference", "rel_err", "pass"], rows) })
        }
    }
}

fn render(cfg: &RunConfig, art: Artifact) -> Result<Vec<u8>, RunError> {
    match cfg.format {
        OutputFormat::Json => {
            let doc = serde_json::json!({ "version": VERSION, "config": cfg, "result": art.json });
            let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
            s.push('\n');
            Ok(s.into_bytes())
        }
        OutputFormat::Csv => {
            let (header, rows) = art.csv.ok_or_else(|| RunError::Config("no CSV form for this command".into()))?;
            let mut buf = Vec::new();
            writeln!(buf, "# version={VERSION}")?;
            writeln!(buf, "# config={}", serde_json::to_string(cfg).expect("serializable"))?;
            {
                let mut w = csv::Writer::from_writer(&mut buf);
                w.write_record(&header)?;
                for r in rows {
                    w.write_record(&r)?;
                }
                w.flush()?;
            }
            Ok(buf)
        }
    }
}

/// Runs one parsed command line and writes its artifact.
pub fn run(cli: Cli) -> Result<(), RunError> {
    if let Some(n) = cli.global.workers {
        if n == 0 {
            return Err(RunError::Config("--workers must be at least 1".into()));
        }
        // A second initialisation (e.g. in tests) keeps the existing pool.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let cfg = RunConfig { command: cli.command, precision: cli.global.precision, format: cli.global.format };
    let bytes = render(&cfg, execute(&cfg)?)?;
    match &cli.global.output {
        Some(path) => std::fs::write(path, bytes)?,
        None => std::io::stdout().write_all(&bytes)?,
    }
    Ok(())
}

/// Parses `args`, runs, and returns the process exit status. Errors are
/// reported as one JSON line on standard error.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", e.to_json());
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_commands_and_rejects_bad_alpha() {
        let cli = Cli::try_parse_from(["siegel-lambert", "verify", "--k", "10", "--alpha", "1", "--zeros", "100"]).unwrap();
        assert!(matches!(cli.command, Command::Verify { k: 10, zeros: 100, .. }));
        assert!(Cli::try_parse_from(["siegel-lambert", "verify", "--alpha", "0"]).is_err());
        let cli = Cli::try_parse_from(["siegel-lambert", "--format", "csv", "asymptotic", "--alphas", "0.1,0.05"]).unwrap();
        assert!(matches!(cli.command, Command::Asymptotic { ref alphas, .. } if alphas == &[0.1, 0.05]));
        assert_eq!(cli.global.format, OutputFormat::Csv);
    }

    #[test]
    fn config_embeds_command_fields() {
        let cfg = RunConfig { command: Command::Zeros { count: 3 }, precision: PrecisionArg::Extended, format: OutputFormat::Json };
        let v = serde_json::to_value(&cfg).unwrap();
        assert_eq!(v["command"], "zeros");
        assert_eq!(v["count"], 3);
        assert_eq!(v["precision"], "extended");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(RunError::from(IdentityError::InvalidArgument("x".into())).exit_code(), 2);
        assert_eq!(RunError::from(LfuncError::UnsupportedWeight(24)).exit_code(), 2);
        assert_eq!(RunError::from(LfuncError::SignUndetermined(0.3)).exit_code(), 3);
        assert_eq!(RunError::Oracle("m".into()).exit_code(), 4);
    }
}
