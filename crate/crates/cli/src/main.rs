//! `jsob`: Jacobi-Stirling tables, polynomial records, Gram matrices,
//! spectra, CHEL constants and verification suites.

mod cache;
mod commands;
mod config;
mod output;
mod record;
mod verify;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use cache::PolyCache;
use commands::{GramArgs, Output};
use config::{CliConfig, Format, Layer};
use verify::Suite;

#[derive(Parser, Debug)]
#[command(name = "jsob", version, about = "Exact Jacobi polynomials with alpha = beta = -1 and their operators")]
struct Cli {
    /// Line-oriented `key = value` config file (`JSOB_CONFIG` overrides).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Polynomial cache file; an empty value disables caching.
    #[arg(long, global = true)]
    cache: Option<String>,
    /// Significant digits for floating-point output (6..=30).
    #[arg(long, global = true)]
    float_digits: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of Jacobi-Stirling numbers {n j}_0, one row per j.
    #[command(allow_negative_numbers = true)]
    Stirling {
        #[arg(long, value_parser = clap::value_parser!(i64).range(0..=64))]
        max_n: i64,
    },
    /// A member of the Jacobi family as an exact record.
    #[command(allow_negative_numbers = true)]
    Poly {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "-1")]
        alpha: String,
        #[arg(long, default_value = "-1")]
        beta: String,
        /// reference, l2 or phi.
        #[arg(long, default_value = "reference")]
        normalization: String,
    },
    /// Gram matrix of a family under an inner product.
    #[command(allow_negative_numbers = true)]
    Gram {
        /// phi, classical or left-definite.
        #[arg(long, default_value = "phi")]
        ip: String,
        #[arg(long, default_value_t = 10)]
        max_degree: usize,
        #[arg(long)]
        k: Option<String>,
        /// Classical parameters.
        #[arg(long, default_value = "0")]
        alpha: String,
        #[arg(long, default_value = "0")]
        beta: String,
        /// Left-definite index.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Family normalization; defaults to the one orthonormal for --ip.
        #[arg(long)]
        family: Option<String>,
    },
    /// Eigenvalues of A, B<n> or T, optionally against a Galerkin solve of A.
    Spectrum {
        #[arg(long, default_value = "A")]
        operator: String,
        #[arg(long)]
        k: Option<String>,
        #[arg(long, default_value_t = 5)]
        count: usize,
        /// Galerkin discretization size (operator A only).
        #[arg(long)]
        galerkin: Option<usize>,
    },
    /// Maximum of the Chisholm-Everitt-Littlejohn function K(x).
    Chel {
        /// dirichlet, w1v1, w1v1-exact, unit or divergent.
        #[arg(long = "case", default_value = "dirichlet")]
        case: String,
        #[arg(long, default_value_t = 10_000)]
        grid: usize,
    },
    /// Run a verification suite; exit 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Core(jsob_core::Error),
}

impl From<jsob_core::Error> for Failure {
    fn from(e: jsob_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) => f.write_str(msg),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        use jsob_core::Error as E;
        match self {
            Failure::Usage(_) | Failure::Core(E::InvalidArgument(_)) => 2,
            Failure::Core(
                E::UndefinedNormalization { .. }
                | E::UnsupportedParameters { .. }
                | E::PoleInGammaRatio { .. }
                | E::NotInWeightedSpace(_),
            ) => 3,
            Failure::Core(E::ConvergenceFailure { .. } | E::NonFiniteIntegral { .. } | E::MassNotPositiveDefinite { .. }) => 4,
            Failure::Core(_) => 1,
        }
    }
}

fn verify_output(suite: Suite) -> Output {
    let checks = verify::run(suite);
    let passed = checks.iter().all(|c| c.passed);
    let mut table = output::Table::new(&["suite", "check", "status", "detail"]);
    for c in &checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        table.push(vec![c.suite.into(), c.name.into(), status.into(), c.detail.clone()]);
    }
    let pretty = checks
        .iter()
        .map(|c| format!("{} {}/{}: {}\n", if c.passed { "PASS" } else { "FAIL" }, c.suite, c.name, c.detail))
        .collect::<String>();
    Output {
        json: json!({ "suite": suite.name(), "passed": passed, "checks": checks }),
        table,
        pretty: Some(pretty),
        exit_code: if passed { 0 } else { 1 },
    }
}

fn run(cli: Cli) -> Result<(Output, Format), Failure> {
    let flags = Layer {
        default_k: None,
        output_format: cli.format.map(|f| format!("{f:?}").to_lowercase()),
        cache_path: cli.cache.clone(),
        float_digits: cli.float_digits.clone(),
    };
    let env = Layer::from_env(|key| std::env::var(key).ok());
    let config_path = std::env::var_os("JSOB_CONFIG").map(PathBuf::from).or(cli.config);
    let config = CliConfig::resolve(config_path.as_deref(), flags, env).map_err(Failure::Usage)?;
    let out = match cli.command {
        Command::Stirling { max_n } => commands::stirling(max_n as usize)?,
        Command::Poly { n, alpha, beta, normalization } => {
            let mut cache = match &config.cache_path {
                Some(path) => PolyCache::open(path.clone()),
                None => PolyCache::disabled(),
            };
            let out = commands::poly(&mut cache, n, &alpha, &beta, &normalization)?;
            cache.save();
            out
        }
        Command::Gram { ip, max_degree, k, alpha, beta, n, family } => commands::gram(
            GramArgs {
                ip: &ip,
                max_degree,
                k: k.as_deref(),
                alpha: &alpha,
                beta: &beta,
                n,
                family: family.as_deref(),
            },
            &config,
        )?,
        Command::Spectrum { operator, k, count, galerkin } => {
            commands::spectrum_cmd(&operator, k.as_deref(), count, galerkin, &config)?
        }
        Command::Chel { case, grid } => commands::chel(&case, grid, &config)?,
        Command::Verify { suite } => verify_output(suite),
    };
    Ok((out, config.output_format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, format)) => {
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&out.json).expect("values serialize") + "\n",
                Format::Csv => out.table.to_csv(),
                Format::Pretty => out.pretty.clone().unwrap_or_else(|| out.table.to_pretty()),
            };
            print!("{text}");
            ExitCode::from(out.exit_code)
        }
        Err(failure) => {
            eprintln!("jsob: {failure}");
            if matches!(failure, Failure::Usage(_)) || failure.exit_code() == 2 {
                eprintln!("Run `jsob --help` for usage.");
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
