//! Command line frontend: `profile`, `tables` and `verify`.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 invalid weight,
//! 3 verification failure.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::profile::full_report;
use crate::tables::{d_chi_table, mu_table};
use crate::verify::run_all;
use crate::weights::{parse_rational, Weight};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INVALID_WEIGHT: i32 = 2;
pub const EXIT_VERIFY_FAILED: i32 = 3;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "eisprofile", version, about = "Eisenstein and cuspidal cohomology profiles of GL2 over a quaternion algebra")]
struct Args {
    #[command(subcommand)]
    command: CommandArgs,
}

#[derive(Subcommand, Debug)]
enum CommandArgs {
    /// Per-degree cohomology report for one highest weight.
    Profile {
        /// Simple-root coordinates c1,c2,c3 (rationals as p/q).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "fund", required_unless_present = "fund")]
        alpha: Option<String>,
        /// Fundamental-weight coordinates n1,n2,n3 (integers).
        #[arg(long, allow_hyphen_values = true)]
        fund: Option<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// The affine tables of μ_w and dχ recovered from the engine.
    Tables {
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Run the grid checks over all dominant weights with n_i ≤ max.
    Verify {
        #[arg(long, default_value_t = 4)]
        max: u32,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    Profile,
    Tables,
    Verify,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightInput {
    Alpha(String),
    Fund(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliConfig {
    pub command: Command,
    pub weight: Option<WeightInput>,
    pub format: Format,
    pub max: u32,
}

impl From<Args> for CliConfig {
    fn from(args: Args) -> Self {
        match args.command {
            CommandArgs::Profile { alpha, fund, format } => CliConfig {
                command: Command::Profile,
                weight: alpha.map(WeightInput::Alpha).or(fund.map(WeightInput::Fund)),
                format,
                max: 0,
            },
            CommandArgs::Tables { format } => CliConfig { command: Command::Tables, weight: None, format, max: 0 },
            CommandArgs::Verify { max, format } => CliConfig { command: Command::Verify, weight: None, format, max },
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    InvalidWeight(String),
    /// The summary still goes to stdout; the message names the first failure.
    VerifyFailed { summary: String, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::InvalidWeight(_) => EXIT_INVALID_WEIGHT,
            CliError::VerifyFailed { .. } => EXIT_VERIFY_FAILED,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::InvalidWeight(m) | CliError::VerifyFailed { message: m, .. } => m,
        }
    }
}

fn split3(s: &str) -> Result<[&str; 3], CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    parts
        .try_into()
        .map_err(|_| CliError::Usage(format!("expected three comma-separated values, got {s:?}")))
}

pub fn parse_weight(input: &WeightInput) -> Result<Weight, CliError> {
    let usage = |e: Error| CliError::Usage(e.to_string());
    let lambda = match input {
        WeightInput::Alpha(s) => {
            let [a, b, c] = split3(s)?;
            Weight::new(parse_rational(a).map_err(usage)?, parse_rational(b).map_err(usage)?, parse_rational(c).map_err(usage)?)
        }
        WeightInput::Fund(s) => {
            let [a, b, c] = split3(s)?;
            let int = |x: &str| x.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("not an integer: {x:?}")));
            Weight::from_fundamental_ints([int(a)?, int(b)?, int(c)?])
        }
    };
    lambda.require_dominant_integral().map_err(|e| CliError::InvalidWeight(e.to_string()))?;
    Ok(lambda)
}

pub fn cmd_profile(config: &CliConfig) -> Result<String, CliError> {
    let input = config.weight.as_ref().ok_or_else(|| CliError::Usage("profile needs --alpha or --fund".into()))?;
    let lambda = parse_weight(input)?;
    let report = full_report(&lambda).map_err(|e| CliError::InvalidWeight(e.to_string()))?;
    Ok(match config.format {
        Format::Text => report.to_string(),
        Format::Json => serde_json::to_string_pretty(&report).expect("report serialises") + "\n",
    })
}

pub fn cmd_tables(config: &CliConfig) -> Result<String, CliError> {
    let internal = |e: Error| CliError::VerifyFailed { summary: String::new(), message: format!("internal error: {e}") };
    let mu = mu_table().map_err(internal)?;
    let dchi = d_chi_table().map_err(internal)?;
    Ok(match config.format {
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "mu_w = w(lambda+rho)-rho restricted to b").unwrap();
            for row in &mu {
                writeln!(out, "  {:<10} {}", row.w.name(), row.render()).unwrap();
            }
            writeln!(out).unwrap();
            writeln!(out, "d_chi = -w(lambda+rho) restricted to a").unwrap();
            for row in &dchi {
                writeln!(out, "  {:<10} {}", row.w.name(), row.render()).unwrap();
            }
            out
        }
        Format::Json => {
            let mu: Vec<_> = mu
                .iter()
                .map(|r| json!({ "w": r.w.name(), "word": r.w.word(), "m1": r.m1.to_string(), "m3": r.m3.to_string(), "row": r.render() }))
                .collect();
            let dchi: Vec<_> = dchi
                .iter()
                .map(|r| json!({ "w": r.w.name(), "word": r.w.word(), "s": r.s.to_string(), "partner": r.partner.name(), "row": r.render() }))
                .collect();
            serde_json::to_string_pretty(&json!({ "mu_w": mu, "d_chi": dchi })).unwrap() + "\n"
        }
    })
}

pub fn cmd_verify(config: &CliConfig) -> Result<String, CliError> {
    let summaries = run_all(config.max);
    let mut out = match config.format {
        Format::Text => {
            let mut out = String::new();
            for s in &summaries {
                writeln!(out, "{:<22} weights={:<5} failures={}", s.check, s.weights_scanned, s.failures).unwrap();
            }
            out
        }
        Format::Json => serde_json::to_string_pretty(&summaries).unwrap() + "\n",
    };
    if let Some(failed) = summaries.iter().find(|s| !s.passed()) {
        let (w, msg) = failed.first_failure.clone().expect("failure recorded");
        let fund = w.fundamental_coords().map(|n| n.to_string());
        return Err(CliError::VerifyFailed {
            summary: out,
            message: format!("check {} failed first at lambda with fundamental coordinates {}: {msg}", failed.check, fund.join(",")),
        });
    }
    if config.format == Format::Text {
        out.push_str("all checks passed\n");
    }
    Ok(out)
}

pub fn parse_args<I, T>(args: I) -> Result<CliConfig, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    Args::try_parse_from(args).map(CliConfig::from)
}

/// Run the tool, writing reports to `out` and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match parse_args(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    let result = match config.command {
        Command::Profile => cmd_profile(&config),
        Command::Tables => cmd_tables(&config),
        Command::Verify => cmd_verify(&config),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            EXIT_OK
        }
        Err(e) => {
            if let CliError::VerifyFailed { summary, .. } = &e {
                let _ = out.write_all(summary.as_bytes());
            }
            let _ = writeln!(err, "error: {}", e.message());
            e.exit_code()
        }
    }
}
