//! The `rep` command line: build/verify/tensor/analyze/unitarize from
//! JSON parameter files and run randomized cross-check campaigns.
//!
//! Exit codes: 0 = pass, 1 = negative verdict (relation failure or not
//! unitarizable), 2 = input error, 3 = consistency alarm (closed form
//! and oracle disagree — this should never happen).

use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use crate::analysis::{certify, AnalysisError, TensorParams};
use crate::campaign::{run_campaign, RunConfig};
use crate::group::{RepParams, ValidatedParams};
use crate::scalar::Mode;
use crate::unitarity::solve_unitarizing_form;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exact,
    Approx,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Exact => Mode::Exact,
            ModeArg::Approx => Mode::Approx,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "rep",
    about = "Representations of the necklace braid groups NB_n (n = 2, 3, 4): \
             relation verification, tensor products, irreducibility certificates, \
             and unitarization",
    version
)]
pub struct Cli {
    /// Arithmetic mode override; "approx" embeds exact inputs into
    /// complex doubles, "exact" rejects approximate inputs
    #[arg(long, global = true, value_enum)]
    pub mode: Option<ModeArg>,

    /// Comparison tolerance for approximate arithmetic
    #[arg(long, global = true, default_value_t = 1e-9)]
    pub tol: f64,

    /// Seed for all randomness, recorded in certificates and summaries
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Write the JSON report to this path instead of stdout
    #[arg(long, global = true, value_name = "PATH")]
    pub json_out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build the representation from a parameter file (validated or not)
    /// and check every defining relation
    Verify {
        /// JSON parameter file
        params: PathBuf,
    },
    /// Build the dimension-4 tensor product of two parameter files and
    /// emit its generator images
    Tensor { params1: PathBuf, params2: PathBuf },
    /// Decide irreducibility of a tensor product: closed form (when its
    /// hypotheses apply) cross-checked against the commutant and
    /// Burnside oracles, with a verified witness when reducible
    Irreducible {
        /// Parameter file for the first factor, or a combined tensor
        /// file {"p1": ..., "p2": ...}
        params1: PathBuf,
        /// Parameter file for the second factor
        params2: Option<PathBuf>,
    },
    /// Solve for a hermitian positive-definite invariant form of a
    /// validated dimension-2 representation
    Unitarize { params: PathBuf },
    /// Run the randomized cross-check campaign over every tensor case
    /// family
    Campaign {
        /// Samples per case family
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

/// A combined tensor parameter file.
#[derive(Debug, Deserialize)]
struct TensorFile {
    p1: RepParams,
    p2: RepParams,
}

#[derive(Debug)]
enum CliError {
    Input(String),
    Inconsistent(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Inconsistent(_) => EXIT_INCONSISTENT,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Inconsistent(m) => m,
        }
    }
}

fn input_err<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Input(e.to_string())
}

/// Parses the process arguments and runs; returns the process exit code.
pub fn main() -> i32 {
    run(Cli::parse())
}

pub fn run(cli: Cli) -> i32 {
    match dispatch(&cli) {
        Ok((code, report)) => {
            if let Err(e) = emit(cli.json_out.as_deref(), &report) {
                eprintln!("error: {e}");
                return EXIT_INPUT;
            }
            code
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            e.exit_code()
        }
    }
}

fn emit(path: Option<&Path>, report: &serde_json::Value) -> Result<(), String> {
    let text = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
    match path {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| e.to_string()),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn dispatch(cli: &Cli) -> Result<(i32, serde_json::Value), CliError> {
    match &cli.command {
        Command::Verify { params } => cmd_verify(cli, params),
        Command::Tensor { params1, params2 } => cmd_tensor(cli, params1, params2),
        Command::Irreducible { params1, params2 } => {
            cmd_irreducible(cli, params1, params2.as_deref())
        }
        Command::Unitarize { params } => cmd_unitarize(cli, params),
        Command::Campaign { samples } => cmd_campaign(cli, *samples),
    }
}

fn read_params(cli: &Cli, path: &Path) -> Result<RepParams, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let params: RepParams = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path.display())))?;
    coerce_mode(cli, params)
}

fn coerce_mode(cli: &Cli, params: RepParams) -> Result<RepParams, CliError> {
    match (cli.mode.map(Mode::from), params.mode) {
        (None, _) => Ok(params),
        (Some(Mode::Approx), Mode::Exact) => Ok(params.to_approx()),
        (Some(Mode::Approx), Mode::Approx) | (Some(Mode::Exact), Mode::Exact) => Ok(params),
        (Some(Mode::Exact), Mode::Approx) => Err(CliError::Input(
            "cannot lift approximate parameters to exact mode".into(),
        )),
    }
}

fn validate(cli: &Cli, params: RepParams) -> Result<ValidatedParams, CliError> {
    params.validate(cli.tol).map_err(input_err)
}

fn cmd_verify(cli: &Cli, path: &Path) -> Result<(i32, serde_json::Value), CliError> {
    let params = read_params(cli, path)?;
    // deliberately unchecked: relation failures are the verdict here,
    // not an input error
    let rep = params.build_rep_unchecked().map_err(input_err)?;
    let report = rep.verify_relations(cli.tol);
    let code = if report.all_passed() {
        EXIT_PASS
    } else {
        EXIT_NEGATIVE
    };
    let value = serde_json::to_value(&report).map_err(input_err)?;
    Ok((code, value))
}

fn read_tensor(cli: &Cli, path1: &Path, path2: Option<&Path>) -> Result<TensorParams, CliError> {
    let (raw1, raw2) = match path2 {
        Some(p2) => (read_params(cli, path1)?, read_params(cli, p2)?),
        None => {
            let text = std::fs::read_to_string(path1)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path1.display())))?;
            let file: TensorFile = serde_json::from_str(&text)
                .map_err(|e| CliError::Input(format!("cannot parse {}: {e}", path1.display())))?;
            (coerce_mode(cli, file.p1)?, coerce_mode(cli, file.p2)?)
        }
    };
    let p1 = validate(cli, raw1)?;
    let p2 = validate(cli, raw2)?;
    TensorParams::new(p1, p2).map_err(input_err)
}

fn cmd_tensor(cli: &Cli, path1: &Path, path2: &Path) -> Result<(i32, serde_json::Value), CliError> {
    let tensor = read_tensor(cli, path1, Some(path2))?;
    let rep = tensor.build_rep();
    let value = serde_json::to_value(&rep).map_err(input_err)?;
    Ok((EXIT_PASS, value))
}

fn cmd_irreducible(
    cli: &Cli,
    path1: &Path,
    path2: Option<&Path>,
) -> Result<(i32, serde_json::Value), CliError> {
    let tensor = read_tensor(cli, path1, path2)?;
    let rep = tensor.build_rep();
    match certify(&rep, Some(&tensor), cli.tol, cli.seed) {
        Ok(cert) => {
            let value = serde_json::to_value(&cert).map_err(input_err)?;
            Ok((EXIT_PASS, value))
        }
        Err(
            e @ (AnalysisError::ClosedFormDisagreement { .. }
            | AnalysisError::OracleInconsistent { .. }),
        ) => Err(CliError::Inconsistent(e.to_string())),
        Err(e) => Err(input_err(e)),
    }
}

fn cmd_unitarize(cli: &Cli, path: &Path) -> Result<(i32, serde_json::Value), CliError> {
    let params = read_params(cli, path)?;
    let vp = validate(cli, params)?;
    let cert = solve_unitarizing_form(&vp, cli.tol).map_err(input_err)?;
    let code = if cert.is_unitarizable() {
        EXIT_PASS
    } else {
        EXIT_NEGATIVE
    };
    let value = serde_json::to_value(&cert).map_err(input_err)?;
    Ok((code, value))
}

fn cmd_campaign(cli: &Cli, samples: usize) -> Result<(i32, serde_json::Value), CliError> {
    if samples == 0 {
        return Err(CliError::Input("samples must be at least 1".into()));
    }
    let config = RunConfig {
        mode: cli.mode.map(Mode::from).unwrap_or(Mode::Approx),
        tol: cli.tol,
        seed: cli.seed,
        samples,
    };
    let summary = run_campaign(&config).map_err(input_err)?;
    let code = if summary.all_agree() {
        EXIT_PASS
    } else {
        EXIT_INCONSISTENT
    };
    let value = serde_json::to_value(&summary).map_err(input_err)?;
    Ok((code, value))
}
