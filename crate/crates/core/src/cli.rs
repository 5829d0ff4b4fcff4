//! Command-line front end. All output is JSON with numbers rounded to ten
//! significant digits; errors go to standard error as `{code, message}`.

use std::ffi::OsString;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Serialize, Serializer};
use serde_json::json;

use crate::boost::boost;
use crate::error::Error;
use crate::fidelity::{
    fidelity_boost_closed, fidelity_mobius_closed, fidelity_spectral, qubit_fidelity_sq, qubit_fidelity_sq_gamma,
    NormalizedBoost,
};
use crate::gyrogroup::{einstein_add, gamma, half, BallVector};
use crate::linalg::{det, sym_eigen, SymmetricMatrix};
use crate::mobius::mobius;
use crate::verify::{self, ReportRecord, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "gyrofid", version, about = "Einstein gyrogroup, Lorentz boosts, Möbius matrices and fidelity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Einstein sum u ⊕ v and its Lorentz factor.
    Add {
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Closed-form fidelity next to its oracle.
    Fidelity {
        #[arg(long, value_enum)]
        kind: FidelityKind,
        /// Ambient dimension; defaults to the length of u.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        u: String,
        #[arg(long)]
        v: String,
    },
    /// Dump a matrix with its trace, determinant and eigenvalues.
    Matrix {
        #[arg(long, value_enum)]
        kind: MatrixKind,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        v: String,
    },
    /// Run the randomized verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 500, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FidelityKind {
    /// Möbius matrices: closed form vs spectral fidelity.
    Mobius,
    /// Trace-normalized boosts: closed form vs spectral fidelity.
    Boost,
    /// Qubit F²: Lorentz-factor form vs trace/determinant form.
    Qubit,
    /// Unnormalized boosts: spectral fidelity vs 2γ_{½u⊕½v} + n − 1.
    Spectral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum MatrixKind {
    Boost,
    Mobius,
    NormalizedBoost,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("--{flag}: expected a JSON array of numbers ({reason})")]
    Vector { flag: &'static str, reason: String },
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::Vector { .. } => "invalid_vector",
            CliError::Usage(_) => "usage",
        }
    }

    pub fn to_json(&self) -> String {
        json!({ "code": self.code(), "message": self.to_string() }).to_string()
    }
}

/// What a finished invocation writes and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub exit_code: i32,
}

/// A number rounded to ten digits after its leading digit. Integral values print
/// without a fractional part; non-finite values print as `null`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Num(pub f64);

impl Num {
    fn rounded(self) -> f64 {
        format!("{:.10e}", self.0).parse().unwrap_or(self.0)
    }
}

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let x = self.rounded();
        if x.is_finite() && x == x.trunc() && x.abs() < 1e15 {
            s.serialize_i64(x as i64)
        } else {
            s.serialize_f64(x)
        }
    }
}

fn nums(xs: &[f64]) -> Vec<Num> {
    xs.iter().copied().map(Num).collect()
}

fn parse_vector(flag: &'static str, text: &str) -> Result<BallVector, CliError> {
    let raw: Vec<f64> = serde_json::from_str(text).map_err(|e| CliError::Vector {
        flag,
        reason: e.to_string(),
    })?;
    Ok(BallVector::new(raw)?)
}

fn require_dim(n: Option<usize>, v: &BallVector) -> Result<usize, CliError> {
    match n {
        Some(n) if n != v.dim() => Err(Error::DimensionMismatch {
            left: n,
            right: v.dim(),
        }
        .into()),
        _ => Ok(v.dim()),
    }
}

fn check_mobius_n(n: Option<usize>) -> Result<(), CliError> {
    match n {
        Some(n) if n < 3 => Err(Error::MobiusDimension { n }.into()),
        _ => Ok(()),
    }
}

#[derive(Serialize)]
struct AddOutput {
    result: Vec<Num>,
    gamma: Num,
}

#[derive(Serialize)]
struct FidelityOutput {
    kind: &'static str,
    n: usize,
    value: Num,
    oracle: Num,
    abs_diff: Num,
}

#[derive(Serialize)]
struct MatrixOutput {
    kind: &'static str,
    n: usize,
    matrix: Vec<Vec<Num>>,
    trace: Num,
    det: Num,
    eigenvalues: Vec<Num>,
}

#[derive(Serialize)]
struct RecordOutput {
    suite: &'static str,
    name: &'static str,
    kind: verify::CheckKind,
    trials: usize,
    max_error: Num,
    tolerance: Num,
    pass: bool,
    status: &'static str,
}

impl From<&ReportRecord> for RecordOutput {
    fn from(r: &ReportRecord) -> Self {
        RecordOutput {
            suite: r.suite,
            name: r.name,
            kind: r.kind,
            trials: r.trials,
            max_error: Num(r.max_error),
            tolerance: Num(r.tolerance),
            pass: r.pass(),
            status: r.status(),
        }
    }
}

#[derive(Serialize)]
struct VerifyOutput {
    suite: &'static str,
    trials: u64,
    seed: u64,
    records: Vec<RecordOutput>,
    all_pass: bool,
}

fn to_line<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("output types serialize") + "\n"
}

fn cmd_add(u: &str, v: &str) -> Result<String, CliError> {
    let u = parse_vector("u", u)?;
    let v = parse_vector("v", v)?;
    let sum = einstein_add(&u, &v)?;
    Ok(to_line(&AddOutput {
        gamma: Num(gamma(&sum).value()),
        result: nums(&sum),
    }))
}

fn cmd_fidelity(kind: FidelityKind, n: Option<usize>, u: &str, v: &str) -> Result<String, CliError> {
    if kind == FidelityKind::Mobius {
        check_mobius_n(n)?;
    }
    let u = parse_vector("u", u)?;
    let v = parse_vector("v", v)?;
    let n = require_dim(n, &u)?;
    let (name, value, oracle) = match kind {
        FidelityKind::Mobius => {
            let closed = fidelity_mobius_closed(&u, &v, n)?;
            let spectral = fidelity_spectral(mobius(n, &u)?.matrix(), mobius(n, &v)?.matrix())?;
            ("mobius", closed, spectral)
        }
        FidelityKind::Boost => {
            let closed = fidelity_boost_closed(&u, &v, n)?;
            let spectral = fidelity_spectral(NormalizedBoost::new(&u).matrix(), NormalizedBoost::new(&v).matrix())?;
            ("boost", closed, spectral)
        }
        FidelityKind::Qubit => ("qubit", qubit_fidelity_sq_gamma(&u, &v)?, qubit_fidelity_sq(&u, &v)?),
        FidelityKind::Spectral => {
            let spectral = fidelity_spectral(boost(&u).matrix(), boost(&v).matrix())?;
            let mid = einstein_add(&half(&u), &half(&v))?;
            let closed = 2.0 * gamma(&mid).value() + n as f64 - 1.0;
            ("spectral", spectral, closed)
        }
    };
    Ok(to_line(&FidelityOutput {
        kind: name,
        n,
        value: Num(value),
        oracle: Num(oracle),
        abs_diff: Num((value - oracle).abs()),
    }))
}

fn cmd_matrix(kind: MatrixKind, n: Option<usize>, v: &str) -> Result<String, CliError> {
    if kind == MatrixKind::Mobius {
        check_mobius_n(n)?;
    }
    let v = parse_vector("v", v)?;
    let n = require_dim(n, &v)?;
    let (name, m): (&'static str, SymmetricMatrix) = match kind {
        MatrixKind::Boost => ("boost", boost(&v).matrix().clone()),
        MatrixKind::Mobius => ("mobius", mobius(n, &v)?.matrix().clone()),
        MatrixKind::NormalizedBoost => ("normalized_boost", NormalizedBoost::new(&v).matrix().clone()),
    };
    let spectrum = sym_eigen(&m)?;
    Ok(to_line(&MatrixOutput {
        kind: name,
        n,
        matrix: m.to_rows().iter().map(|r| nums(r)).collect(),
        trace: Num(m.trace()),
        det: Num(det(&m)?),
        eigenvalues: nums(spectrum.eigenvalues()),
    }))
}

fn cmd_verify(suite: Suite, trials: u64, seed: u64) -> (String, bool) {
    let records = verify::run(suite, trials as usize, seed);
    let all_pass = records.iter().all(ReportRecord::pass);
    let out = VerifyOutput {
        suite: suite.name(),
        trials,
        seed,
        records: records.iter().map(RecordOutput::from).collect(),
        all_pass,
    };
    (to_line(&out), all_pass)
}

/// Runs a parsed command.
pub fn run(cli: Cli) -> Outcome {
    let result = match cli.command {
        Command::Add { u, v } => cmd_add(&u, &v).map(|s| (s, true)),
        Command::Fidelity { kind, n, u, v } => cmd_fidelity(kind, n, &u, &v).map(|s| (s, true)),
        Command::Matrix { kind, n, v } => cmd_matrix(kind, n, &v).map(|s| (s, true)),
        Command::Verify { suite, trials, seed } => Ok(cmd_verify(suite, trials, seed)),
    };
    match result {
        Ok((stdout, ok)) => Outcome {
            stdout,
            stderr: String::new(),
            exit_code: if ok { EXIT_OK } else { EXIT_VERIFY_FAILED },
        },
        Err(e) => error_outcome(&e),
    }
}

fn error_outcome(e: &CliError) -> Outcome {
    Outcome {
        stdout: String::new(),
        stderr: e.to_json() + "\n",
        exit_code: EXIT_INPUT,
    }
}

/// Parses arguments (including the program name) and runs the command.
/// Help and version requests print to standard output and exit 0; any other
/// parse failure becomes a JSON usage error.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => match e.kind() {
            clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome {
                stdout: e.to_string(),
                stderr: String::new(),
                exit_code: EXIT_OK,
            },
            _ => {
                let message = e.to_string();
                let first = message.lines().next().unwrap_or("").trim_start_matches("error: ");
                error_outcome(&CliError::Usage(first.to_string()))
            }
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn num(x: f64) -> String {
        serde_json::to_string(&Num(x)).unwrap()
    }

    #[test]
    fn ten_significant_digits() {
        assert_eq!(num(5.0 / 3.0), "1.6666666667");
        assert_eq!(num(0.8), "0.8");
        assert_eq!(num(0.0), "0");
        assert_eq!(num(-0.0), "0");
        assert_eq!(num(4.0), "4");
        assert_eq!(num(0.1 + 0.2), "0.3");
        assert_eq!(num(1.234567890123e-20), "1.2345678901e-20");
        assert_eq!(num(f64::NAN), "null");
    }

    #[test]
    fn add_command() {
        let out = execute(["gyrofid", "add", "--u", "[0.5,0,0]", "--v", "[0.5,0,0]"]);
        assert_eq!(out.stdout, "{\"result\":[0.8,0,0],\"gamma\":1.6666666667}\n");
        assert_eq!(out.exit_code, 0);
    }

    #[test]
    fn errors_are_json() {
        let out = execute(["gyrofid", "add", "--u", "[1.5,0,0]", "--v", "[0,0,0]"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        let e: serde_json::Value = serde_json::from_str(&out.stderr).unwrap();
        assert_eq!(e["code"], "ball_violation");
        assert!(e["message"].as_str().unwrap().starts_with("ball violation"));

        let out = execute(["gyrofid", "add", "--u", "not json", "--v", "[0]"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        assert!(out.stderr.contains("invalid_vector"));

        let out = execute(["gyrofid", "bogus"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        assert!(out.stderr.contains("\"usage\""));
    }

    #[test]
    fn mobius_dimension_checked_first() {
        let out = execute(["gyrofid", "fidelity", "--kind", "mobius", "--n", "2", "--u", "[0.1,0]", "--v", "[2,0]"]);
        assert_eq!(out.exit_code, EXIT_INPUT);
        let e: serde_json::Value = serde_json::from_str(&out.stderr).unwrap();
        assert_eq!(e["message"], "n must be ≥ 3 (got 2)");
    }
}
