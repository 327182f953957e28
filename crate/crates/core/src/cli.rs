//! Command-line front end.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bounds::{
    cm_bound, disjoint_bound, singleton_like, theorem2_bound, theorem3_bound, BoundReport, KOptProvider, Method,
    Strategy,
};
use crate::code::LinearCode;
use crate::construction::{certify_construction, construct_lrc, ConstructionParams};
use crate::error::Error;
use crate::gf2::BitMatrix;
use crate::tables::{self, Dominance};

#[derive(Debug, Parser)]
#[command(
    name = "binlrc",
    version,
    about = "Bounds and constructions for binary locally repairable codes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Upper bounds on k for given n, d and locality r.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::All)]
        method: MethodArg,
        /// CSV table of k_opt upper bounds (n,d,k_upper).
        #[arg(long)]
        kopt: Option<PathBuf>,
        /// Optimizer used for the `opt` method.
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
    },
    /// Build a parity-check matrix of the construction with parameters s, t.
    Construct {
        #[arg(long)]
        s: u32,
        #[arg(long)]
        t: u32,
        /// Output file for the matrix (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Verify distance, dimension and optimality.
        #[arg(long)]
        certify: bool,
    },
    /// Report dimension, distance and locality of a code given by its
    /// parity-check matrix.
    Verify {
        #[arg(long)]
        pcheck: PathBuf,
        /// Largest weight searched when exhaustive enumeration is too big.
        #[arg(long, default_value_t = 7)]
        max_weight: usize,
        /// Largest locality searched.
        #[arg(long, default_value_t = 7)]
        locality: usize,
        /// Write the weight enumerator as CSV to this file.
        #[arg(long)]
        enumerator: Option<PathBuf>,
    },
    /// Print a comparison table as CSV.
    Table {
        #[arg(long, value_enum)]
        name: TableName,
        #[arg(long)]
        kopt: Option<PathBuf>,
        /// Tipping points require the explicit bound to be strictly below C-M.
        #[arg(long)]
        strict: bool,
    },
    /// C-M and explicit bounds over a range of lengths, as CSV.
    Sweep {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        kopt: Option<PathBuf>,
        /// Output CSV file, or `-` for stdout.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    All,
    Singleton,
    Cm,
    Disjoint,
    Opt,
    Explicit,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Auto,
    Dp,
    Exhaustive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableName {
    Table1,
    Table2,
}

/// Failure carrying the process exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

fn usage(message: impl Into<String>) -> CliError {
    CliError {
        code: 2,
        message: message.into(),
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidParameter(_) | Error::DimensionMismatch(_) | Error::Io(_) => 2,
            _ => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn load_provider(path: Option<&Path>) -> Result<KOptProvider, CliError> {
    match path {
        None => Ok(KOptProvider::fallback()),
        Some(p) => KOptProvider::load(p).map_err(|e| usage(format!("{}: {e}", p.display()))),
    }
}

fn read_matrix(path: &Path) -> Result<BitMatrix, CliError> {
    let text = fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    BitMatrix::parse_text(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn csv_writer(out: &mut Vec<u8>) -> csv::Writer<&mut Vec<u8>> {
    csv::WriterBuilder::new().from_writer(out)
}

fn csv_err(e: csv::Error) -> CliError {
    CliError {
        code: 1,
        message: e.to_string(),
    }
}

fn opt_cell(v: Option<i64>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

/// Runs a parsed command, writing its normal output to `stdout`.
pub fn run(cli: Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError {
        code: 1,
        message: e.to_string(),
    };
    match cli.command {
        Command::Bound {
            n,
            d,
            r,
            method,
            kopt,
            strategy,
        } => {
            if d == 0 || r == 0 || n < r + 1 {
                return Err(usage(format!(
                    "need d >= 1, r >= 1 and n >= r+1, got n={n} d={d} r={r}"
                )));
            }
            let provider = load_provider(kopt.as_deref())?;
            let strategy = match strategy {
                StrategyArg::Auto => Strategy::Auto,
                StrategyArg::Dp => Strategy::Dp,
                StrategyArg::Exhaustive => Strategy::Exhaustive,
            };
            let wanted: Vec<Method> = match method {
                MethodArg::All => vec![
                    Method::SingletonLike,
                    Method::Cm,
                    Method::Disjoint,
                    Method::Theorem2,
                    Method::Theorem3,
                ],
                MethodArg::Singleton => vec![Method::SingletonLike],
                MethodArg::Cm => vec![Method::Cm],
                MethodArg::Disjoint => vec![Method::Disjoint],
                MethodArg::Opt => vec![Method::Theorem2],
                MethodArg::Explicit => vec![Method::Theorem3],
            };
            for m in wanted {
                let result: Result<BoundReport, Error> = match m {
                    Method::SingletonLike => singleton_like(n, d, r),
                    Method::Cm => cm_bound(n, d, r, &provider),
                    Method::Disjoint => disjoint_bound(n, d, r),
                    Method::Theorem2 => theorem2_bound(n, d, r, strategy),
                    Method::Theorem3 => theorem3_bound(n, d, r),
                    Method::Prop1 => unreachable!("needs a code"),
                };
                match result {
                    Ok(rep) => writeln!(stdout, "{}", rep.to_json()).map_err(io)?,
                    Err(Error::NotApplicable(why)) | Err(Error::InvalidParameter(why)) => {
                        writeln!(stdout, "{m}: not applicable ({why})").map_err(io)?
                    }
                    Err(e) => return Err(e.into()),
                }
            }
        }
        Command::Construct { s, t, out, certify } => {
            let params = ConstructionParams::new(s, t)?;
            let built = construct_lrc(params)?;
            let text = built.h.to_text();
            match &out {
                Some(path) => fs::write(path, &text).map_err(io)?,
                None => stdout.write_all(text.as_bytes()).map_err(io)?,
            }
            if certify {
                let cert = certify_construction(&built)?;
                let sink: &mut dyn Write = if out.is_some() { stdout } else { stderr };
                writeln!(sink, "{cert}").map_err(io)?;
                if !cert.passed() {
                    let names: Vec<&str> = cert.failures().iter().map(|c| c.name).collect();
                    return Err(CliError {
                        code: 1,
                        message: format!("certification failed: {}", names.join(", ")),
                    });
                }
            }
        }
        Command::Verify {
            pcheck,
            max_weight,
            locality,
            enumerator,
        } => {
            if !(1..=7).contains(&max_weight) {
                return Err(usage("--max-weight must be in 1..=7"));
            }
            let code = LinearCode::from_pcheck(read_matrix(&pcheck)?)?;
            writeln!(stdout, "n={}", code.len()).map_err(io)?;
            writeln!(stdout, "k={}", code.dimension()).map_err(io)?;
            writeln!(stdout, "d={}", code.distance_status(max_weight)?).map_err(io)?;
            match code.locality_profile(locality)? {
                Some(p) => {
                    writeln!(stdout, "r={}", p.r).map_err(io)?;
                    let groups = if p.disjoint_groups.is_some() {
                        "yes"
                    } else {
                        "not found"
                    };
                    writeln!(stdout, "disjoint_repair_groups={groups}").map_err(io)?;
                }
                None => writeln!(stdout, "r>{locality}").map_err(io)?,
            }
            if let Some(path) = enumerator {
                fs::write(&path, code.weight_enumerator_enum()?.to_csv()).map_err(io)?;
            }
        }
        Command::Table { name, kopt, strict } => {
            let mut buf = Vec::new();
            match name {
                TableName::Table1 => {
                    let provider = load_provider(kopt.as_deref())?;
                    let mut w = csv_writer(&mut buf);
                    w.write_record(["r", "n", "disjoint", "cm"]).map_err(csv_err)?;
                    for row in tables::table1(&provider)? {
                        w.write_record(
                            [row.r, row.n]
                                .map(|x| x.to_string())
                                .iter()
                                .chain([row.disjoint, row.cm].map(|x| x.to_string()).iter()),
                        )
                        .map_err(csv_err)?;
                    }
                    w.flush().map_err(io)?;
                }
                TableName::Table2 => {
                    let Some(path) = kopt else {
                        return Err(usage("table2 needs --kopt FILE"));
                    };
                    let provider = load_provider(Some(&path))?;
                    let rule = if strict { Dominance::Strict } else { Dominance::AtMost };
                    let mut w = csv_writer(&mut buf);
                    w.write_record(["d", "r", "tipping_point"]).map_err(csv_err)?;
                    for cell in tables::table2(&provider, rule) {
                        w.write_record([
                            cell.d.to_string(),
                            cell.r.to_string(),
                            cell.tipping_point.map(|x| x.to_string()).unwrap_or_default(),
                        ])
                        .map_err(csv_err)?;
                    }
                    w.flush().map_err(io)?;
                }
            }
            stdout.write_all(&buf).map_err(io)?;
        }
        Command::Sweep {
            r,
            d,
            n_min,
            n_max,
            kopt,
            out,
        } => {
            if n_min > n_max {
                return Err(usage(format!("empty range: --n-min {n_min} > --n-max {n_max}")));
            }
            if r == 0 || d == 0 {
                return Err(usage("--r and --d must be positive"));
            }
            let provider = load_provider(kopt.as_deref())?;
            let mut buf = Vec::new();
            {
                let mut w = csv_writer(&mut buf);
                w.write_record(["n", "cm_bound", "theorem3_bound"]).map_err(csv_err)?;
                for row in tables::sweep(r, d, n_min, n_max, &provider) {
                    w.write_record([row.n.to_string(), opt_cell(row.cm), opt_cell(row.theorem3)])
                        .map_err(csv_err)?;
                }
                w.flush().map_err(io)?;
            }
            if out.as_os_str() == "-" {
                stdout.write_all(&buf).map_err(io)?;
            } else {
                fs::write(&out, &buf).map_err(io)?;
            }
        }
    }
    Ok(())
}

/// Parses `std::env::args`, runs, and maps failures to exit codes.
pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr();
    match run(cli, &mut stdout, &mut stderr) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
