use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hardy_core::cli::{self, parse_angle, parse_sweep, Command, Format, Overrides, RunConfig, Sweep};
use hardy_core::{HardyError, Result};

#[derive(Parser)]
#[command(name = "hardy", version, about = "Hardy constants of sectors and non-convex planar domains")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[arg(long, value_enum, default_value_t = OutFormat::Json, global = true)]
    format: OutFormat,
    /// Write the document here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Json,
    Csv,
}

#[derive(Args)]
struct BetaRange {
    /// Single opening, e.g. 2pi or 1.7pi.
    #[arg(long, conflicts_with = "sweep")]
    beta: Option<String>,
    /// start:end:count, e.g. pi:2pi:101.
    #[arg(long)]
    sweep: Option<String>,
}

impl BetaRange {
    fn resolve(&self, default: &str) -> Result<Sweep> {
        match (&self.beta, &self.sweep) {
            (Some(b), _) => Ok(Sweep::single(parse_angle(b)?)),
            (None, Some(s)) => parse_sweep(s),
            (None, None) => parse_sweep(default),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Sector constant c_β with a shooting cross-check.
    Cbeta {
        #[command(flatten)]
        range: BetaRange,
        #[arg(long)]
        no_shooting: bool,
        /// Relative tolerance of the shooting integrator.
        #[arg(long)]
        rtol: Option<f64>,
    },
    /// The critical opening β_cr.
    Betacr,
    /// Critical cap angles γ* and γ**.
    GammaStar {
        #[command(flatten)]
        range: BetaRange,
    },
    /// Certify a domain file.
    Certify { file: PathBuf },
    /// Discrete Hardy quotient of a domain file.
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = 128)]
        n: usize,
        #[arg(long)]
        cg_tol: Option<f64>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        max_iter: Option<usize>,
    },
}

fn config(args: Cli) -> Result<RunConfig> {
    let mut overrides = Overrides::default();
    let command = match args.command {
        Cmd::Cbeta { range, no_shooting, rtol } => {
            overrides.rtol = rtol;
            Command::Cbeta { betas: range.resolve("pi:2pi:11")?, shooting: !no_shooting }
        }
        Cmd::Betacr => Command::Betacr,
        Cmd::GammaStar { range } => Command::GammaStar { betas: range.resolve("pi:2pi:21")? },
        Cmd::Certify { file } => Command::Certify { input: file },
        Cmd::Validate { file, n, cg_tol, tol, max_iter } => {
            overrides.cg_tol = cg_tol;
            overrides.eigen_tol = tol;
            overrides.max_iterations = max_iter;
            Command::Validate { input: file, n }
        }
    };
    let format = match args.format {
        OutFormat::Json => Format::Json,
        OutFormat::Csv => Format::Csv,
    };
    Ok(RunConfig { command, format, output: args.output, overrides })
}

fn main() -> ExitCode {
    let args = match Cli::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match config(args).and_then(|c| cli::execute(&c)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("hardy: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

fn exit_code(e: &HardyError) -> u8 {
    e.exit_code() as u8
}
