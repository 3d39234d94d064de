//! Command-line front end behind the `minkbeam` binary.
//!
//! Exit codes: 0 success, 1 input error, 2 precondition violated,
//! 3 instance too large for brute force, 4 oracle disagreement.

mod bench;
mod files;
mod gen;
mod plot;

pub use bench::{run_bench, write_csv, BenchConfig, BenchRow, CSV_HEADER};
pub use files::{PhaseSetEntry, PhaseSetsSpec, ProblemFile, PskSpec, SolutionFile};
pub use gen::{generate, ChannelModel};
pub use plot::{render_svg, MAX_PLOT_ANTENNAS};

use crate::beamforming::{psk_fast_path, solve, BeamProblem};
use crate::oracle::{brute_force_with_cap, support_solve, DEFAULT_BRUTE_FORCE_CAP};
use crate::{beamforming, rel_close, Error};
use clap::{Args, Parser, Subcommand};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_PRECONDITION: i32 = 2;
pub const EXIT_CAP: i32 = 3;
pub const EXIT_VERIFY_FAILED: i32 = 4;

/// Relative tolerance for `verify`.
pub const VERIFY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Parser)]
#[command(name = "minkbeam", version, about = "Optimal discrete beamforming via Minkowski sums")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve a problem file and write the solution as JSON.
    Solve(SolveArgs),
    /// Compare the solver with exhaustive search and the support-function dual.
    Verify(VerifyArgs),
    /// Generate a random M-PSK problem file.
    Gen(GenArgs),
    /// Time the solver (and brute force where feasible) over several N.
    Bench(BenchArgs),
    /// Draw the summands and their Minkowski sum as SVG.
    Plot(PlotArgs),
}

#[derive(Debug, Args)]
pub struct SolveArgs {
    pub input: PathBuf,
    /// Force RIS mode (adds the off state to every set).
    #[arg(long)]
    pub ris: bool,
    /// Use the M-PSK rotational-symmetry solver; fails on other instances.
    #[arg(long)]
    pub psk_fast: bool,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Write elapsed_ms as 0 so repeated runs are byte-identical.
    #[arg(long)]
    pub no_timing: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    /// Maximum number of weight tuples brute force may enumerate.
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    pub cap: u128,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub ris: bool,
    #[arg(long, value_enum, default_value_t = ChannelModel::Rayleigh)]
    pub model: ChannelModel,
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Comma-separated antenna counts.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    #[arg(long, default_value_t = 4)]
    pub m: usize,
    #[arg(long, default_value_t = 3)]
    pub repeats: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = DEFAULT_BRUTE_FORCE_CAP)]
    pub cap: u128,
    /// Write CSV here instead of stdout.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    pub input: PathBuf,
    #[arg(long, short)]
    pub output: PathBuf,
    /// Also draw the Thales circle of every support arc.
    #[arg(long)]
    pub show_circles: bool,
}

/// A failed command: exit code plus message for stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotUniformPsk(_) => EXIT_PRECONDITION,
            Error::TooLarge { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Normal
/// output goes to `out`, diagnostics to stderr. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e.message);
            e.code
        }
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match command {
        Command::Solve(args) => cmd_solve(args, out),
        Command::Verify(args) => cmd_verify(args, out),
        Command::Gen(args) => cmd_gen(args, out),
        Command::Bench(args) => cmd_bench(args, out),
        Command::Plot(args) => cmd_plot(args, out),
    }
}

pub fn read_problem(path: &Path) -> Result<BeamProblem, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let file = ProblemFile::from_json(&text)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    Ok(file.to_problem()?)
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| CliError::input(format!("{}: {e}", p.display()))),
        None => out
            .write_all(text.as_bytes())
            .map_err(|e| CliError::input(e.to_string())),
    }
}

fn cmd_solve(args: &SolveArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let mut problem = read_problem(&args.input)?;
    if args.ris {
        problem.ris_mode = true;
    }
    let start = Instant::now();
    let solution = if args.psk_fast {
        psk_fast_path(&problem)?
    } else {
        solve(&problem)?
    };
    let elapsed_ms = if args.no_timing {
        0.0
    } else {
        start.elapsed().as_secs_f64() * 1e3
    };
    let mut text = SolutionFile::new(&solution, elapsed_ms).to_json();
    text.push('\n');
    emit(out, args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let problem = read_problem(&args.input)?;
    let brute = brute_force_with_cap(&problem, args.cap)?;
    let general = solve(&problem)?;
    let summands = beamforming::build_summands(&problem)?;
    let dual = support_solve(&summands.polygons)?;

    let pass = rel_close(general.gain, brute.gain, VERIFY_TOLERANCE)
        && rel_close(dual.gain, brute.gain, VERIFY_TOLERANCE);
    let io = |e: std::io::Error| CliError::input(e.to_string());
    writeln!(out, "solve          {:.15e}", general.gain).map_err(io)?;
    writeln!(out, "brute_force    {:.15e}", brute.gain).map_err(io)?;
    writeln!(out, "support_solve  {:.15e}", dual.gain).map_err(io)?;
    writeln!(out, "{}", if pass { "PASS" } else { "FAIL" }).map_err(io)?;
    Ok(if pass { EXIT_OK } else { EXIT_VERIFY_FAILED })
}

fn cmd_gen(args: &GenArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.n == 0 || args.m == 0 {
        return Err(CliError::input("--n and --m must be at least 1"));
    }
    let mut text = generate(args.n, args.m, args.seed, args.ris, args.model).to_json();
    text.push('\n');
    emit(out, args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn cmd_bench(args: &BenchArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    if args.m == 0 || args.n_list.contains(&0) {
        return Err(CliError::input("N and M must be at least 1"));
    }
    let rows = run_bench(&BenchConfig {
        n_list: args.n_list.clone(),
        m: args.m,
        repeats: args.repeats,
        seed: args.seed,
        brute_cap: args.cap,
    })?;
    let mut csv = Vec::new();
    write_csv(&rows, &mut csv).expect("writing to memory");
    emit(out, args.csv.as_deref(), std::str::from_utf8(&csv).expect("ascii csv"))?;
    Ok(EXIT_OK)
}

fn cmd_plot(args: &PlotArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let problem = read_problem(&args.input)?;
    if problem.antenna_count() > MAX_PLOT_ANTENNAS {
        return Err(CliError {
            code: EXIT_PRECONDITION,
            message: format!(
                "plot supports at most {MAX_PLOT_ANTENNAS} antennas, got {}",
                problem.antenna_count()
            ),
        });
    }
    let svg = render_svg(&problem, args.show_circles)?;
    emit(out, Some(&args.output), &svg)?;
    Ok(EXIT_OK)
}
