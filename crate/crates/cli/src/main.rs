//! Entry point: argument parsing, file loading, and exit-code mapping.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use symlat_cli::problem::{Overrides, ProblemFile};
use symlat_cli::run::{execute, CommandKind};
use symlat_cli::CliError;

#[derive(Parser)]
#[command(
    name = "symlat",
    version,
    about = "Exact analysis of symmetric linear difference systems on integer lattices"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that every group element maps the system into itself.
    CheckInvariance(CommonArgs),
    /// Symmetric quotient dimensions over the window schedule.
    Symdim(CommonArgs),
    /// Windowed solution bases and their symmetric part.
    Solve(CommonArgs),
    /// Sublattice on which all scaling coefficients act trivially.
    Sublattice(CommonArgs),
    /// Orbit decomposition of the sample window plus the projection check.
    Orbits(CommonArgs),
    /// Test whether every sampled solution is symmetric.
    AllSymmetric(CommonArgs),
    /// Run every analysis section.
    Full(CommonArgs),
}

impl Command {
    fn split(&self) -> (&CommonArgs, CommandKind) {
        match self {
            Command::CheckInvariance(a) => (a, CommandKind::CheckInvariance),
            Command::Symdim(a) => (a, CommandKind::Symdim),
            Command::Solve(a) => (a, CommandKind::Solve),
            Command::Sublattice(a) => (a, CommandKind::Sublattice),
            Command::Orbits(a) => (a, CommandKind::Orbits),
            Command::AllSymmetric(a) => (a, CommandKind::AllSymmetric),
            Command::Full(a) => (a, CommandKind::Full),
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    /// Problem description (TOML).
    file: PathBuf,
    /// Drop scheduled window radii above this bound.
    #[arg(long)]
    window_max: Option<i64>,
    /// Drop scheduled pads above this bound.
    #[arg(long)]
    pad_max: Option<i64>,
    /// How many trailing windows must agree for a stabilized verdict.
    #[arg(long)]
    stability_runs: Option<usize>,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Human-readable summary.
    Text,
    /// Deterministic JSON.
    Machine,
}

fn run(args: &CommonArgs, kind: CommandKind) -> Result<(String, i32), CliError> {
    let text = std::fs::read_to_string(&args.file).map_err(|source| CliError::Io {
        path: args.file.display().to_string(),
        source,
    })?;
    let file = ProblemFile::from_toml(&text)?;
    let overrides = Overrides {
        window_max: args.window_max,
        pad_max: args.pad_max,
        stability_runs: args.stability_runs,
    };
    let spec = file.resolve(&overrides)?;
    let label = args
        .file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| args.file.display().to_string());
    let out = execute(kind, &spec, &label)?;
    let rendered = match args.format {
        Format::Text => out.report.text(),
        Format::Machine => out.report.machine(),
    };
    Ok((rendered, out.exit_code))
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version print to stdout and succeed; anything else
            // is a usage error.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    let (args, kind) = cli.command.split();
    match run(args, kind) {
        Ok((rendered, code)) => {
            print!("{rendered}");
            std::process::exit(code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
