use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use filtquiv::dsl::QuiverDoc;
use filtquiv::invariants::DEFAULT_MAX_MONOMIALS;
use filtquiv::report::{error_exit_code, run_command, Command, RunOptions};
use filtquiv::{Error, Exec};

#[derive(Parser)]
#[command(
    version,
    about = "Pathway classification and unipotent invariants of filtered quiver representations"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Leave `millis` empty so repeated runs are byte-identical
    #[arg(long, global = true)]
    no_timing: bool,

    /// Run every loop on the calling thread
    #[arg(long, global = true)]
    sequential: bool,

    /// Abort when the monomial basis would exceed this size
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_MONOMIALS)]
    max_monomials: u128,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Plain {
    quiver: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
}

#[derive(Args)]
struct Framed {
    quiver: PathBuf,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    m: usize,
    #[arg(long)]
    d: u32,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether every pair of vertices has at most two pathways
    Classify { quiver: PathBuf },
    /// List the pathways between every pair of vertices
    Pathways { quiver: PathBuf },
    /// Basis of the invariants of degree at most d
    Invariants {
        quiver: PathBuf,
        #[arg(long)]
        n: usize,
        /// Dimension at the framed vertex (framed quivers only)
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        d: u32,
    },
    /// Diagonal monomials times block-standard bideterminants of degree at most d
    Generators(Framed),
    /// Compare the invariants with the diagonal polynomials
    VerifyThm1(Plain),
    /// Compare the invariants of a framed quiver with the bideterminant generators
    VerifyThm2(Framed),
    /// Evaluate a built-in example
    VerifyExample { id: String },
}

fn load(path: &Path) -> Result<QuiverDoc, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    text.parse().map_err(|e: Error| match e {
        Error::Syntax {
            line,
            column,
            message,
        } => format!("{}:{line}:{column}: {message}", path.display()),
        other => format!("{}: {other}", path.display()),
    })
}

fn command(cmd: Cmd) -> Result<Command, String> {
    Ok(match cmd {
        Cmd::Classify { quiver } => Command::Classify {
            doc: load(&quiver)?,
        },
        Cmd::Pathways { quiver } => Command::Pathways {
            doc: load(&quiver)?,
        },
        Cmd::Invariants { quiver, n, m, d } => Command::Invariants {
            doc: load(&quiver)?,
            n,
            m,
            d,
        },
        Cmd::Generators(f) => Command::Generators {
            doc: load(&f.quiver)?,
            n: f.n,
            m: f.m,
            d: f.d,
        },
        Cmd::VerifyThm1(p) => Command::VerifyThm1 {
            doc: load(&p.quiver)?,
            n: p.n,
            d: p.d,
        },
        Cmd::VerifyThm2(f) => Command::VerifyThm2 {
            doc: load(&f.quiver)?,
            n: f.n,
            m: f.m,
            d: f.d,
        },
        Cmd::VerifyExample { id } => Command::VerifyExample { id },
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let opts = RunOptions {
        exec: if cli.sequential {
            Exec::Sequential
        } else {
            Exec::Parallel
        },
        timing: !cli.no_timing,
        max_monomials: cli.max_monomials,
    };
    let cmd = match command(cli.command) {
        Ok(cmd) => cmd,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match run_command(&cmd, &opts) {
        Ok(report) => {
            match cli.format {
                Format::Json => println!("{}", report.to_json()),
                Format::Text => print!("{}", report.to_text()),
            }
            ExitCode::from(report.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_exit_code(&e) as u8)
        }
    }
}
