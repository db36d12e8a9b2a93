use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use forster_dots::commands::Overrides;
use forster_dots::{execute, CliError, Command, Format, Invocation};

#[derive(Parser)]
#[command(
    name = "forster-dots",
    version,
    about = "Förster-coupled quantum dot simulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Energies, coupling and rates across a field sweep
    Sweep(Common),
    /// Resonance field, minimum gap and V_F there, as JSON
    Resonance(Common),
    /// Absorption lines at the configured fields
    Spectrum(Common),
    /// iSWAP and CNOT from the XY coupling
    Gates(Common),
    /// Electron and hole tunneling between the dots
    Tunneling(Common),
    /// Single-dot overlap, energy and binding versus field
    Singledot(Common),
    /// Förster coupling versus separation
    Coupling(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    config: PathBuf,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    points: Option<usize>,
    /// Sweep end field, MV/m
    #[arg(long)]
    fmax: Option<f64>,
}

fn invocation(cmd: Cmd) -> Invocation {
    let (command, c) = match cmd {
        Cmd::Sweep(c) => (Command::Sweep, c),
        Cmd::Resonance(c) => (Command::Resonance, c),
        Cmd::Spectrum(c) => (Command::Spectrum, c),
        Cmd::Gates(c) => (Command::Gates, c),
        Cmd::Tunneling(c) => (Command::Tunneling, c),
        Cmd::Singledot(c) => (Command::Singledot, c),
        Cmd::Coupling(c) => (Command::Coupling, c),
    };
    Invocation {
        command,
        config: c.config,
        out: c.out,
        format: c.format,
        overrides: Overrides {
            points: c.points,
            fmax: c.fmax,
        },
    }
}

fn run(inv: &Invocation) -> Result<(), CliError> {
    let (text, dest) = execute(inv)?;
    match dest {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io(e.to_string())),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&invocation(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
