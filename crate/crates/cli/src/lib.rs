//! Library side of the `forster-dots` command-line tool.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::path::PathBuf;

pub use config::{load_config, parse_config, Format, RunConfig};
pub use error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Sweep,
    Resonance,
    Spectrum,
    Gates,
    Tunneling,
    Singledot,
    Coupling,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Sweep => "sweep",
            Command::Resonance => "resonance",
            Command::Spectrum => "spectrum",
            Command::Gates => "gates",
            Command::Tunneling => "tunneling",
            Command::Singledot => "singledot",
            Command::Coupling => "coupling",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Invocation {
    pub command: Command,
    pub config: PathBuf,
    pub out: Option<PathBuf>,
    pub format: Option<Format>,
    pub overrides: commands::Overrides,
}

/// Run one command and return the rendered text plus its destination.
pub fn execute(inv: &Invocation) -> Result<(String, Option<PathBuf>), CliError> {
    let cfg = load_config(&inv.config)?;
    let o = &inv.overrides;
    let report = match inv.command {
        Command::Sweep => commands::cmd_sweep(&cfg, o)?,
        Command::Resonance => commands::cmd_resonance(&cfg)?,
        Command::Spectrum => commands::cmd_spectrum(&cfg)?,
        Command::Gates => commands::cmd_gates(&cfg)?,
        Command::Tunneling => commands::cmd_tunneling(&cfg)?,
        Command::Singledot => commands::cmd_singledot(&cfg, o)?,
        Command::Coupling => commands::cmd_coupling(&cfg, o)?,
    };
    let format = match inv.command {
        // the resonance summary is a JSON object unless asked otherwise
        Command::Resonance => inv.format.unwrap_or(Format::Json),
        _ => inv.format.unwrap_or(cfg.format),
    };
    let meta = output::Meta {
        command: inv.command.name(),
        config_sha256: &cfg.sha256,
    };
    let text = output::render(&report, format, &meta);
    let dest = inv
        .out
        .clone()
        .or_else(|| cfg.output_path.as_ref().map(PathBuf::from));
    Ok((text, dest))
}
