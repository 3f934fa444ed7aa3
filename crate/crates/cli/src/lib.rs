//! Batch front end: parses a command from flags or a JSON config, runs it,
//! and writes CSV or JSON with a provenance header.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

use std::path::PathBuf;

use clap::Parser;

pub use config::{Command, CommandName, Format, RunConfig};
pub use error::CliError;

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "EFIMOV_THREADS";

#[derive(Debug, Parser)]
#[command(name = "efimov", version, about = "Three-boson zero-range spectra")]
pub struct Cli {
    /// JSON run configuration; replaces the subcommand.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

/// A fully resolved run.
#[derive(Debug, Clone)]
pub struct Run {
    pub command: Command,
    pub output: Option<PathBuf>,
    pub format: Format,
}

impl Run {
    pub fn from_cli(cli: Cli) -> Result<Self, CliError> {
        let (command, output, format) = match (cli.config, cli.command) {
            (Some(_), Some(_)) => {
                return Err(CliError::Config(
                    "give either --config or a subcommand, not both".into(),
                ))
            }
            (None, None) => return Err(CliError::Config("no command given".into())),
            (None, Some(c)) => (c, cli.output, cli.format),
            (Some(path), None) => {
                let text = std::fs::read_to_string(&path).map_err(|source| CliError::Io {
                    path: path.clone(),
                    source,
                })?;
                let rc: RunConfig = serde_json::from_str(&text)
                    .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
                let c = Command::from_config(rc.command, rc.parameters)?;
                (c, cli.output.or(rc.output_path), cli.format.or(rc.format))
            }
        };
        let format = format.unwrap_or_else(|| command.default_format());
        Ok(Self {
            command,
            output,
            format,
        })
    }

    /// The configuration echoed into the output header. The output path is
    /// left out so that runs differing only in destination agree.
    pub fn echo(&self) -> serde_json::Value {
        serde_json::json!({
            "command": self.command.name(),
            "parameters": self.command.parameters(),
            "format": self.format,
        })
    }

    pub fn render(&self) -> Result<String, CliError> {
        let report = commands::execute(&self.command)?;
        let meta = output::Meta::new(&self.echo(), efimov_core::efimov_s0());
        match self.format {
            Format::Csv => output::render_csv(&meta, &report),
            Format::Json => Ok(output::render_json(&meta, &report)),
        }
    }

    pub fn execute(&self) -> Result<(), CliError> {
        let text = self.render()?;
        match &self.output {
            Some(path) => output::write_atomic(path, &text),
            None => {
                use std::io::Write;
                std::io::stdout()
                    .write_all(text.as_bytes())
                    .map_err(|source| CliError::Io {
                        path: "<stdout>".into(),
                        source,
                    })
            }
        }
    }
}

/// Reads the thread count from [`THREADS_ENV`] and sizes the global pool.
pub fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw.trim().parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
        CliError::Config(format!(
            "{THREADS_ENV} must be an integer >= 1, got '{raw}'"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Config(format!("thread pool: {e}")))
}
