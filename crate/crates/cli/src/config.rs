//! Command parameters, shared between flags and `--config` files.

use std::path::PathBuf;

use clap::{Args, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum CommandName {
    S0,
    Delta0,
    Ladder,
    Symbol,
    Scan,
    Residual,
    Thomas,
    Oracle,
}

/// Contents of a `--config` file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub command: CommandName,
    #[serde(default)]
    pub parameters: serde_json::Map<String, Value>,
    #[serde(default, alias = "output")]
    pub output_path: Option<PathBuf>,
    #[serde(default)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Efimov constant s0.
    S0(S0Params),
    /// Regularization threshold and related constants.
    Delta0(Delta0Params),
    /// Exact bound-state ladder for an extension parameter.
    Ladder(LadderParams),
    /// Regularized symbol on [0, s_max].
    Symbol(SymbolParams),
    /// Eigenvalue scan of the discretized radial operator over mu.
    Scan(ScanParams),
    /// Residual of the closed-form charge density.
    Residual(ResidualParams),
    /// Finite-difference checks of the singular free solution.
    Thomas(ThomasParams),
    /// Quadrature checks of the symbol transforms.
    Oracle(OracleParams),
}

impl Command {
    pub fn name(&self) -> CommandName {
        match self {
            Command::S0(_) => CommandName::S0,
            Command::Delta0(_) => CommandName::Delta0,
            Command::Ladder(_) => CommandName::Ladder,
            Command::Symbol(_) => CommandName::Symbol,
            Command::Scan(_) => CommandName::Scan,
            Command::Residual(_) => CommandName::Residual,
            Command::Thomas(_) => CommandName::Thomas,
            Command::Oracle(_) => CommandName::Oracle,
        }
    }

    /// Parameters as a JSON object, with every default filled in.
    pub fn parameters(&self) -> Value {
        let v = match self {
            Command::S0(p) => serde_json::to_value(p),
            Command::Delta0(p) => serde_json::to_value(p),
            Command::Ladder(p) => serde_json::to_value(p),
            Command::Symbol(p) => serde_json::to_value(p),
            Command::Scan(p) => serde_json::to_value(p),
            Command::Residual(p) => serde_json::to_value(p),
            Command::Thomas(p) => serde_json::to_value(p),
            Command::Oracle(p) => serde_json::to_value(p),
        };
        v.expect("parameter structs serialize")
    }

    pub fn from_config(
        name: CommandName,
        parameters: serde_json::Map<String, Value>,
    ) -> Result<Self, CliError> {
        fn parse<T: serde::de::DeserializeOwned>(
            m: serde_json::Map<String, Value>,
        ) -> Result<T, CliError> {
            serde_json::from_value(Value::Object(m))
                .map_err(|e| CliError::Config(format!("parameters: {e}")))
        }
        Ok(match name {
            CommandName::S0 => Command::S0(parse(parameters)?),
            CommandName::Delta0 => Command::Delta0(parse(parameters)?),
            CommandName::Ladder => Command::Ladder(parse(parameters)?),
            CommandName::Symbol => Command::Symbol(parse(parameters)?),
            CommandName::Scan => Command::Scan(parse(parameters)?),
            CommandName::Residual => Command::Residual(parse(parameters)?),
            CommandName::Thomas => Command::Thomas(parse(parameters)?),
            CommandName::Oracle => Command::Oracle(parse(parameters)?),
        })
    }

    pub fn default_format(&self) -> Format {
        match self {
            Command::S0(_) | Command::Delta0(_) => Format::Json,
            _ => Format::Csv,
        }
    }
}

fn split_range(s: &str) -> Result<(&str, &str), CliError> {
    s.split_once("..")
        .ok_or_else(|| CliError::Config(format!("expected a range 'lo..hi', got '{s}'")))
}

pub fn parse_int_range(s: &str) -> Result<(i64, i64), CliError> {
    let (a, b) = split_range(s)?;
    let bad = |_| CliError::Config(format!("bad integer range '{s}'"));
    let (lo, hi) = (
        a.trim().parse().map_err(bad)?,
        b.trim().parse().map_err(bad)?,
    );
    if lo > hi {
        return Err(CliError::Config(format!("empty range '{s}'")));
    }
    Ok((lo, hi))
}

pub fn parse_float_range(s: &str) -> Result<(f64, f64), CliError> {
    let (a, b) = split_range(s)?;
    let bad = |_| CliError::Config(format!("bad range '{s}'"));
    Ok((
        a.trim().parse().map_err(bad)?,
        b.trim().parse().map_err(bad)?,
    ))
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct S0Params {
    /// Required bound on |g(s0)|.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
}

impl Default for S0Params {
    fn default() -> Self {
        Self { tol: 1e-12 }
    }
}

#[derive(Debug, Clone, Default, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Delta0Params {}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct LadderParams {
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    pub beta: f64,
    /// Level range, inclusive.
    #[arg(long, default_value = "-3..3", allow_hyphen_values = true)]
    pub n: String,
}

impl Default for LadderParams {
    fn default() -> Self {
        Self {
            beta: 0.0,
            n: "-3..3".into(),
        }
    }
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SymbolParams {
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
    #[arg(long, default_value_t = 50.0)]
    pub s_max: f64,
    /// Number of uniform sample points.
    #[arg(long, default_value_t = 5000)]
    pub n: usize,
}

impl Default for SymbolParams {
    fn default() -> Self {
        Self {
            delta: 0.0,
            s_max: 50.0,
            n: 5000,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScanParams {
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
    /// Energy range `lo..hi` for mu = -E.
    #[arg(long, default_value = "1e-3..1e3")]
    pub mu: String,
    #[arg(long, default_value_t = 60)]
    pub n_mu: usize,
    /// Number of quadrature nodes.
    #[arg(long, default_value_t = 1000)]
    pub grid: usize,
    #[arg(long, default_value_t = 1e-5)]
    pub p_min: f64,
    #[arg(long, default_value_t = 1e5)]
    pub p_max: f64,
}

impl Default for ScanParams {
    fn default() -> Self {
        Self {
            delta: 0.0,
            mu: "1e-3..1e3".into(),
            n_mu: 60,
            grid: 1000,
            p_min: 1e-5,
            p_max: 1e5,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ResidualParams {
    #[arg(long, default_value_t = 1.0)]
    pub mu: f64,
    #[arg(long, default_value_t = 0.0)]
    pub delta: f64,
    #[arg(long, default_value_t = 2000)]
    pub grid: usize,
    /// Grid ends in units of sqrt(mu).
    #[arg(long, default_value_t = 1e-9)]
    pub p_min: f64,
    #[arg(long, default_value_t = 1e9)]
    pub p_max: f64,
}

impl Default for ResidualParams {
    fn default() -> Self {
        Self {
            mu: 1.0,
            delta: 0.0,
            grid: 2000,
            p_min: 1e-9,
            p_max: 1e9,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ThomasParams {
    #[arg(long, default_value_t = 10)]
    pub points: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Finite-difference step.
    #[arg(long, default_value_t = 1e-3)]
    pub h: f64,
    /// Distance from the coincidence plane for the boundary coefficient.
    #[arg(long, default_value_t = 1e-3)]
    pub eps: f64,
}

impl Default for ThomasParams {
    fn default() -> Self {
        Self {
            points: 10,
            seed: 0,
            h: 1e-3,
            eps: 1e-3,
        }
    }
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OracleParams {
    /// Comma-separated frequencies.
    #[arg(long, default_value = "0.25,0.5,1,2,5,10")]
    pub s: String,
    /// Point at which the position-space balance is evaluated.
    #[arg(long, default_value_t = 1.0)]
    pub x: f64,
}

impl Default for OracleParams {
    fn default() -> Self {
        Self {
            s: "0.25,0.5,1,2,5,10".into(),
            x: 1.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_int_range("-3..3").unwrap(), (-3, 3));
        assert_eq!(parse_float_range("1e-3..1e3").unwrap(), (1e-3, 1e3));
        assert!(parse_int_range("3..-3").is_err());
        assert!(parse_int_range("1,2").is_err());
        assert!(parse_float_range("a..1").is_err());
    }

    #[test]
    fn defaults_fill_missing_parameters() {
        let cmd = Command::from_config(CommandName::Scan, serde_json::Map::new()).unwrap();
        assert_eq!(cmd.parameters()["grid"], 1000);
        assert_eq!(cmd.default_format(), Format::Csv);
    }

    #[test]
    fn unknown_parameters_rejected() {
        let mut m = serde_json::Map::new();
        m.insert("tol".into(), 1e-10.into());
        assert!(Command::from_config(CommandName::S0, m.clone()).is_ok());
        m.insert("tolerance".into(), 1e-10.into());
        assert!(matches!(
            Command::from_config(CommandName::S0, m),
            Err(CliError::Config(_))
        ));
    }
}
