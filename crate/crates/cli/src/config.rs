use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use vecmkit::johansen::DetCase;
use vecmkit::unit_root::Deterministic;
use vecmkit::var_select::LagRule;
use vecmkit::vecm::EcLayout;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Format {
    Json,
    Text,
}

impl Format {
    pub fn extension(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Text => "txt",
        }
    }
}

fn default_alpha() -> f64 {
    0.05
}
fn default_p_max() -> usize {
    3
}
fn default_level_det() -> Deterministic {
    Deterministic::ConstantAndTrend
}
fn default_diff_det() -> Deterministic {
    Deterministic::Constant
}
fn default_output_dir() -> PathBuf {
    PathBuf::from("out")
}
fn default_formats() -> Vec<Format> {
    vec![Format::Json, Format::Text]
}
fn default_true() -> bool {
    true
}

/// Run configuration, read from TOML.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    /// CSV path, relative paths resolve against the config file.
    pub input: PathBuf,
    /// Columns to analyse, in order. Empty means every non-year column.
    #[serde(default)]
    pub variables: Vec<String>,
    /// Columns to log-transform; they are renamed with an `l_` prefix.
    #[serde(default)]
    pub log: Vec<String>,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
    #[serde(default = "default_p_max")]
    pub p_max: usize,
    #[serde(default)]
    pub lag_rule: LagRule,
    #[serde(default = "default_level_det")]
    pub adf_level: Deterministic,
    #[serde(default = "default_diff_det")]
    pub adf_difference: Deterministic,
    #[serde(default)]
    pub adf_max_lags: Option<usize>,
    #[serde(default)]
    pub johansen_case: DetCase,
    /// Cointegration rank to use instead of the trace-test decision.
    #[serde(default)]
    pub rank: Option<usize>,
    /// Variable the long-run equation is solved for; defaults to the first.
    #[serde(default)]
    pub normalize_on: Option<String>,
    #[serde(default)]
    pub ec_layout: EcLayout,
    /// Abort when a variable is not I(1) instead of warning.
    #[serde(default)]
    pub require_i1: bool,
    #[serde(default = "default_output_dir")]
    pub output_dir: PathBuf,
    #[serde(default = "default_formats")]
    pub formats: Vec<Format>,
    #[serde(default = "default_true")]
    pub plot: bool,
    /// Raw columns to plot; defaults to all analysed variables.
    #[serde(default)]
    pub plot_variables: Vec<String>,
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    /// Reads a config file and resolves relative paths against its directory.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut cfg = Self::from_toml(&text)?;
        let base = path.parent().unwrap_or(Path::new(""));
        if cfg.input.is_relative() {
            cfg.input = base.join(&cfg.input);
        }
        if cfg.output_dir.is_relative() {
            cfg.output_dir = base.join(&cfg.output_dir);
        }
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha <= 0.5) {
            return Err(CliError::Config(format!("alpha {} outside (0, 0.5]", self.alpha)));
        }
        if self.p_max == 0 {
            return Err(CliError::Config("p_max must be at least 1".into()));
        }
        if self.formats.is_empty() {
            return Err(CliError::Config("no report format selected".into()));
        }
        if !self.variables.is_empty() {
            for name in self.log.iter().chain(&self.plot_variables) {
                if !self.variables.contains(name) {
                    return Err(CliError::Config(format!("`{name}` is not among the configured variables")));
                }
            }
        }
        Ok(())
    }

    /// Name of a configured column after transformation.
    pub fn analysed_name(&self, column: &str) -> String {
        if self.log.iter().any(|l| l == column) {
            format!("l_{column}")
        } else {
            column.to_string()
        }
    }
}
