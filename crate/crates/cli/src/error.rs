use std::path::PathBuf;

use thiserror::Error;

/// Pipeline stage, used to pick the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Stage {
    Load,
    UnitRoot,
    LagSelection,
    Johansen,
    LongRun,
    Vecm,
    Diagnostics,
    Output,
    Simulate,
}

impl Stage {
    pub fn name(self) -> &'static str {
        match self {
            Stage::Load => "load",
            Stage::UnitRoot => "unit-root",
            Stage::LagSelection => "lag-selection",
            Stage::Johansen => "johansen",
            Stage::LongRun => "long-run",
            Stage::Vecm => "vecm",
            Stage::Diagnostics => "diagnostics",
            Stage::Output => "output",
            Stage::Simulate => "simulate",
        }
    }

    pub fn exit_code(self) -> i32 {
        match self {
            Stage::Load => 3,
            Stage::UnitRoot => 4,
            Stage::LagSelection => 5,
            Stage::Johansen => 6,
            Stage::LongRun => 7,
            Stage::Vecm => 8,
            Stage::Diagnostics => 9,
            Stage::Output => 10,
            Stage::Simulate => 11,
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("parse error on line {line}: {message}")]
    ParseError { line: u64, message: String },
    #[error("missing column: {0}")]
    MissingColumn(String),
    #[error("variables not integrated of order one: {}", .0.join(", "))]
    NotIntegrated(Vec<String>),
    #[error("{} stage failed: {source}", .stage.name())]
    Stage {
        stage: Stage,
        #[source]
        source: vecmkit::Error,
    },
    #[error("i/o error on {}: {message}", .path.display())]
    Io { path: PathBuf, message: String },
}

impl CliError {
    pub fn at(stage: Stage) -> impl FnOnce(vecmkit::Error) -> CliError {
        move |source| CliError::Stage { stage, source }
    }

    pub fn io(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> CliError {
        let path = path.into();
        move |e| CliError::Io {
            path,
            message: e.to_string(),
        }
    }

    /// 2 for configuration problems, 3 and up per failing stage.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::FileNotFound(_) | CliError::ParseError { .. } | CliError::MissingColumn(_) => {
                Stage::Load.exit_code()
            }
            CliError::NotIntegrated(_) => Stage::UnitRoot.exit_code(),
            CliError::Stage { stage, .. } => stage.exit_code(),
            CliError::Io { .. } => Stage::Output.exit_code(),
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
