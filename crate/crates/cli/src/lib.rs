//! CSV ingestion, the full cointegration pipeline, report rendering and
//! trend plots behind the `vecmkit` command.

pub mod config;
pub mod data;
pub mod error;
pub mod plot;
pub mod report;
pub mod simulation;

pub use config::{Format, RunConfig};
pub use data::{load_csv, LoadOptions};
pub use error::{CliError, Stage};
pub use plot::render_plot;
pub use report::{run_pipeline, write_outputs, PipelineReport};
