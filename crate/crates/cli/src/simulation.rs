use std::path::Path;

use serde::{Deserialize, Serialize};
use vecmkit::simulate::{rejection_rate, DgpSpec, RejectionSummary, TestDescriptor};

use crate::config::Format;
use crate::error::{CliError, Result, Stage};

fn default_alpha() -> f64 {
    0.05
}
fn default_reps() -> usize {
    1000
}

/// Monte Carlo experiment read from TOML: a `[dgp]` table and a `[test]` table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SimulationSpec {
    pub dgp: DgpSpec,
    pub test: TestDescriptor,
    #[serde(default = "default_reps")]
    pub reps: usize,
    #[serde(default = "default_alpha")]
    pub alpha: f64,
}

impl SimulationSpec {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        toml::from_str(&text).map_err(|e| CliError::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulationReport {
    pub spec: SimulationSpec,
    pub summary: RejectionSummary,
}

impl SimulationReport {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            Format::Text => format!(
                "Test: {:?}\nDGP: {:?}, k={}, T={}, seed {}\nRejection rate at the {}% level: {:.6} ({} of {} completed, {} failed, {} replications)\n",
                self.spec.test,
                self.spec.dgp.kind,
                self.spec.dgp.k,
                self.spec.dgp.t,
                self.spec.dgp.seed,
                vecmkit::percent_label(self.spec.alpha),
                self.summary.rate,
                self.summary.rejections,
                self.summary.completed,
                self.summary.failures,
                self.summary.reps
            ),
        }
    }
}

pub fn run_simulation(spec: &SimulationSpec) -> Result<SimulationReport> {
    if !(spec.alpha > 0.0 && spec.alpha < 1.0) {
        return Err(CliError::Config(format!("alpha {} outside (0, 1)", spec.alpha)));
    }
    let summary =
        rejection_rate(&spec.test, &spec.dgp, spec.reps, spec.alpha).map_err(CliError::at(Stage::Simulate))?;
    Ok(SimulationReport {
        spec: spec.clone(),
        summary,
    })
}
