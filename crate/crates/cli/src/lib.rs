//! Scenario registry and report emission behind the `tracedcat` binary.

pub mod loaders;
mod plan;
mod render;
mod scenarios;

use std::path::PathBuf;

use serde::Serialize;

use tracedcat::model_order::FinPoset;
use tracedcat::Error;

pub use plan::{Expectation, Pin, SuiteOutcome, WitnessEntry};
pub use render::{render_json, render_text};
pub use scenarios::{catalogue, Scenario, ScenarioInfo};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Json,
    Text,
}

/// Everything besides the scenario name that determines a run. `cases` and
/// `max_size` fall back to the scenario's defaults when unset.
#[derive(Clone, Debug, Default)]
pub struct RunConfig {
    pub seed: u64,
    pub cases: Option<usize>,
    pub max_size: Option<usize>,
    /// Extra generators for the poset models.
    pub posets: Vec<FinPoset>,
    pub out: Option<PathBuf>,
    pub format: Format,
}

impl RunConfig {
    pub fn seed(seed: u64) -> Self {
        RunConfig { seed, ..Default::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConfigEcho {
    pub seed: u64,
    pub cases: usize,
    pub max_size: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub scenario: String,
    pub note: String,
    pub config: ConfigEcho,
    pub suites: Vec<SuiteOutcome>,
    pub expected_match: bool,
}

impl Report {
    pub fn suite(&self, name: &str) -> Option<&SuiteOutcome> {
        self.suites.iter().find(|s| s.name == name)
    }

    /// One line per suite whose verdict differs from its expectation.
    pub fn mismatches(&self) -> Vec<String> {
        self.suites
            .iter()
            .filter(|s| !s.matched)
            .map(|s| {
                let mut line = format!("{}: expected {}, got {}", s.name, s.expected.as_str(), s.verdict.as_str());
                if let Some(p) = &s.pin {
                    if !p.holds {
                        line.push_str(&format!(" (pinned witness not found: {})", p.description));
                    }
                }
                if let Some(f) = s.failures.first() {
                    line.push_str(&format!("; first failure: {} {}", f.law, f.witness));
                }
                line
            })
            .collect()
    }
}

/// Resolves `name` and runs its suites.
pub fn run_scenario(name: &str, config: &RunConfig) -> Result<Report, Error> {
    let scenario: Scenario = name.parse()?;
    scenario.run(config)
}
