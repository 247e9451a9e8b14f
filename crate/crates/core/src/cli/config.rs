//! Run configuration for `ordalab check`.

use std::path::Path;

use serde::Deserialize;

use super::report::Format;
use crate::{Error, Result};

/// The property suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Axioms,
    Density,
    Shrink,
    Metric,
    Sequence,
    Series,
    Condensation,
    Geometric,
    Bernoulli,
    Albert,
    All,
}

impl Suite {
    pub const EACH: [Suite; 10] = [
        Suite::Axioms,
        Suite::Density,
        Suite::Shrink,
        Suite::Metric,
        Suite::Sequence,
        Suite::Series,
        Suite::Condensation,
        Suite::Geometric,
        Suite::Bernoulli,
        Suite::Albert,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Axioms => "axioms",
            Suite::Density => "density",
            Suite::Shrink => "shrink",
            Suite::Metric => "metric",
            Suite::Sequence => "sequence",
            Suite::Series => "series",
            Suite::Condensation => "condensation",
            Suite::Geometric => "geometric",
            Suite::Bernoulli => "bernoulli",
            Suite::Albert => "albert",
            Suite::All => "all",
        }
    }
}

pub const DEFAULT_HORIZON: u64 = 64;
pub const DEFAULT_SEED: u64 = 0;

/// Defaults: suite `all`, the structure's own grid, horizon 64, seed 0,
/// JSON output.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub structure: String,
    #[serde(default = "default_suite")]
    pub suite: Suite,
    /// Term expressions for the ε grid, replacing the structure's default.
    #[serde(default)]
    pub grid: Option<Vec<String>>,
    #[serde(default = "default_horizon")]
    pub horizon: u64,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub format: Format,
}

fn default_suite() -> Suite {
    Suite::All
}

fn default_horizon() -> u64 {
    DEFAULT_HORIZON
}

impl RunConfig {
    pub fn new(structure: impl Into<String>, suite: Suite) -> Self {
        RunConfig {
            structure: structure.into(),
            suite,
            grid: None,
            horizon: DEFAULT_HORIZON,
            seed: DEFAULT_SEED,
            format: Format::Json,
        }
    }

    pub fn from_json(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::InvalidArgument(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let src = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&src)
    }
}
