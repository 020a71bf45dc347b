//! JSON model configuration for the command-line front end.
//!
//! One document describes the model, the surplus grid, and the Monte Carlo
//! settings:
//!
//! ```json
//! {
//!   "premium_rate": 10.0,
//!   "claim_intensity": 4.0,
//!   "claims": { "family": "erlang", "shape": 3, "mean": 2.0 },
//!   "funds": { "family": "erlang", "shape": 2, "mean": 0.5 },
//!   "x_grid": [0, 1, 2, 5, 10],
//!   "mc": { "epsilon": 0.001, "delta": 0.001, "seed": 1 }
//! }
//! ```
//!
//! `claims`/`funds` accept the families `exponential {mean}`,
//! `erlang {shape, mean}`, `hyperexponential {components: [{weight, mean}]}`
//! and `degenerate {point}`. The optional `mc` block may also carry
//! `surplus_cap` or `max_claims` to override the automatic truncation rule.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dist::DistributionSpec;
use crate::error::{Error, Result};
use crate::model::RiskModel;
use crate::montecarlo::Truncation;

/// Monte Carlo settings. `epsilon`/`delta` feed the sample-size planner;
/// either cap field overrides the automatic truncation rule.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct McConfig {
    #[serde(default = "default_epsilon")]
    pub epsilon: f64,
    #[serde(default = "default_delta")]
    pub delta: f64,
    #[serde(default = "default_seed")]
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub surplus_cap: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_claims: Option<u64>,
}

fn default_epsilon() -> f64 {
    0.001
}

fn default_delta() -> f64 {
    0.001
}

fn default_seed() -> u64 {
    1
}

impl Default for McConfig {
    fn default() -> Self {
        McConfig {
            epsilon: default_epsilon(),
            delta: default_delta(),
            seed: default_seed(),
            surplus_cap: None,
            max_claims: None,
        }
    }
}

/// A parsed model configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub premium_rate: f64,
    pub claim_intensity: f64,
    pub claims: DistributionSpec,
    pub funds: DistributionSpec,
    pub x_grid: Vec<f64>,
    #[serde(default)]
    pub mc: McConfig,
}

impl ModelConfig {
    /// Read and validate a config file.
    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        Self::from_json(&text)
    }

    /// Parse and validate a config document.
    pub fn from_json(text: &str) -> Result<Self> {
        let config: ModelConfig =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("config serialization cannot fail")
    }

    /// Structural checks beyond what the model itself enforces.
    pub fn validate(&self) -> Result<()> {
        self.to_model()?;
        if self.x_grid.is_empty() {
            return Err(Error::InvalidParameters("x_grid must not be empty".into()));
        }
        for w in self.x_grid.windows(2) {
            if w[1] < w[0] {
                return Err(Error::InvalidParameters(format!(
                    "x_grid must be sorted, got {} before {}",
                    w[0], w[1]
                )));
            }
        }
        if let Some(&x) = self.x_grid.first() {
            if !(x.is_finite() && x >= 0.0) {
                return Err(Error::InvalidParameters(format!(
                    "x_grid values must be nonnegative, got {x}"
                )));
            }
        }
        if self.mc.epsilon.is_nan() || self.mc.epsilon <= 0.0 {
            return Err(Error::NonPositiveEpsilon(self.mc.epsilon));
        }
        if self.mc.delta.is_nan() || self.mc.delta <= 0.0 {
            return Err(Error::InvalidParameters(format!(
                "delta must be positive, got {}",
                self.mc.delta
            )));
        }
        if let Some(cap) = self.mc.surplus_cap {
            let max_x = self.x_grid.last().copied().unwrap_or(0.0);
            if cap.is_nan() || cap <= max_x {
                return Err(Error::InvalidParameters(format!(
                    "surplus_cap {cap} must exceed the largest grid point {max_x}"
                )));
            }
        }
        Ok(())
    }

    /// Build the validated risk model.
    pub fn to_model(&self) -> Result<RiskModel> {
        RiskModel::new(
            self.premium_rate,
            self.claim_intensity,
            self.claims.clone(),
            self.funds.clone(),
        )
    }

    /// Truncation rule for a run starting at `x`: an explicit override from
    /// the config, otherwise the automatic rule.
    pub fn truncation_for(&self, model: &RiskModel, x: f64) -> Truncation {
        if let Some(level) = self.mc.surplus_cap {
            Truncation::SurplusCap { level }
        } else if let Some(max_claims) = self.mc.max_claims {
            Truncation::ClaimCap { max_claims }
        } else {
            Truncation::default_for(model, x)
        }
    }
}
