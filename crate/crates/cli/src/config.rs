//! Experiment configuration: flat JSON files or built-in presets.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use bellcorr_core::{BellDiagonalParams, ChannelKind, ChannelModel};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Channel {
    Pd,
    Gad,
}

impl From<Channel> for ChannelKind {
    fn from(c: Channel) -> Self {
        match c {
            Channel::Pd => ChannelKind::PhaseDamping,
            Channel::Gad => ChannelKind::GeneralizedAmplitudeDamping,
        }
    }
}

fn half() -> f64 {
    0.5
}

/// All parameters of one run. Field names double as the JSON keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub channel: Channel,
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
    /// Relaxation time of qubit A in seconds.
    pub t_a: f64,
    /// Relaxation time of qubit B in seconds.
    pub t_b: f64,
    #[serde(default = "half")]
    pub gamma: f64,
    pub t_max: f64,
    pub steps: usize,
    #[serde(default)]
    pub noise_sigma: f64,
    #[serde(default)]
    pub seed: u64,
    /// Empty means the CSV goes to stdout.
    #[serde(default)]
    pub output_path: String,
}

/// Parameter sets of the two NMR experiments.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preset {
    /// 13C-enriched chloroform, dephasing with the T2* times of 1H and 13C.
    ChloroformPd,
    /// Sodium quadrupolar spin-3/2, generalized amplitude damping.
    SodiumGad,
}

impl Preset {
    pub const ALL: [Preset; 2] = [Preset::ChloroformPd, Preset::SodiumGad];

    pub fn name(self) -> &'static str {
        match self {
            Preset::ChloroformPd => "chloroform-pd",
            Preset::SodiumGad => "sodium-gad",
        }
    }

    pub fn config(self) -> ExperimentConfig {
        match self {
            Preset::ChloroformPd => ExperimentConfig {
                channel: Channel::Pd,
                c1: 0.49,
                c2: 0.20,
                c3: 0.067,
                t_a: 0.27,
                t_b: 0.15,
                gamma: 0.5,
                t_max: 0.5,
                steps: 501,
                noise_sigma: 0.0,
                seed: 0,
                output_path: String::new(),
            },
            Preset::SodiumGad => ExperimentConfig {
                channel: Channel::Gad,
                c1: 0.08,
                c2: 0.14,
                c3: 0.16,
                t_a: 0.012,
                t_b: 0.012,
                gamma: 0.5,
                t_max: 0.03,
                steps: 601,
                noise_sigma: 0.0,
                seed: 0,
                output_path: String::new(),
            },
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Preset {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| CliError::UnknownPreset(s.to_owned()))
    }
}

/// Where a configuration comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConfigSource {
    Preset(String),
    File(PathBuf),
}

/// Loads and validates a configuration.
pub fn load_config(source: &ConfigSource) -> Result<ExperimentConfig> {
    let config = match source {
        ConfigSource::Preset(name) => name.parse::<Preset>()?.config(),
        ConfigSource::File(path) => read_config_file(path)?,
    };
    config.validate()?;
    Ok(config)
}

fn read_config_file(path: &Path) -> Result<ExperimentConfig> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_config(&text, &path.display().to_string())
}

/// Parses a JSON configuration without validating it.
pub fn parse_config(text: &str, origin: &str) -> Result<ExperimentConfig> {
    serde_json::from_str(text).map_err(|e| CliError::Parse {
        origin: origin.to_owned(),
        message: e.to_string(),
    })
}

impl ExperimentConfig {
    pub fn initial_state(&self) -> Result<BellDiagonalParams> {
        BellDiagonalParams::new(self.c1, self.c2, self.c3).map_err(|_| {
            CliError::invalid(
                "c1/c2/c3",
                format!(
                    "({}, {}, {}) is outside the physical tetrahedron",
                    self.c1, self.c2, self.c3
                ),
            )
        })
    }

    pub fn channel_model(&self) -> Result<ChannelModel> {
        positive("t_a", self.t_a)?;
        positive("t_b", self.t_b)?;
        if !(0.0..=1.0).contains(&self.gamma) {
            return Err(CliError::invalid(
                "gamma",
                format!("{} is outside [0, 1]", self.gamma),
            ));
        }
        let model = ChannelModel::new(self.channel.into(), self.t_a, self.t_b, self.gamma)?;
        if !model.preserves_bell_diagonal() {
            return Err(CliError::invalid(
                "gamma",
                format!(
                    "{} leaves the Bell-diagonal family; gad runs need 0.5",
                    self.gamma
                ),
            ));
        }
        Ok(model)
    }

    /// Checks every field; the first failure is reported.
    pub fn validate(&self) -> Result<()> {
        self.initial_state()?;
        self.channel_model()?;
        positive("t_max", self.t_max)?;
        if self.steps < 2 {
            return Err(CliError::invalid("steps", format!("{} < 2", self.steps)));
        }
        if !(self.noise_sigma >= 0.0 && self.noise_sigma.is_finite()) {
            return Err(CliError::invalid(
                "noise_sigma",
                format!("{} must be a finite non-negative number", self.noise_sigma),
            ));
        }
        Ok(())
    }
}

fn positive(field: &'static str, value: f64) -> Result<()> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(CliError::invalid(
            field,
            format!("{value} must be positive"),
        ))
    }
}
