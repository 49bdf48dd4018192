//! Runs an experiment configuration end to end.

use std::fs;
use std::path::Path;

use bellcorr_core::{simulate_trajectory, transition_report, Trajectory, TransitionReport};

use crate::config::ExperimentConfig;
use crate::csv::{to_csv_string, CsvRow};
use crate::error::{CliError, Result};
use crate::noise::{noise_rng, perturb_with};

/// Output of one simulation.
#[derive(Clone, Debug)]
pub struct RunOutput {
    pub config: ExperimentConfig,
    /// Noise-free closed-form trajectory; all transitions are computed on it.
    pub trajectory: Trajectory,
    pub report: TransitionReport,
    /// CSV rows, perturbed when `noise_sigma > 0`.
    pub rows: Vec<CsvRow>,
}

impl RunOutput {
    pub fn csv(&self) -> String {
        to_csv_string(&self.rows)
    }
}

/// Simulates `config` without touching the filesystem.
pub fn simulate(config: &ExperimentConfig) -> Result<RunOutput> {
    config.validate()?;
    let initial = config.initial_state()?;
    let model = config.channel_model()?;
    let trajectory = simulate_trajectory(&initial, &model, config.t_max, config.steps)?;
    let report = transition_report(&trajectory);
    let rows = if config.noise_sigma > 0.0 {
        let mut rng = noise_rng(config.seed);
        trajectory
            .samples()
            .iter()
            .map(|s| {
                CsvRow::new(
                    s.time,
                    &perturb_with(&s.correlations, config.noise_sigma, &mut rng),
                )
            })
            .collect()
    } else {
        trajectory.samples().iter().map(CsvRow::from).collect()
    };
    Ok(RunOutput {
        config: config.clone(),
        trajectory,
        report,
        rows,
    })
}

/// Simulates and, if `output_path` is set, writes the CSV there.
pub fn run_experiment(config: &ExperimentConfig) -> Result<RunOutput> {
    let out = simulate(config)?;
    if !config.output_path.is_empty() {
        let path = Path::new(&config.output_path);
        fs::write(path, out.csv()).map_err(|e| CliError::io(path, e))?;
    }
    Ok(out)
}
