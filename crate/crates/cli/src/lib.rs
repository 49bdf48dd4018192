//! Command-line companion to `bellcorr-core`: experiment presets, JSON
//! configuration, noisy CSV trajectories and text reports.

pub mod config;
pub mod csv;
mod error;
pub mod noise;
pub mod report;
pub mod run;

pub use error::{CliError, Result, EXIT_IO, EXIT_VALIDATION};
