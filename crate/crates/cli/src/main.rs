use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use bellcorr::config::{load_config, ConfigSource};
use bellcorr::report::format_report;
use bellcorr::run::run_experiment;
use bellcorr::{CliError, Result};
use bellcorr_core::correlations::{DEFAULT_COARSE_POINTS, DEFAULT_REFINEMENT_LEVELS};
use bellcorr_core::{
    bell_diagonal_to_density, discord_measurement_sweep, geometric_quantum_discord,
    BellDiagonalParams,
};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bellcorr",
    version,
    about = "Geometric correlations of Bell-diagonal states under local noise"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Built-in preset: chloroform-pd or sodium-gad.
    #[arg(long)]
    preset: Option<String>,
    /// JSON configuration file.
    #[arg(long)]
    config: Option<PathBuf>,
}

impl Source {
    fn resolve(self) -> ConfigSource {
        match (self.preset, self.config) {
            (Some(name), _) => ConfigSource::Preset(name),
            (None, Some(path)) => ConfigSource::File(path),
            (None, None) => unreachable!("clap requires one source"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Sample the trajectory and write CSV plus a transition report.
    Simulate {
        #[command(flatten)]
        source: Source,
        /// CSV destination; the report then goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        noise_sigma: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Print the analytic transition times only.
    CriticalPoints {
        #[command(flatten)]
        source: Source,
    },
    /// Minimise the measured-state distance numerically and compare with c_0.
    SweepOracle {
        #[arg(long, allow_negative_numbers = true)]
        c1: f64,
        #[arg(long, allow_negative_numbers = true)]
        c2: f64,
        #[arg(long, allow_negative_numbers = true)]
        c3: f64,
        #[arg(long, default_value_t = DEFAULT_COARSE_POINTS)]
        points: usize,
        #[arg(long, default_value_t = DEFAULT_REFINEMENT_LEVELS)]
        levels: usize,
    },
}

fn stdio(e: io::Error) -> CliError {
    CliError::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Simulate {
            source,
            out,
            noise_sigma,
            seed,
        } => {
            let mut config = load_config(&source.resolve())?;
            if let Some(sigma) = noise_sigma {
                config.noise_sigma = sigma;
            }
            if let Some(seed) = seed {
                config.seed = seed;
            }
            if let Some(path) = out {
                config.output_path = path.display().to_string();
            }
            let result = run_experiment(&config)?;
            let report = format_report(&result);
            if config.output_path.is_empty() {
                io::stdout()
                    .lock()
                    .write_all(result.csv().as_bytes())
                    .map_err(stdio)?;
                eprint!("{report}");
            } else {
                io::stdout()
                    .lock()
                    .write_all(report.as_bytes())
                    .map_err(stdio)?;
            }
        }
        Command::CriticalPoints { source } => {
            let mut config = load_config(&source.resolve())?;
            // two samples are enough for the closed-form quantities
            config.steps = 2;
            config.noise_sigma = 0.0;
            config.output_path.clear();
            let result = run_experiment(&config)?;
            let report = format_report(&result);
            let analytic: String = report
                .lines()
                .filter(|l| !l.starts_with("detected") && !l.starts_with("warning"))
                .map(|l| format!("{l}\n"))
                .collect();
            io::stdout()
                .lock()
                .write_all(analytic.as_bytes())
                .map_err(stdio)?;
        }
        Command::SweepOracle {
            c1,
            c2,
            c3,
            points,
            levels,
        } => {
            let c = BellDiagonalParams::new(c1, c2, c3).map_err(|e| CliError::Validation {
                field: "c1/c2/c3",
                message: e.to_string(),
            })?;
            let sweep = discord_measurement_sweep(&bell_diagonal_to_density(&c), points, levels);
            let exact = geometric_quantum_discord(&c);
            let n = sweep.argmin.unit_vector();
            println!("sweep minimum: {:.9}", sweep.minimum);
            println!("closed form c_0: {exact:.9}");
            println!("difference: {:.3e}", sweep.minimum - exact);
            println!("argmin: ({:.6}, {:.6}, {:.6})", n[0], n[1], n[2]);
            println!("evaluations: {}", sweep.grid_points);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
