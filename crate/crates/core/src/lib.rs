//! Geometric (trace-norm) quantum and classical correlations of two-qubit
//! Bell-diagonal states under local phase damping and generalized amplitude
//! damping.
//!
//! The crate is `no_std` and only needs `alloc` for Kraus sets and sampled
//! trajectories. Transcendental functions go through [`libm`] so that results
//! are bit-reproducible across platforms.
//!
//! ```
//! use bellcorr_core::{
//!     analytic_critical_points, BellDiagonalParams, ChannelModel,
//!     geometric_classical_correlation, geometric_quantum_discord,
//! };
//!
//! let c = BellDiagonalParams::new(0.49, 0.20, 0.067).unwrap();
//! assert_eq!(geometric_quantum_discord(&c), 0.20);
//! assert_eq!(geometric_classical_correlation(&c), 0.49);
//!
//! let model = ChannelModel::phase_damping(0.27, 0.15).unwrap();
//! let points = analytic_critical_points(&c, &model);
//! assert!((points.t1.unwrap() - 0.105).abs() < 1e-3);
//! assert!((points.t2.unwrap() - 0.192).abs() < 1e-3);
//! ```
#![no_std]
#![deny(missing_debug_implementations)]
// `!(x <= tol)` style checks are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod channels;
pub mod correlations;
pub mod dynamics;
mod error;
pub mod qstate;

pub use channels::{
    apply_local_channels, decoherence_time, evolve_bell_diagonal, gad_kraus, pd_kraus, ChannelKind,
    ChannelModel, KrausSet,
};
pub use correlations::{
    axis_measurement_minimum, classical_correlation_from_states, closest_classical_state,
    discord_measurement_sweep, geometric_classical_correlation, geometric_quantum_discord,
    measure_subsystem_a, product_of_marginals, MeasurementDirection, SweepResult,
};
pub use dynamics::{
    analytic_critical_points, classical_sudden_change_time, detect_sudden_changes,
    pointer_basis_time, simulate_trajectory, transition_report, CriticalPoints, CrossingConditions,
    Sample, SuddenChanges, Trajectory, TransitionReport,
};
pub use error::Error;
pub use qstate::{
    bell_diagonal_to_density, density_to_correlations, hermitian_eigenvalues, sort_correlations,
    trace_norm, Axis, BellDiagonalParams, ComplexMatrix, DensityMatrix, Matrix2, Matrix4,
    SortedCorrelations,
};

/// Crate-wide result alias.
pub type Result<T, E = Error> = core::result::Result<T, E>;
