use thiserror::Error;

/// Errors raised when constructing or validating states, channels and grids.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max |M - M^dagger| = {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("density matrix trace is {trace}, expected 1")]
    TraceNotUnit { trace: f64 },

    #[error("density matrix has negative eigenvalue {min_eigenvalue:e}")]
    NotPositive { min_eigenvalue: f64 },

    #[error("correlations ({c1}, {c2}, {c3}) lie outside the physical tetrahedron")]
    Unphysical { c1: f64, c2: f64, c3: f64 },

    #[error("{name} = {value} is outside [0, 1]")]
    OutOfUnitInterval { name: &'static str, value: f64 },

    #[error("Kraus set is not complete (max |sum E^dagger E - I| = {deviation:e})")]
    IncompleteKraus { deviation: f64 },

    #[error("Kraus set is empty")]
    EmptyKraus,

    #[error("{name} = {value} s must be positive and finite")]
    NonPositiveTime { name: &'static str, value: f64 },

    #[error("evolution time must be non-negative, got {0} s")]
    NegativeTime(f64),

    #[error(
        "closed-form evolution under generalized amplitude damping requires gamma = 1/2, got {0}"
    )]
    GammaNotHalf(f64),

    #[error("sample times must be strictly increasing, got {0} s after a later time")]
    UnorderedTimes(f64),

    #[error("a trajectory needs at least 2 samples, got {0}")]
    TooFewSteps(usize),
}
