//! Two-qubit state representation: dense complex matrices, Pauli operators,
//! density matrices, Bell-diagonal correlations and the trace norm.

mod bell;
mod eigen;
mod matrix;

pub use bell::{
    bell_diagonal_to_density, density_to_correlations, sort_correlations, BellDiagonalParams,
    SortedCorrelations, TIE_TOL,
};
pub use eigen::{hermitian_eigenvalues, trace_norm, HERMITIAN_TOL};
pub use matrix::{ComplexMatrix, Matrix2, Matrix4};

pub(crate) use bell::sort_by;
pub(crate) use eigen::trace_norm_unchecked;

use core::fmt;

use num_complex::Complex64;

use crate::{Error, Result};

/// Trace tolerance for [`DensityMatrix`].
pub const TRACE_TOL: f64 = 1e-10;
/// Eigenvalue slack for positivity checks.
pub const PSD_SLACK: f64 = 1e-9;

/// Pauli axis, `X = 1`, `Y = 2`, `Z = 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// One-based index, 1 for x through 3 for z.
    pub const fn index(self) -> usize {
        match self {
            Axis::X => 1,
            Axis::Y => 2,
            Axis::Z => 3,
        }
    }

    pub const fn from_index(index: usize) -> Option<Axis> {
        match index {
            1 => Some(Axis::X),
            2 => Some(Axis::Y),
            3 => Some(Axis::Z),
            _ => None,
        }
    }

    pub(crate) const fn slot(self) -> usize {
        self.index() - 1
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Pauli matrix for `axis`, in the basis where sigma_z is diagonal.
pub fn pauli(axis: Axis) -> Matrix2 {
    let o = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let i = Complex64::new(0.0, 1.0);
    match axis {
        Axis::X => Matrix2::from_rows([[o, one], [one, o]]),
        Axis::Y => Matrix2::from_rows([[o, -i], [i, o]]),
        Axis::Z => Matrix2::from_rows([[one, o], [o, -one]]),
    }
}

/// `sigma_axis ⊗ sigma_axis`.
pub fn pauli_pair(axis: Axis) -> Matrix4 {
    let s = pauli(axis);
    s.kron(&s)
}

/// A validated two-qubit state: Hermitian, unit trace, positive semidefinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DensityMatrix(Matrix4);

impl DensityMatrix {
    pub fn new(matrix: Matrix4) -> Result<Self> {
        let eigenvalues = hermitian_eigenvalues(&matrix)?;
        let trace = matrix.trace().re;
        if !((trace - 1.0).abs() <= TRACE_TOL) {
            return Err(Error::TraceNotUnit { trace });
        }
        if !(eigenvalues[0] >= -PSD_SLACK) {
            return Err(Error::NotPositive {
                min_eigenvalue: eigenvalues[0],
            });
        }
        Ok(Self(matrix))
    }

    /// Wraps a matrix that is a valid state by construction.
    pub(crate) fn new_unchecked(matrix: Matrix4) -> Self {
        Self(matrix)
    }

    pub fn maximally_mixed() -> Self {
        Self(Matrix4::identity().scale(0.25))
    }

    /// Projector onto a (not necessarily normalized) pure state.
    pub fn pure(amplitudes: [Complex64; 4]) -> Result<Self> {
        let norm: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        let mut m = Matrix4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                m[(i, j)] = amplitudes[i] * amplitudes[j].conj() / norm;
            }
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &Matrix4 {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix4 {
        self.0
    }

    pub fn eigenvalues(&self) -> [f64; 4] {
        eigen::jacobi_eigenvalues(&self.0)
    }

    /// `Re tr(rho O)`.
    pub fn expectation(&self, observable: &Matrix4) -> f64 {
        (self.0 * *observable).trace().re
    }

    /// Reduced state of qubit A.
    pub fn partial_trace_b(&self) -> Matrix2 {
        let mut m = Matrix2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                m[(i, j)] = self.0[(2 * i, 2 * j)] + self.0[(2 * i + 1, 2 * j + 1)];
            }
        }
        m
    }

    /// Reduced state of qubit B.
    pub fn partial_trace_a(&self) -> Matrix2 {
        let mut m = Matrix2::zeros();
        for k in 0..2 {
            for l in 0..2 {
                m[(k, l)] = self.0[(k, l)] + self.0[(2 + k, 2 + l)];
            }
        }
        m
    }
}

impl AsRef<Matrix4> for DensityMatrix {
    fn as_ref(&self) -> &Matrix4 {
        &self.0
    }
}
