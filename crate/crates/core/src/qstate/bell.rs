use core::fmt;

use super::{pauli_pair, Axis, DensityMatrix, Matrix4, PSD_SLACK};
use crate::{Error, Result};

/// Absolute tolerance under which two `|c_i|` count as equal when sorting.
pub const TIE_TOL: f64 = 1e-12;

/// Spin-spin correlations `c_i = <sigma_i ⊗ sigma_i>` of a Bell-diagonal state.
///
/// Construction checks that the point lies in the tetrahedron of physical
/// states, i.e. that every Bell-basis weight is non-negative.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BellDiagonalParams {
    c: [f64; 3],
}

impl BellDiagonalParams {
    pub fn new(c1: f64, c2: f64, c3: f64) -> Result<Self> {
        let params = Self { c: [c1, c2, c3] };
        let finite = params.c.iter().all(|x| x.is_finite());
        let bounded = params.c.iter().all(|x| x.abs() <= 1.0 + PSD_SLACK);
        let positive = params.eigenvalues().iter().all(|&w| w >= -PSD_SLACK);
        if finite && bounded && positive {
            Ok(params)
        } else {
            Err(Error::Unphysical { c1, c2, c3 })
        }
    }

    pub fn from_array(c: [f64; 3]) -> Result<Self> {
        Self::new(c[0], c[1], c[2])
    }

    pub(crate) const fn new_unchecked(c: [f64; 3]) -> Self {
        Self { c }
    }

    pub const fn zero() -> Self {
        Self { c: [0.0; 3] }
    }

    pub fn c1(&self) -> f64 {
        self.c[0]
    }

    pub fn c2(&self) -> f64 {
        self.c[1]
    }

    pub fn c3(&self) -> f64 {
        self.c[2]
    }

    pub fn get(&self, axis: Axis) -> f64 {
        self.c[axis.slot()]
    }

    pub fn to_array(&self) -> [f64; 3] {
        self.c
    }

    /// Weights of the four Bell states, in the order
    /// `(1+c1-c2+c3)/4, (1-c1+c2+c3)/4, (1+c1+c2-c3)/4, (1-c1-c2-c3)/4`.
    pub fn eigenvalues(&self) -> [f64; 4] {
        let [c1, c2, c3] = self.c;
        [
            (1.0 + c1 - c2 + c3) / 4.0,
            (1.0 - c1 + c2 + c3) / 4.0,
            (1.0 + c1 + c2 - c3) / 4.0,
            (1.0 - c1 - c2 - c3) / 4.0,
        ]
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.c
            .iter()
            .zip(other.c.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }
}

impl fmt::Display for BellDiagonalParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.c[0], self.c[1], self.c[2])
    }
}

/// `|c_i|` sorted ascending together with the axis each value came from.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SortedCorrelations {
    values: [f64; 3],
    axes: [Axis; 3],
}

impl SortedCorrelations {
    pub fn c_minus(&self) -> f64 {
        self.values[0]
    }

    pub fn c_zero(&self) -> f64 {
        self.values[1]
    }

    pub fn c_plus(&self) -> f64 {
        self.values[2]
    }

    pub fn axis_minus(&self) -> Axis {
        self.axes[0]
    }

    pub fn axis_zero(&self) -> Axis {
        self.axes[1]
    }

    pub fn axis_plus(&self) -> Axis {
        self.axes[2]
    }

    pub fn values(&self) -> [f64; 3] {
        self.values
    }

    pub fn axes(&self) -> [Axis; 3] {
        self.axes
    }
}

/// Sorts `|c_i|` ascending; values within [`TIE_TOL`] keep ascending axis order.
pub fn sort_correlations(c: &BellDiagonalParams) -> SortedCorrelations {
    sort_by(c, |a, b| (a - b).abs() <= TIE_TOL)
}

/// Insertion sort of the three axes by `|c_i|` with a caller-defined tie test.
pub(crate) fn sort_by(
    c: &BellDiagonalParams,
    tie: impl Fn(f64, f64) -> bool,
) -> SortedCorrelations {
    let abs = c.c.map(f64::abs);
    let precedes = |a: Axis, b: Axis| {
        let (x, y) = (abs[a.slot()], abs[b.slot()]);
        if tie(x, y) {
            a < b
        } else {
            x < y
        }
    };
    let mut axes = Axis::ALL;
    for i in 1..3 {
        let mut j = i;
        while j > 0 && precedes(axes[j], axes[j - 1]) {
            axes.swap(j, j - 1);
            j -= 1;
        }
    }
    SortedCorrelations {
        values: axes.map(|a| abs[a.slot()]),
        axes,
    }
}

/// `rho = (I⊗I + sum_i c_i sigma_i⊗sigma_i) / 4`.
pub fn bell_diagonal_to_density(c: &BellDiagonalParams) -> DensityMatrix {
    let mut m = Matrix4::identity();
    for axis in Axis::ALL {
        m = m + pauli_pair(axis).scale(c.get(axis));
    }
    DensityMatrix::new_unchecked(m.scale(0.25))
}

/// `c_i = Re tr(rho sigma_i⊗sigma_i)`; off-Bell-diagonal content is dropped.
pub fn density_to_correlations(rho: &DensityMatrix) -> BellDiagonalParams {
    // Twirling into the Bell-diagonal family is a channel, so the result is physical.
    BellDiagonalParams::new_unchecked(Axis::ALL.map(|a| rho.expectation(&pauli_pair(a))))
}
