//! Trace-norm geometric quantum discord and its classical counterpart.
//!
//! For Bell-diagonal states both quantities have closed forms: the discord is
//! the intermediate `|c_i|` and the classical correlation the largest one.
//! [`discord_measurement_sweep`] is an independent brute-force check that
//! minimizes `||rho - M_n(rho)||_1` over projective measurements `M_n` on
//! qubit A, scanning a Fibonacci lattice and then refining around the best
//! direction.

use core::f64::consts::PI;

use crate::qstate::{
    bell_diagonal_to_density, pauli, sort_correlations, trace_norm_unchecked, Axis,
    BellDiagonalParams, DensityMatrix, Matrix2, Matrix4,
};

pub const DEFAULT_COARSE_POINTS: usize = 2000;
pub const DEFAULT_REFINEMENT_LEVELS: usize = 3;
/// Smaller coarse grids are raised to this size.
pub const MIN_COARSE_POINTS: usize = 500;

/// Cap radius shrink factor between refinement levels.
const CAP_SHRINK: f64 = 0.3;
/// Local grid density relative to the coarse lattice.
const LOCAL_DENSITY_FACTOR: usize = 10;

/// `Q_G = c_0`, the intermediate absolute correlation.
pub fn geometric_quantum_discord(c: &BellDiagonalParams) -> f64 {
    sort_correlations(c).c_zero()
}

/// `C_G = c_+`, the largest absolute correlation.
pub fn geometric_classical_correlation(c: &BellDiagonalParams) -> f64 {
    sort_correlations(c).c_plus()
}

/// `(I⊗I + c_j sigma_j⊗sigma_j) / 4` with `j` the dominant axis.
pub fn closest_classical_state(c: &BellDiagonalParams) -> DensityMatrix {
    let j = sort_correlations(c).axis_plus();
    let mut kept = [0.0; 3];
    kept[j.index() - 1] = c.get(j);
    bell_diagonal_to_density(&BellDiagonalParams::new_unchecked(kept))
}

/// `rho_A ⊗ rho_B`.
pub fn product_of_marginals(rho: &DensityMatrix) -> DensityMatrix {
    DensityMatrix::new_unchecked(rho.partial_trace_b().kron(&rho.partial_trace_a()))
}

/// `||chi - pi||_1`.
pub fn classical_correlation_from_states(chi: &DensityMatrix, pi: &DensityMatrix) -> f64 {
    trace_norm_unchecked(&(*chi.matrix() - *pi.matrix()))
}

/// Bloch direction `n = (sin θ cos φ, sin θ sin φ, cos θ)` of a projective
/// measurement on qubit A.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MeasurementDirection {
    theta: f64,
    phi: f64,
}

impl MeasurementDirection {
    /// `theta` is clamped to `[0, π]` and `phi` wrapped into `[0, 2π)`.
    pub fn new(theta: f64, phi: f64) -> Self {
        let theta = theta.clamp(0.0, PI);
        let mut phi = libm::fmod(phi, 2.0 * PI);
        if phi < 0.0 {
            phi += 2.0 * PI;
        }
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        Self { theta, phi }
    }

    /// Direction of a nonzero vector.
    pub fn from_vector(v: [f64; 3]) -> Self {
        let [x, y, z] = normalize(v);
        Self::new(libm::acos(z.clamp(-1.0, 1.0)), libm::atan2(y, x))
    }

    pub fn along(axis: Axis) -> Self {
        let mut v = [0.0; 3];
        v[axis.index() - 1] = 1.0;
        Self::from_vector(v)
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn unit_vector(&self) -> [f64; 3] {
        let s = libm::sin(self.theta);
        [
            s * libm::cos(self.phi),
            s * libm::sin(self.phi),
            libm::cos(self.theta),
        ]
    }

    /// `(Π+, Π-) = ((I + n·σ)/2, (I - n·σ)/2)`.
    pub fn projectors(&self) -> (Matrix2, Matrix2) {
        projectors_for(self.unit_vector())
    }
}

fn projectors_for(n: [f64; 3]) -> (Matrix2, Matrix2) {
    let n_sigma = Axis::ALL.iter().fold(Matrix2::zeros(), |acc, &a| {
        acc + pauli(a).scale(n[a.index() - 1])
    });
    let id = Matrix2::identity();
    ((id + n_sigma).scale(0.5), (id - n_sigma).scale(0.5))
}

/// Non-selective measurement of qubit A: `sum_k (Π_k ⊗ I) rho (Π_k ⊗ I)`.
pub fn measure_subsystem_a(rho: &DensityMatrix, dir: &MeasurementDirection) -> DensityMatrix {
    DensityMatrix::new_unchecked(measure_along(rho.matrix(), dir.unit_vector()))
}

fn measure_along(rho: &Matrix4, n: [f64; 3]) -> Matrix4 {
    let (plus, minus) = projectors_for(n);
    let id = Matrix2::identity();
    let p = plus.kron(&id);
    let m = minus.kron(&id);
    p * *rho * p + m * *rho * m
}

fn measurement_residual(rho: &Matrix4, n: [f64; 3]) -> f64 {
    trace_norm_unchecked(&(*rho - measure_along(rho, n)))
}

/// Outcome of [`discord_measurement_sweep`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepResult {
    /// Smallest `||rho - M_n(rho)||_1` found.
    pub minimum: f64,
    pub argmin: MeasurementDirection,
    /// Total number of directions evaluated.
    pub grid_points: usize,
    pub refinement_levels: usize,
}

/// Brute-force minimum of `||rho - M_n(rho)||_1` over measurement directions.
///
/// The coarse pass evaluates a Fibonacci lattice of `coarse_points` directions
/// (at least [`MIN_COARSE_POINTS`]). Each refinement level then fills a
/// spherical cap around the incumbent with a sunflower spiral, shrinking the
/// cap radius by 0.3 per level.
pub fn discord_measurement_sweep(
    rho: &DensityMatrix,
    coarse_points: usize,
    refinement_levels: usize,
) -> SweepResult {
    let m = rho.matrix();
    let n_coarse = coarse_points.max(MIN_COARSE_POINTS);

    let mut best_dir = [0.0, 0.0, 1.0];
    let mut best = f64::INFINITY;
    let mut evaluated = 0;
    let mut consider = |v: [f64; 3], best: &mut f64, best_dir: &mut [f64; 3]| {
        let r = measurement_residual(m, v);
        evaluated += 1;
        if r < *best {
            *best = r;
            *best_dir = v;
        }
    };

    for k in 0..n_coarse {
        consider(fibonacci_point(k, n_coarse), &mut best, &mut best_dir);
    }

    // The first cap spans two lattice spacings around the incumbent.
    let spacing = libm::sqrt(4.0 * PI / n_coarse as f64);
    let mut radius = 2.0 * spacing;
    let coarse_in_cap = libm::ceil(n_coarse as f64 * radius * radius / 4.0) as usize;
    let local_points = LOCAL_DENSITY_FACTOR * coarse_in_cap.max(1);

    for _ in 0..refinement_levels {
        let center = best_dir;
        for k in 0..local_points {
            consider(
                cap_point(center, radius, k, local_points),
                &mut best,
                &mut best_dir,
            );
        }
        radius *= CAP_SHRINK;
    }

    SweepResult {
        minimum: best,
        argmin: MeasurementDirection::from_vector(best_dir),
        grid_points: evaluated,
        refinement_levels,
    }
}

/// Residual after measuring along each coordinate axis; returns the smallest
/// together with its axis (ties go to the lower axis index).
pub fn axis_measurement_minimum(rho: &DensityMatrix) -> (f64, Axis) {
    let mut best = (f64::INFINITY, Axis::X);
    for axis in Axis::ALL {
        let mut n = [0.0; 3];
        n[axis.index() - 1] = 1.0;
        let r = measurement_residual(rho.matrix(), n);
        if r < best.0 {
            best = (r, axis);
        }
    }
    best
}

fn golden_angle() -> f64 {
    PI * (3.0 - libm::sqrt(5.0))
}

fn fibonacci_point(k: usize, n: usize) -> [f64; 3] {
    let z = 1.0 - (2.0 * k as f64 + 1.0) / n as f64;
    let r = libm::sqrt((1.0 - z * z).max(0.0));
    let phi = golden_angle() * k as f64;
    [r * libm::cos(phi), r * libm::sin(phi), z]
}

/// `k`-th of `n` sunflower points within geodesic distance `radius` of `center`.
fn cap_point(center: [f64; 3], radius: f64, k: usize, n: usize) -> [f64; 3] {
    let (u, v) = tangent_basis(center);
    let dist = radius * libm::sqrt((k as f64 + 0.5) / n as f64);
    let angle = golden_angle() * k as f64;
    let (ca, sa) = (libm::cos(angle), libm::sin(angle));
    let (cd, sd) = (libm::cos(dist), libm::sin(dist));
    normalize([
        center[0] * cd + (u[0] * ca + v[0] * sa) * sd,
        center[1] * cd + (u[1] * ca + v[1] * sa) * sd,
        center[2] * cd + (u[2] * ca + v[2] * sa) * sd,
    ])
}

fn tangent_basis(n: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let helper = if n[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let u = normalize(cross(n, helper));
    let v = cross(n, u);
    (u, v)
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn normalize(v: [f64; 3]) -> [f64; 3] {
    let norm = libm::sqrt(v.iter().map(|x| x * x).sum());
    v.map(|x| x / norm)
}

#[cfg(test)]
mod tests {
    use num_complex::Complex64;

    use super::*;
    use crate::qstate::{density_to_correlations, trace_norm};

    fn bd(c1: f64, c2: f64, c3: f64) -> BellDiagonalParams {
        BellDiagonalParams::new(c1, c2, c3).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(geometric_quantum_discord(&bd(0.0, 0.0, 0.0)), 0.0);
        assert_eq!(geometric_quantum_discord(&bd(0.49, 0.20, 0.067)), 0.20);
        assert_eq!(geometric_quantum_discord(&bd(0.08, 0.14, 0.16)), 0.14);
        assert_eq!(geometric_classical_correlation(&bd(0.0, 0.0, 0.0)), 0.0);
        assert_eq!(
            geometric_classical_correlation(&bd(0.49, 0.20, 0.067)),
            0.49
        );
        assert_eq!(geometric_classical_correlation(&bd(0.08, 0.14, 0.16)), 0.16);
    }

    #[test]
    fn closest_classical_examples() {
        let chi = closest_classical_state(&bd(0.49, 0.20, 0.067));
        let want = bell_diagonal_to_density(&bd(0.49, 0.0, 0.0));
        assert!(chi.matrix().approx_eq(want.matrix(), 0.0));

        let chi = closest_classical_state(&bd(0.0, 0.0, 0.0));
        assert!(chi
            .matrix()
            .approx_eq(DensityMatrix::maximally_mixed().matrix(), 0.0));

        let chi = closest_classical_state(&bd(0.08, 0.14, 0.16));
        let want = bell_diagonal_to_density(&bd(0.0, 0.0, 0.16));
        assert!(chi.matrix().approx_eq(want.matrix(), 0.0));

        let c = bd(0.49, 0.20, 0.067);
        let rho = bell_diagonal_to_density(&c);
        let dist = trace_norm(&(*rho.matrix() - *closest_classical_state(&c).matrix())).unwrap();
        assert!((dist - 0.20).abs() < 1e-10);
    }

    #[test]
    fn marginals() {
        let mixed = DensityMatrix::maximally_mixed();
        let rho = bell_diagonal_to_density(&bd(0.49, 0.20, 0.067));
        assert!(product_of_marginals(&rho)
            .matrix()
            .approx_eq(mixed.matrix(), 1e-16));

        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        let ket00 = DensityMatrix::pure([one, zero, zero, zero]).unwrap();
        assert!(product_of_marginals(&ket00)
            .matrix()
            .approx_eq(ket00.matrix(), 0.0));

        let phi_plus = DensityMatrix::pure([one, zero, zero, one]).unwrap();
        assert!(product_of_marginals(&phi_plus)
            .matrix()
            .approx_eq(mixed.matrix(), 1e-16));
    }

    #[test]
    fn marginals_of_a_product_state_with_distinct_factors() {
        let a = Matrix2::from_real_rows([[0.8, 0.1], [0.1, 0.2]]);
        let b = Matrix2::from_real_rows([[0.3, -0.2], [-0.2, 0.7]]);
        let rho = DensityMatrix::new(a.kron(&b)).unwrap();
        assert!(rho.partial_trace_b().approx_eq(&a, 1e-15));
        assert!(rho.partial_trace_a().approx_eq(&b, 1e-15));
    }

    #[test]
    fn classical_from_states_examples() {
        let pi = DensityMatrix::maximally_mixed();
        assert_eq!(classical_correlation_from_states(&pi, &pi), 0.0);
        let chi = bell_diagonal_to_density(&bd(0.49, 0.0, 0.0));
        assert!((classical_correlation_from_states(&chi, &pi) - 0.49).abs() < 1e-12);
        let chi = bell_diagonal_to_density(&bd(0.0, 0.0, 0.16));
        assert!((classical_correlation_from_states(&chi, &pi) - 0.16).abs() < 1e-12);
    }

    #[test]
    fn axis_measurements_keep_one_correlation() {
        let c = bd(0.49, -0.20, 0.067);
        let rho = bell_diagonal_to_density(&c);
        let z = measure_subsystem_a(&rho, &MeasurementDirection::along(Axis::Z));
        let out = density_to_correlations(&z);
        assert!(out.max_abs_diff(&bd(0.0, 0.0, 0.067)) < 1e-15);
        assert!(z
            .matrix()
            .approx_eq(bell_diagonal_to_density(&out).matrix(), 1e-15));

        let x = measure_subsystem_a(&rho, &MeasurementDirection::along(Axis::X));
        let out = density_to_correlations(&x);
        assert!(out.max_abs_diff(&bd(0.49, 0.0, 0.0)) < 1e-15);
        assert!(x
            .matrix()
            .approx_eq(bell_diagonal_to_density(&out).matrix(), 1e-15));

        let mixed = DensityMatrix::maximally_mixed();
        let d = MeasurementDirection::new(0.7, 2.1);
        assert!(measure_subsystem_a(&mixed, &d)
            .matrix()
            .approx_eq(mixed.matrix(), 1e-15));
    }

    #[test]
    fn projectors_are_orthogonal_idempotents() {
        for (theta, phi) in [(0.0, 0.0), (1.1, 4.0), (PI, 1.0), (0.3, 6.2)] {
            let (p, m) = MeasurementDirection::new(theta, phi).projectors();
            assert!((p + m).approx_eq(&Matrix2::identity(), 1e-12));
            assert!((p * p).approx_eq(&p, 1e-12));
            assert!((m * m).approx_eq(&m, 1e-12));
        }
    }

    #[test]
    fn direction_normalization() {
        let d = MeasurementDirection::new(0.5, -0.25);
        assert!((d.phi() - (2.0 * PI - 0.25)).abs() < 1e-15);
        let d = MeasurementDirection::from_vector([0.0, 0.0, -2.0]);
        assert!((d.theta() - PI).abs() < 1e-15);
        let v = MeasurementDirection::along(Axis::Y).unit_vector();
        assert!((v[1] - 1.0).abs() < 1e-15 && v[0].abs() < 1e-15 && v[2].abs() < 1e-15);
    }

    #[test]
    fn sweep_chloroform_state() {
        let rho = bell_diagonal_to_density(&bd(0.49, 0.20, 0.067));
        let res = discord_measurement_sweep(&rho, DEFAULT_COARSE_POINTS, DEFAULT_REFINEMENT_LEVELS);
        assert!((res.minimum - 0.20).abs() < 1e-4, "{res:?}");
        // The residual is flat up to roughly 0.36 rad from x towards z.
        let n = res.argmin.unit_vector();
        assert!(n[0].abs() > libm::cos(0.4), "argmin {n:?}");
        assert_eq!(res.refinement_levels, 3);
        assert!(res.grid_points > DEFAULT_COARSE_POINTS);
    }

    #[test]
    fn sweep_classical_quantum_state() {
        let rho = bell_diagonal_to_density(&bd(0.0, 0.0, 0.5));
        // c_0 = 0 puts a linear cusp at the optimum, so the default grid is
        // only accurate to the final cap spacing; deeper refinement closes it.
        let res = discord_measurement_sweep(&rho, DEFAULT_COARSE_POINTS, DEFAULT_REFINEMENT_LEVELS);
        assert!(res.minimum < 1e-3, "{res:?}");
        let res = discord_measurement_sweep(&rho, DEFAULT_COARSE_POINTS, 6);
        assert!(res.minimum < 1e-4, "{res:?}");
    }

    #[test]
    fn sweep_bell_state() {
        let rho = bell_diagonal_to_density(&bd(1.0, -1.0, 1.0));
        let res = discord_measurement_sweep(&rho, DEFAULT_COARSE_POINTS, DEFAULT_REFINEMENT_LEVELS);
        assert!((res.minimum - 1.0).abs() < 1e-4, "{res:?}");
        let (axis_min, _) = axis_measurement_minimum(&rho);
        assert!((axis_min - 1.0).abs() < 1e-12);
    }

    #[test]
    fn sweep_raises_small_grids() {
        let rho = DensityMatrix::maximally_mixed();
        let res = discord_measurement_sweep(&rho, 10, 0);
        assert_eq!(res.grid_points, MIN_COARSE_POINTS);
        assert!(res.minimum < 1e-12);
    }
}
