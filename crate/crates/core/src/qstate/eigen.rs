//! Cyclic Jacobi eigensolver for small Hermitian matrices and the trace norm.

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::{Error, Result};

/// Hermiticity tolerance accepted by the eigensolver.
pub const HERMITIAN_TOL: f64 = 1e-10;

const MAX_SWEEPS: usize = 64;

/// Eigenvalues of a Hermitian matrix in ascending order.
pub fn hermitian_eigenvalues<const N: usize>(m: &ComplexMatrix<N>) -> Result<[f64; N]> {
    let deviation = m.hermiticity_defect();
    if !(deviation <= HERMITIAN_TOL) {
        return Err(Error::NotHermitian { deviation });
    }
    Ok(jacobi_eigenvalues(m))
}

/// Schatten 1-norm of a Hermitian matrix, the sum of absolute eigenvalues.
pub fn trace_norm<const N: usize>(m: &ComplexMatrix<N>) -> Result<f64> {
    hermitian_eigenvalues(m).map(|ev| ev.iter().map(|x| x.abs()).sum())
}

/// Trace norm for matrices that are Hermitian by construction.
pub(crate) fn trace_norm_unchecked<const N: usize>(m: &ComplexMatrix<N>) -> f64 {
    jacobi_eigenvalues(m).iter().map(|x| x.abs()).sum()
}

pub(crate) fn jacobi_eigenvalues<const N: usize>(m: &ComplexMatrix<N>) -> [f64; N] {
    // Work on the Hermitian part so tiny asymmetries do not accumulate.
    let mut a = [[Complex64::new(0.0, 0.0); N]; N];
    for i in 0..N {
        for j in 0..N {
            a[i][j] = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
        }
    }

    let scale: f64 = a
        .iter()
        .flat_map(|row| row.iter())
        .map(|z| z.norm_sqr())
        .sum::<f64>();
    let threshold = 1e-30 * scale.max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..N)
            .flat_map(|i| (i + 1..N).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j].norm_sqr())
            .sum();
        if off <= threshold {
            break;
        }
        for p in 0..N {
            for q in p + 1..N {
                rotate(&mut a, p, q);
            }
        }
    }

    let mut ev = [0.0; N];
    for (i, x) in ev.iter_mut().enumerate() {
        *x = a[i][i].re;
    }
    ev.sort_by(f64::total_cmp);
    ev
}

/// Annihilate `a[p][q]` with a unitary rotation in the (p, q) plane.
fn rotate<const N: usize>(a: &mut [[Complex64; N]; N], p: usize, q: usize) {
    let apq = a[p][q];
    let modulus = libm::sqrt(apq.norm_sqr());
    if modulus == 0.0 {
        return;
    }
    // Phase so that the (p, q) element becomes real and positive.
    let phase = apq / modulus;
    let app = a[p][p].re;
    let aqq = a[q][q].re;
    let theta = (aqq - app) / (2.0 * modulus);
    let t = if theta >= 0.0 {
        1.0 / (theta + libm::sqrt(theta * theta + 1.0))
    } else {
        -1.0 / (-theta + libm::sqrt(theta * theta + 1.0))
    };
    let c = 1.0 / libm::sqrt(t * t + 1.0);
    let s = t * c;

    // U = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q).
    let pc = phase.conj();
    for row in a.iter_mut() {
        let akp = row[p];
        let akq = row[q];
        row[p] = akp * c - akq * pc * s;
        row[q] = akp * s + akq * pc * c;
    }
    #[allow(clippy::needless_range_loop)]
    for k in 0..N {
        let bpk = a[p][k];
        let bqk = a[q][k];
        a[p][k] = bpk * c - bqk * phase * s;
        a[q][k] = bpk * s + bqk * phase * c;
    }
    a[p][q] = Complex64::new(0.0, 0.0);
    a[q][p] = Complex64::new(0.0, 0.0);
    a[p][p] = Complex64::new(a[p][p].re, 0.0);
    a[q][q] = Complex64::new(a[q][q].re, 0.0);
}
