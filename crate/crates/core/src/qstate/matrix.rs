use core::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_complex::Complex64;

/// Dense square complex matrix stored row-major on the stack.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexMatrix<const N: usize> {
    entries: [[Complex64; N]; N],
}

/// Single-qubit operator.
pub type Matrix2 = ComplexMatrix<2>;
/// Two-qubit operator in the basis |00>, |01>, |10>, |11> (qubit A first).
pub type Matrix4 = ComplexMatrix<4>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

impl<const N: usize> ComplexMatrix<N> {
    pub const DIM: usize = N;

    pub const fn zeros() -> Self {
        Self {
            entries: [[ZERO; N]; N],
        }
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            m.entries[i][i] = ONE;
        }
        m
    }

    pub const fn from_rows(entries: [[Complex64; N]; N]) -> Self {
        Self { entries }
    }

    pub fn from_real_rows(rows: [[f64; N]; N]) -> Self {
        let mut m = Self::zeros();
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                m.entries[i][j] = Complex64::new(x, 0.0);
            }
        }
        m
    }

    pub fn diagonal(values: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for (i, &x) in values.iter().enumerate() {
            m.entries[i][i] = Complex64::new(x, 0.0);
        }
        m
    }

    pub fn rows(&self) -> &[[Complex64; N]; N] {
        &self.entries
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                m.entries[j][i] = self.entries[i][j].conj();
            }
        }
        m
    }

    pub fn trace(&self) -> Complex64 {
        (0..N).map(|i| self.entries[i][i]).sum()
    }

    pub fn scale(&self, factor: f64) -> Self {
        self.map(|z| z * factor)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        let mut m = *self;
        for row in m.entries.iter_mut() {
            for z in row.iter_mut() {
                *z = f(*z);
            }
        }
        m
    }

    /// Largest entry-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0_f64;
        for i in 0..N {
            for j in 0..N {
                let d = libm::sqrt((self.entries[i][j] - other.entries[i][j]).norm_sqr());
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    /// Largest entry-wise modulus of `self - self^dagger`.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.hermiticity_defect() <= tol
    }

    /// `A X A^dagger`.
    pub fn conjugate_by(&self, a: &Self) -> Self {
        *a * *self * a.adjoint()
    }
}

impl Matrix2 {
    /// Kronecker product `self ⊗ rhs`; `self` acts on qubit A.
    pub fn kron(&self, rhs: &Matrix2) -> Matrix4 {
        let mut m = Matrix4::zeros();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        m.entries[2 * i + k][2 * j + l] = self.entries[i][j] * rhs.entries[k][l];
                    }
                }
            }
        }
        m
    }
}

impl<const N: usize> Default for ComplexMatrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> Index<(usize, usize)> for ComplexMatrix<N> {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.entries[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for ComplexMatrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.entries[i][j]
    }
}

impl<const N: usize> Add for ComplexMatrix<N> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.entries[i][j] += rhs.entries[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Sub for ComplexMatrix<N> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        for i in 0..N {
            for j in 0..N {
                self.entries[i][j] -= rhs.entries[i][j];
            }
        }
        self
    }
}

impl<const N: usize> Neg for ComplexMatrix<N> {
    type Output = Self;

    fn neg(self) -> Self {
        self.map(|z| -z)
    }
}

impl<const N: usize> Mul for ComplexMatrix<N> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        let mut m = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.entries[i][k];
                if a == ZERO {
                    continue;
                }
                for j in 0..N {
                    m.entries[i][j] += a * rhs.entries[k][j];
                }
            }
        }
        m
    }
}

impl<const N: usize> Mul<f64> for ComplexMatrix<N> {
    type Output = Self;

    fn mul(self, rhs: f64) -> Self {
        self.scale(rhs)
    }
}

impl<const N: usize> Mul<Complex64> for ComplexMatrix<N> {
    type Output = Self;

    fn mul(self, rhs: Complex64) -> Self {
        self.map(|z| z * rhs)
    }
}
