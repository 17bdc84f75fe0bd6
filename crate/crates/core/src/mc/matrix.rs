//! Small dense complex matrices for the unitary groups.
//!
//! Everything the samplers need fits in a fixed 3x3 capacity: `CMat` carries
//! its live dimension `n` (2 or 3) and stores entries row-major with stride
//! `n`.  Keeping the storage inline (no heap) matters because word evaluation
//! multiplies tens of matrices per sample across 1e5 samples.

use num_complex::Complex64;

use crate::fx;

/// Maximum supported dimension.
pub const CMAT_CAP: usize = 3;

/// A complex `n x n` matrix, `n <= 3`, stored inline.
#[derive(Clone, Copy, Debug)]
pub struct CMat {
    n: usize,
    a: [Complex64; CMAT_CAP * CMAT_CAP],
}

impl CMat {
    /// Zero matrix of dimension `n`.
    #[must_use]
    #[inline]
    pub fn zero(n: usize) -> Self {
        debug_assert!(n >= 1 && n <= CMAT_CAP);
        CMat { n, a: [Complex64::new(0.0, 0.0); CMAT_CAP * CMAT_CAP] }
    }

    /// Identity matrix of dimension `n`.
    #[must_use]
    #[inline]
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.a[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Diagonal matrix from the given entries.
    #[must_use]
    #[inline]
    pub fn from_diag(d: &[Complex64]) -> Self {
        let mut m = Self::zero(d.len());
        for (i, &v) in d.iter().enumerate() {
            m.a[i * m.n + i] = v;
        }
        m
    }

    /// Live dimension.
    #[must_use]
    #[inline]
    pub fn dim(&self) -> usize {
        self.n
    }

    /// Entry at row `r`, column `c`.
    #[must_use]
    #[inline]
    pub fn at(&self, r: usize, c: usize) -> Complex64 {
        debug_assert!(r < self.n && c < self.n);
        self.a[r * self.n + c]
    }

    /// Set the entry at row `r`, column `c`.
    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Complex64) {
        debug_assert!(r < self.n && c < self.n);
        self.a[r * self.n + c] = v;
    }

    /// Matrix product `self * rhs`.
    #[must_use]
    pub fn mul(&self, rhs: &CMat) -> CMat {
        debug_assert_eq!(self.n, rhs.n);
        let n = self.n;
        let mut out = CMat::zero(n);
        for r in 0..n {
            for c in 0..n {
                let mut s = Complex64::new(0.0, 0.0);
                for k in 0..n {
                    s += self.a[r * n + k] * rhs.a[k * n + c];
                }
                out.a[r * n + c] = s;
            }
        }
        out
    }

    /// Conjugate transpose.  For a unitary matrix this is the inverse.
    #[must_use]
    pub fn adjoint(&self) -> CMat {
        let n = self.n;
        let mut out = CMat::zero(n);
        for r in 0..n {
            for c in 0..n {
                out.a[r * n + c] = self.a[c * n + r].conj();
            }
        }
        out
    }

    /// Trace.
    #[must_use]
    #[inline]
    pub fn trace(&self) -> Complex64 {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 0..self.n {
            s += self.a[i * self.n + i];
        }
        s
    }

    /// Scalar multiple.
    #[must_use]
    #[inline]
    pub fn scale(&self, z: Complex64) -> CMat {
        let mut out = *self;
        for v in &mut out.a[..self.n * self.n] {
            *v *= z;
        }
        out
    }

    /// Determinant by cofactor expansion (`n <= 3`).
    #[must_use]
    pub fn det(&self) -> Complex64 {
        let n = self.n;
        let a = &self.a;
        match n {
            1 => a[0],
            2 => a[0] * a[3] - a[1] * a[2],
            _ => {
                a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6])
                    + a[2] * (a[3] * a[7] - a[4] * a[6])
            }
        }
    }

    /// Largest entrywise absolute difference from `rhs`.
    #[must_use]
    pub fn max_abs_diff(&self, rhs: &CMat) -> f64 {
        debug_assert_eq!(self.n, rhs.n);
        let mut worst = 0.0;
        for i in 0..self.n * self.n {
            let d = (self.a[i] - rhs.a[i]).norm();
            if d > worst {
                worst = d;
            }
        }
        worst
    }

    /// Largest deviation of `self * self^dagger` from the identity; a cheap
    /// unitarity gauge used in debug assertions and tests.
    #[must_use]
    pub fn unitarity_defect(&self) -> f64 {
        self.mul(&self.adjoint()).max_abs_diff(&CMat::identity(self.n))
    }
}

/// `1 / |sin|`-free phase: `e^{i theta}` as a complex unit.
#[must_use]
#[inline]
pub fn cis(theta: f64) -> Complex64 {
    Complex64::new(fx::cos(theta), fx::sin(theta))
}
