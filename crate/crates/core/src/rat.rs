//! Exact rational scalars and small dense rational matrices.
//!
//! All structural data of a root system (Cartan matrix, Gram matrices,
//! Casimir values, center coordinates) lives in `Ratio<i128>`.  Denominators
//! stay tiny — they divide products of marks and dual Coxeter numbers — so
//! `i128` gives enormous headroom before any overflow, and every operation
//! here is exact.

use alloc::vec;
use alloc::vec::Vec;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rat = Ratio<i128>;

#[inline]
#[must_use]
pub fn rat(n: i128, d: i128) -> Rat {
    Ratio::new(n, d)
}

#[inline]
#[must_use]
pub fn rat_int(n: i128) -> Rat {
    Ratio::from_integer(n)
}

/// Exact conversion to `f64` with one rounding at the end.
///
/// Numerator and denominator are converted separately; both fit in `f64`
/// without overflow for every quantity the library produces (coordinates are
/// bounded by the enumeration budget, denominators by group constants).
#[inline]
#[must_use]
pub fn rat_to_f64(x: Rat) -> f64 {
    let n = *x.numer();
    let d = *x.denom();
    // i128 -> f64 is a saturating cast; values here are far below 2^53 except
    // for Casimir numerators of extreme cutoffs, where one rounding is fine.
    (n as f64) / (d as f64)
}

/// Row-major dense matrix over `Rat`.
#[derive(Debug, Clone, PartialEq)]
pub struct RatMatrix {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    #[must_use]
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    #[must_use]
    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rat::one();
        }
        m
    }

    /// Build from row-major integer entries.
    #[must_use]
    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        RatMatrix {
            rows,
            cols,
            data: entries.iter().map(|&e| rat_int(e as i128)).collect(),
        }
    }

    #[must_use]
    pub fn transpose(&self) -> Self {
        let mut out = RatMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(j, i)] = self[(i, j)];
            }
        }
        out
    }

    #[must_use]
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * other[(k, j)];
                    out[(i, j)] = out[(i, j)] + prod;
                }
            }
        }
        out
    }

    /// Matrix–vector product.
    #[must_use]
    pub fn mul_vec(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self[(i, j)] * v[j])
                    .fold(Rat::zero(), |a, b| a + b)
            })
            .collect()
    }

    /// Exact inverse by Gauss–Jordan with partial pivoting on magnitude.
    /// Panics if the matrix is singular; callers only invert Cartan-type
    /// matrices whose nonsingularity is a table fact.
    #[must_use]
    pub fn inverse(&self) -> Self {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMatrix::identity(n);
        for col in 0..n {
            let pivot_row = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .expect("singular matrix");
            if pivot_row != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot_row * n + j);
                    inv.data.swap(col * n + j, pivot_row * n + j);
                }
            }
            let p = a[(col, col)];
            for j in 0..n {
                a[(col, j)] = a[(col, j)] / p;
                inv[(col, j)] = inv[(col, j)] / p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)];
                for j in 0..n {
                    let sub_a = f * a[(col, j)];
                    let sub_i = f * inv[(col, j)];
                    a[(r, j)] = a[(r, j)] - sub_a;
                    inv[(r, j)] = inv[(r, j)] - sub_i;
                }
            }
        }
        inv
    }

    /// Exact determinant by fraction-free elimination on a working copy.
    #[must_use]
    pub fn det(&self) -> Rat {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a = self.clone();
        let mut det = Rat::one();
        for col in 0..n {
            let pivot_row = match (col..n).find(|&r| !a[(r, col)].is_zero()) {
                Some(r) => r,
                None => return Rat::zero(),
            };
            if pivot_row != col {
                for j in 0..n {
                    a.data.swap(col * n + j, pivot_row * n + j);
                }
                det = -det;
            }
            let p = a[(col, col)];
            det *= p;
            for r in (col + 1)..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)] / p;
                for j in col..n {
                    let sub = f * a[(col, j)];
                    a[(r, j)] = a[(r, j)] - sub;
                }
            }
        }
        det
    }

    /// LDLᵀ factorization of a symmetric positive-definite matrix:
    /// returns `(L, d)` with `L` unit lower triangular and `d` the diagonal,
    /// so that `self = L · diag(d) · Lᵀ` exactly.
    #[must_use]
    pub fn ldl(&self) -> (RatMatrix, Vec<Rat>) {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut l = RatMatrix::identity(n);
        let mut d = vec![Rat::zero(); n];
        for j in 0..n {
            let mut dj = self[(j, j)];
            for k in 0..j {
                dj -= l[(j, k)] * l[(j, k)] * d[k];
            }
            assert!(dj.is_positive(), "matrix not positive definite");
            d[j] = dj;
            for i in (j + 1)..n {
                let mut v = self[(i, j)];
                for k in 0..j {
                    v -= l[(i, k)] * l[(j, k)] * d[k];
                }
                l[(i, j)] = v / dj;
            }
        }
        (l, d)
    }
}

impl core::ops::Index<(usize, usize)> for RatMatrix {
    type Output = Rat;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &Rat {
        &self.data[i * self.cols + j]
    }
}

impl core::ops::IndexMut<(usize, usize)> for RatMatrix {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }
}
