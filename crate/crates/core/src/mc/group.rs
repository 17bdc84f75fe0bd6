//! SU(2) and SU(3) as concrete matrix groups.
//!
//! The Monte Carlo cross-checks run on the two smallest special unitary
//! groups, where Haar sampling and character evaluation are cheap:
//!
//! * **SU(2)** — a unit quaternion from four normals; characters by the
//!   Chebyshev-type recurrence `chi_m = chi_1 chi_{m-1} - chi_{m-2}`.
//! * **SU(3)** — a Ginibre matrix orthonormalized column by column (the QR
//!   construction with positive diagonal, which is Haar on U(3)), then pushed
//!   to determinant one by scaling the first column with `det^{-1}`; both
//!   steps together are Haar on SU(3).  Characters come from power sums via
//!   Newton's identity and a 3x3 Jacobi-Trudi determinant.
//!
//! Class representatives for boundary holonomies reuse the algebra layer's
//! orthonormal frame: a class with frame coordinates `x` maps to the diagonal
//! matrix with angles `theta_j = w_j . (M^T x)` over the weights `w_j` of the
//! defining representation, times the central scalar.

use alloc::vec;
use alloc::vec::Vec;
use num_complex::Complex64;
use rand::Rng;

use crate::algebra::chars::HolonomySpec;
use crate::algebra::roots::{Family, RootSystem};
use crate::algebra::weights::Weight;
use crate::error::{Error, Result};
use crate::mc::matrix::{cis, CMat};
use crate::mc::rng::normal_pair;

/// Which special unitary group the sampler runs on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpecialUnitary {
    Two,
    Three,
}

/// Weights of the defining representation, highest first, in
/// fundamental-weight coordinates.
const DEF_WEIGHTS_2: [[i64; 1]; 2] = [[1], [-1]];
const DEF_WEIGHTS_3: [[i64; 2]; 3] = [[1, 0], [-1, 1], [0, -1]];

impl SpecialUnitary {
    /// The matrix group realizing a root system, when one is wired up.
    ///
    /// Only `A1` and `A2` have samplers; everything else reports
    /// [`Error::UnsupportedGroup`].
    pub fn from_root_system(rs: &RootSystem) -> Result<Self> {
        match (rs.family(), rs.rank()) {
            (Family::A, 1) => Ok(SpecialUnitary::Two),
            (Family::A, 2) => Ok(SpecialUnitary::Three),
            (f, r) => Err(Error::UnsupportedGroup { family: f.letter(), rank: r }),
        }
    }

    /// Matrix dimension (2 or 3).
    #[must_use]
    #[inline]
    pub fn dim(self) -> usize {
        match self {
            SpecialUnitary::Two => 2,
            SpecialUnitary::Three => 3,
        }
    }

    /// Identity element.
    #[must_use]
    #[inline]
    pub fn identity(self) -> CMat {
        CMat::identity(self.dim())
    }

    /// One Haar-distributed group element.
    pub fn haar<R: Rng + ?Sized>(self, rng: &mut R) -> CMat {
        match self {
            SpecialUnitary::Two => haar_su2(rng),
            SpecialUnitary::Three => haar_su3(rng),
        }
    }

    /// Irreducible character `chi_lambda(u)` for the highest weight with
    /// fundamental-weight coordinates `coords`.
    #[must_use]
    pub fn character(self, coords: &[i64], u: &CMat) -> Complex64 {
        match self {
            SpecialUnitary::Two => {
                debug_assert_eq!(coords.len(), 1);
                let chi1 = u.trace();
                su2_char_ladder(coords[0], chi1)
            }
            SpecialUnitary::Three => {
                debug_assert_eq!(coords.len(), 2);
                let (a, b) = (coords[0], coords[1]);
                let h = homogeneous_syms(u, (a + b + 2) as usize);
                schur_from_h(a, b, &h)
            }
        }
    }

    /// A representative of the conjugacy class `spec`: the central scalar
    /// times the diagonal torus element with the class's frame coordinates.
    pub fn class_element(self, rs: &RootSystem, spec: &HolonomySpec) -> Result<CMat> {
        let z = self.center_scalar(rs, spec.center)?;
        if spec.coords.len() != rs.rank() {
            return Err(Error::ArityMismatch { expected: rs.rank(), got: spec.coords.len() });
        }
        let y = rs.orth_transpose_apply(&spec.coords);
        let diag: Vec<Complex64> = match self {
            SpecialUnitary::Two => {
                DEF_WEIGHTS_2.iter().map(|w| cis(w[0] as f64 * y[0]) * z).collect()
            }
            SpecialUnitary::Three => DEF_WEIGHTS_3
                .iter()
                .map(|w| cis(w[0] as f64 * y[0] + w[1] as f64 * y[1]) * z)
                .collect(),
        };
        Ok(CMat::from_diag(&diag))
    }

    /// The scalar matrix realizing center element `index`.
    pub fn center_matrix(self, rs: &RootSystem, index: usize) -> Result<CMat> {
        let z = self.center_scalar(rs, index)?;
        Ok(self.identity().scale(z))
    }

    /// Scalar by which center element `index` acts in the defining
    /// representation: `e^{2 pi i <omega_1, c>}`.
    fn center_scalar(self, rs: &RootSystem, index: usize) -> Result<Complex64> {
        let mut coords = vec![0i64; rs.rank()];
        coords[0] = 1;
        rs.central_character(&Weight::new(coords), index)
    }
}

/// `chi_m(u)` from `chi_1 = tr u` by the rank-one ladder
/// `chi_m = chi_1 chi_{m-1} - chi_{m-2}`.
#[must_use]
#[inline]
pub(crate) fn su2_char_ladder(m: i64, chi1: Complex64) -> Complex64 {
    debug_assert!(m >= 0);
    let mut prev = Complex64::new(0.0, 0.0); // chi_{-1}
    let mut cur = Complex64::new(1.0, 0.0); // chi_0
    for _ in 0..m {
        let next = chi1 * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Complete homogeneous symmetric functions `h_0 .. h_max` of the eigenvalues
/// of `u`, from the power sums `p_i = tr(u^i)` by Newton's identity
/// `k h_k = sum_{i<=k} p_i h_{k-i}`.
#[must_use]
pub(crate) fn homogeneous_syms(u: &CMat, max: usize) -> Vec<Complex64> {
    let mut p = Vec::with_capacity(max + 1);
    p.push(Complex64::new(u.dim() as f64, 0.0)); // p_0 = n, unused
    let mut pow = *u;
    for i in 1..=max {
        p.push(pow.trace());
        if i < max {
            pow = pow.mul(u);
        }
    }
    let mut h = Vec::with_capacity(max + 1);
    h.push(Complex64::new(1.0, 0.0));
    for k in 1..=max {
        let mut s = Complex64::new(0.0, 0.0);
        for i in 1..=k {
            s += p[i] * h[k - i];
        }
        h.push(s / k as f64);
    }
    h
}

/// Schur character of the SU(3) irreducible `(a, b)` — partition
/// `(a + b, b, 0)` — as the Jacobi-Trudi determinant `det(h_{l_i - i + j})`.
#[must_use]
pub(crate) fn schur_from_h(a: i64, b: i64, h: &[Complex64]) -> Complex64 {
    debug_assert!(a >= 0 && b >= 0);
    let lam = [a + b, b, 0];
    let hh = |k: i64| -> Complex64 {
        if k < 0 {
            Complex64::new(0.0, 0.0)
        } else {
            h[k as usize]
        }
    };
    let mut m = CMat::zero(3);
    for i in 0..3 {
        for j in 0..3 {
            m.set(i, j, hh(lam[i] - i as i64 + j as i64));
        }
    }
    m.det()
}

fn haar_su2<R: Rng + ?Sized>(rng: &mut R) -> CMat {
    loop {
        let (x0, x1) = normal_pair(rng);
        let (x2, x3) = normal_pair(rng);
        let n2 = x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3;
        if n2 < 1e-300 {
            continue;
        }
        let s = 1.0 / crate::fx::sqrt(n2);
        let a = Complex64::new(x0 * s, x1 * s);
        let b = Complex64::new(x2 * s, x3 * s);
        let mut u = CMat::zero(2);
        u.set(0, 0, a);
        u.set(0, 1, b);
        u.set(1, 0, -b.conj());
        u.set(1, 1, a.conj());
        return u;
    }
}

fn haar_su3<R: Rng + ?Sized>(rng: &mut R) -> CMat {
    loop {
        // Ginibre ensemble: nine independent complex normals, by columns.
        let mut cols = [[Complex64::new(0.0, 0.0); 3]; 3];
        for col in &mut cols {
            for entry in col.iter_mut() {
                let (re, im) = normal_pair(rng);
                *entry = Complex64::new(re, im);
            }
        }
        // Modified Gram-Schmidt.  The positive-diagonal QR convention holds
        // automatically because each column is divided by its own norm.
        let mut ok = true;
        for j in 0..3 {
            for i in 0..j {
                let mut dot = Complex64::new(0.0, 0.0);
                for k in 0..3 {
                    dot += cols[i][k].conj() * cols[j][k];
                }
                for k in 0..3 {
                    let c = cols[i][k];
                    cols[j][k] -= dot * c;
                }
            }
            let mut n2 = 0.0;
            for k in 0..3 {
                n2 += cols[j][k].norm_sqr();
            }
            if n2 < 1e-280 {
                ok = false;
                break;
            }
            let s = 1.0 / crate::fx::sqrt(n2);
            for k in 0..3 {
                cols[j][k] *= s;
            }
        }
        if !ok {
            continue;
        }
        let mut q = CMat::zero(3);
        for (j, col) in cols.iter().enumerate() {
            for (k, &v) in col.iter().enumerate() {
                q.set(k, j, v);
            }
        }
        // Push det to 1 by scaling the first column; |det| = 1 already.
        let d = q.det();
        let fix = d.conj();
        for k in 0..3 {
            let v = q.at(k, 0);
            q.set(k, 0, v * fix);
        }
        return q;
    }
}
