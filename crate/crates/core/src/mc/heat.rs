//! Truncated heat kernels on the group manifold.
//!
//! `H(t, x, y) = sum_lambda d_lambda chi_lambda(x y^dagger) e^{-t p(lambda)}`
//! truncated at a Casimir cutoff.  The truncation rule is fixed:
//! `e^{-t * cutoff} < 1e-12`, otherwise the kernel refuses to evaluate —
//! Monte Carlo noise is the error budget, and the deterministic truncation
//! must stay far below it.
//!
//! Besides the plain kernel there is a `d^2`-weighted variant
//! `sum d^2 chi e^{-t p}` used by the odd non-orientable estimator, where the
//! extra dimension factor compensates the cross-cap identity
//! `int chi(eps^2) d eps = f_lambda` landing one power of `d` short of the
//! series normalization.

use alloc::vec::Vec;
use num_complex::Complex64;

use crate::algebra::roots::RootSystem;
use crate::error::{Error, Result};
use crate::fx;
use crate::mc::group::{homogeneous_syms, schur_from_h, SpecialUnitary};
use crate::mc::matrix::CMat;
use crate::rat::{rat_to_f64, Rat};
use crate::series::DEFAULT_WEIGHT_BUDGET;

/// Truncation error target for Monte Carlo kernels.
pub const MC_TRUNCATION_EPS: f64 = 1e-12;

/// Smallest Casimir cutoff satisfying `e^{-t * cutoff} < 1e-12`.
#[must_use]
pub fn required_cutoff(t: f64) -> u64 {
    debug_assert!(t > 0.0);
    let c = -fx::ln(MC_TRUNCATION_EPS) / t;
    fx::floor(c) as u64 + 1
}

#[derive(Debug)]
struct KernelTerm {
    coords: Vec<i64>,
    dim: f64,
    boltz: f64,
}

/// A heat kernel truncated at a fixed Casimir cutoff.
///
/// Construction enumerates the dominant weights once; evaluation per group
/// element is then a character ladder (SU(2)) or one symmetric-function table
/// plus small determinants (SU(3)).
#[derive(Debug)]
pub struct HeatKernel {
    group: SpecialUnitary,
    terms: Vec<KernelTerm>,
    /// SU(3): largest index needed in the `h_k` table.
    max_h: usize,
}

impl HeatKernel {
    /// Kernel at diffusion time `t` with the given Casimir `cutoff`.
    pub fn new(rs: &RootSystem, t: f64, cutoff: u64) -> Result<Self> {
        let needed = required_cutoff(t);
        if cutoff < needed {
            return Err(Error::TruncationInsufficient { cutoff, needed });
        }
        let group = SpecialUnitary::from_root_system(rs)?;
        let weights = rs.enumerate_dominant_weights(
            Rat::from_integer(i128::from(cutoff)),
            DEFAULT_WEIGHT_BUDGET,
        )?;
        let mut terms = Vec::with_capacity(weights.len());
        let mut max_h = 0usize;
        for (w, p) in weights {
            let dim = rs.dimension_f64(&w)?;
            let boltz = fx::exp(-t * rat_to_f64(p));
            if group == SpecialUnitary::Three {
                let span = (w.coords[0] + w.coords[1]) as usize + 2;
                if span > max_h {
                    max_h = span;
                }
            }
            terms.push(KernelTerm { coords: w.coords, dim, boltz });
        }
        Ok(HeatKernel { group, terms, max_h })
    }

    /// Kernel with the smallest admissible cutoff for `t`.
    pub fn auto(rs: &RootSystem, t: f64) -> Result<Self> {
        Self::new(rs, t, required_cutoff(t))
    }

    /// Number of retained weights.
    #[must_use]
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// `H(t, u, e) = sum d chi(u) e^{-t p}`.
    #[must_use]
    pub fn eval(&self, u: &CMat) -> f64 {
        self.eval_dim_power(u, false)
    }

    /// `sum d^2 chi(u) e^{-t p}`, the cross-cap-normalizing variant.
    #[must_use]
    pub fn eval_weighted(&self, u: &CMat) -> f64 {
        self.eval_dim_power(u, true)
    }

    fn eval_dim_power(&self, u: &CMat, weighted: bool) -> f64 {
        match self.group {
            SpecialUnitary::Two => {
                // Terms are m = 0, 1, 2, ... in Casimir order; run the
                // character ladder once, aligned with the term list.
                let chi1 = u.trace().re;
                let mut prev = 0.0;
                let mut cur = 1.0;
                let mut acc = 0.0;
                for (m, term) in self.terms.iter().enumerate() {
                    debug_assert_eq!(term.coords[0], m as i64);
                    let f = if weighted { term.dim * term.dim } else { term.dim };
                    acc += f * cur * term.boltz;
                    let next = chi1 * cur - prev;
                    prev = cur;
                    cur = next;
                }
                acc
            }
            SpecialUnitary::Three => {
                let h = homogeneous_syms(u, self.max_h);
                let mut acc = Complex64::new(0.0, 0.0);
                for term in &self.terms {
                    let chi = schur_from_h(term.coords[0], term.coords[1], &h);
                    let f = if weighted { term.dim * term.dim } else { term.dim };
                    acc += chi * (f * term.boltz);
                }
                // Conjugate pairs (a,b) <-> (b,a) share a Casimir, so both
                // sit inside any cutoff and the sum is real.
                debug_assert!(fx::abs(acc.im) <= 1e-8 * (1.0 + fx::abs(acc.re)));
                acc.re
            }
        }
    }
}

/// `H(t, x, y)` for group elements `x`, `y`: the truncated kernel evaluated
/// at `x y^dagger`.
pub fn heat_kernel_eval(
    rs: &RootSystem,
    t: f64,
    x: &CMat,
    y: &CMat,
    cutoff: u64,
) -> Result<f64> {
    let kernel = HeatKernel::new(rs, t, cutoff)?;
    Ok(kernel.eval(&x.mul(&y.adjoint())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::{build_root_system, Family};
    use crate::mc::rng::stream_rng;

    #[test]
    fn cutoff_rule_matches_the_truncation_target() {
        for &t in &[0.5, 1.0, 8.0] {
            let c = required_cutoff(t);
            assert!(fx::exp(-t * c as f64) < MC_TRUNCATION_EPS);
            assert!(fx::exp(-t * (c - 1) as f64) >= MC_TRUNCATION_EPS);
        }
    }

    #[test]
    fn undersized_cutoff_is_refused() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let err = HeatKernel::new(&rs, 0.1, 1).unwrap_err();
        assert!(matches!(err, Error::TruncationInsufficient { cutoff: 1, needed } if needed > 200));
    }

    #[test]
    fn kernel_is_a_class_function() {
        for (fam, rank) in [(Family::A, 1), (Family::A, 2)] {
            let rs = build_root_system(fam, rank).unwrap();
            let group = SpecialUnitary::from_root_system(&rs).unwrap();
            let kernel = HeatKernel::auto(&rs, 1.0).unwrap();
            let mut rng = stream_rng(19, 0);
            for _ in 0..20 {
                let u = group.haar(&mut rng);
                let v = group.haar(&mut rng);
                let conj = v.mul(&u).mul(&v.adjoint());
                let a = kernel.eval(&u);
                let b = kernel.eval(&conj);
                assert!(fx::abs(a - b) < 1e-9, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn su2_kernel_at_center_matches_alternating_series() {
        // H(8, -I) = sum_n n^2 (-1)^{n-1} e^{-(n^2-1)}; compare the matrix
        // path against the direct alternating sum.
        let rs = build_root_system(Family::A, 1).unwrap();
        let group = SpecialUnitary::from_root_system(&rs).unwrap();
        let kernel = HeatKernel::auto(&rs, 8.0).unwrap();
        let minus = group.center_matrix(&rs, 1).unwrap();
        let got = kernel.eval(&minus);
        let mut want = 0.0;
        for n in 1..40i64 {
            let sign = if n % 2 == 1 { 1.0 } else { -1.0 };
            want += sign * (n * n) as f64 * fx::exp(-((n * n - 1) as f64));
        }
        assert!(fx::abs(got - want) < 1e-10, "{got} vs {want}");
    }

    #[test]
    fn two_point_kernel_is_symmetric() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let group = SpecialUnitary::from_root_system(&rs).unwrap();
        let mut rng = stream_rng(23, 1);
        let x = group.haar(&mut rng);
        let y = group.haar(&mut rng);
        let c = required_cutoff(1.25);
        let a = heat_kernel_eval(&rs, 1.25, &x, &y, c).unwrap();
        let b = heat_kernel_eval(&rs, 1.25, &y, &x, c).unwrap();
        assert!(fx::abs(a - b) < 1e-9);
    }
}
