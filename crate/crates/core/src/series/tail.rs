//! Certified truncation-tail bounds for the character series.
//!
//! The bounds are deliberately crude (products of one-dimensional sums with
//! explicit frame constants): they over-estimate the true remainder by a
//! comfortable margin but are rigorous, cheap, and vanish at the correct
//! rate as the cutoff grows, which is all the reporting contract needs.

use crate::algebra::roots::RootSystem;
use crate::fx;
use crate::rat::rat_to_f64;
use crate::series::poly::InvariantPolynomial;
use crate::series::topology::{convergence_certificate, SurfaceTopology, ZeroTCertificate};

/// Frobenius norm of a row-major square matrix.
fn frob(m: &[f64]) -> f64 {
    let mut s = 0.0;
    for &v in m {
        s += v * v;
    }
    fx::sqrt(s)
}

/// `ζ(q)` for integer `q ≥ 2`, partial sum plus integral tail.
fn zeta_num(q: i64) -> f64 {
    let mut s = 0.0;
    for n in 1..=4096i64 {
        s += fx::powi(n as f64, -(q as i32));
    }
    s + fx::powi(4096.0, 1 - q as i32) / (q as f64 - 1.0)
}

/// `Σ_{n≥1} e^{-s n²}`, bounded by the better of the integral and the
/// geometric comparison.
fn theta_tail(s: f64) -> f64 {
    let integral = 0.5 * fx::sqrt(core::f64::consts::PI / s);
    let geometric = fx::exp(-s) / (1.0 - fx::exp(-s));
    integral.min(geometric)
}

/// Constants shared by the bounds, all derived from exact data.
struct Frame {
    /// `‖M‖_F` with `M` the orthonormal frame matrix: `‖μ‖_K ≤ m_f ‖μ‖₂`.
    m_f: f64,
    /// Lower bound `γ` on the smallest eigenvalue of the Killing Gram
    /// matrix: `‖μ‖²_K ≥ γ ‖μ‖₂²`, from `σ_min(M) ≥ 1/‖M⁻¹‖_F`.
    gamma: f64,
    /// `‖ρ‖²` in the Killing normalization.
    rho2: f64,
}

fn frame(rs: &RootSystem) -> Frame {
    let m_f = frob(rs.orth_matrix());
    let minv_f = frob(rs.orth_inv_matrix());
    Frame { m_f, gamma: 1.0 / (minv_f * minv_f), rho2: rat_to_f64(rs.rho_norm2()) }
}

/// Product over regular boundaries of `|W| / |j(c)|`, the elementary bound
/// on `|χ_λ(c)|` that is uniform in `λ`.
fn regular_boundary_bound(rs: &RootSystem, topo: &SurfaceTopology) -> f64 {
    let mut k = 1.0;
    let order = rs.weyl().order() as f64;
    for b in topo.boundaries() {
        if !b.is_central() {
            k *= order / rs.weyl_determinant_abs(b);
        }
    }
    k
}

/// `Π_{α>0} max(1, ‖α∨‖₁ / √γ)`: with it,
/// `d_λ ≤ K_d (1 + ‖μ‖_K)^{|Δ⁺|}`.
fn dimension_growth_bound(rs: &RootSystem, gamma: f64) -> f64 {
    let mut k = 1.0;
    for alpha in rs.positive_coroots() {
        let l1: i64 = alpha.iter().map(|&c| c.abs()).sum();
        let ratio = l1 as f64 / fx::sqrt(gamma);
        k *= ratio.max(1.0);
    }
    k
}

/// Upper bound on the absolute sum of series terms with Casimir above
/// `cutoff`, for `t > 0`.  Finite for every topology.
#[must_use]
pub fn raw_tail_positive_t(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    t: f64,
    cutoff: f64,
) -> f64 {
    debug_assert!(t > 0.0);
    let fr = frame(rs);
    let l = rs.rank() as f64;
    let m = topo.dimension_exponent() - topo.central_boundary_count() as i64;
    let npos = rs.positive_roots_fw().len() as i64;
    let growth = if m < 0 { -m } else { 0 };
    let q_total = i64::from(p.degree()) + growth * npos;

    let k_const = p.coeff_norm().max(f64::MIN_POSITIVE)
        * regular_boundary_bound(rs, topo)
        * fx::powi(dimension_growth_bound(rs, fr.gamma), growth as i32);

    // sup_r (1+r)^Q e^{-(t/2) r²}.
    let c_poly = if q_total == 0 {
        1.0
    } else {
        let qf = q_total as f64;
        let r = (-t + fx::sqrt(t * t + 4.0 * t * qf)) / (2.0 * t);
        fx::powi(1.0 + r, q_total as i32) * fx::exp(-0.5 * t * r * r)
    };

    let b_shift = cutoff + fr.rho2;
    k_const
        * c_poly
        * fx::exp(t * fr.rho2)
        * fx::exp(-0.25 * t * b_shift)
        * fx::powi(theta_tail(0.25 * t * fr.gamma), l as i32)
}

/// Upper bound on the truncation error at `t = 0`, using the convergence
/// certificate.  Returns infinity when no certificate applies.
#[must_use]
pub fn raw_tail_zero_t(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    cutoff: f64,
) -> f64 {
    let Ok(cert) = convergence_certificate(rs, topo, p.degree()) else {
        return f64::INFINITY;
    };
    let fr = frame(rs);
    let l = rs.rank();
    let m = topo.dimension_exponent() - topo.central_boundary_count() as i64;
    let d = i64::from(p.degree());
    let q = m - d;
    let k_chi = regular_boundary_bound(rs, topo);
    let p_norm = p.coeff_norm().max(f64::MIN_POSITIVE);
    // |p(x)| ≤ P (1+‖μ‖_K)^D ≤ P (1 + m_f √l)^D (Π μ_j)^D for μ ∈ Z_{≥1}^l.
    let c_frame = fx::powi(1.0 + fr.m_f * fx::sqrt(l as f64), d as i32);
    // Entering the tail region forces max_j μ_j > M₀.
    let m0 = fx::sqrt((cutoff + fr.rho2) / l as f64) / fr.m_f;
    if m0 <= 1.0 {
        return f64::INFINITY;
    }
    match cert {
        ZeroTCertificate::Absolute => {
            // Terms are ≤ K' Π μ_j^{-q}, q ≥ 2.
            let zeta = zeta_num(q);
            p_norm
                * k_chi
                * c_frame
                * l as f64
                * (fx::powi(m0, (1 - q) as i32) / (q as f64 - 1.0))
                * fx::powi(zeta, (l - 1) as i32)
        }
        ZeroTCertificate::Oscillatory => {
            // Rank one: Abel summation against the bounded partial sums of
            // the oscillating factor.  Each regular boundary contributes a
            // frequency θ; an alternating central multiplier shifts the
            // combined frequencies by π.  The combined partial sums are
            // bounded by Σ_k 1/|sin(φ_k/2)| over the product-to-sum
            // frequencies φ_k = Σ ± θ_j (+ π).
            let nu = rs.orth_matrix()[0];
            let mut thetas: alloc::vec::Vec<f64> = alloc::vec::Vec::new();
            for b in topo.boundaries() {
                if !b.is_central() {
                    thetas.push(nu * b.coords[0]);
                }
            }
            let alternating = alternating_central_multiplier(rs, topo);
            let shift = if alternating { core::f64::consts::PI } else { 0.0 };
            let mut s_star = 0.0;
            let combos = 1usize << (thetas.len().saturating_sub(1));
            for mask in 0..combos {
                let mut phi = thetas[0] + shift;
                for (j, &th) in thetas.iter().enumerate().skip(1) {
                    if mask & (1 << (j - 1)) != 0 {
                        phi -= th;
                    } else {
                        phi += th;
                    }
                }
                let denom = fx::abs(fx::sin(0.5 * phi));
                if denom < 1e-9 {
                    return f64::INFINITY;
                }
                s_star += 1.0 / denom;
            }
            2.0 * s_star * p_norm * k_chi * c_frame * fx::powi(m0, -q as i32)
        }
    }
}

/// Whether the central part of the multiplier alternates in sign along the
/// rank-one weight ladder (order-two center element, or a Frobenius-Schur
/// factor).
fn alternating_central_multiplier(rs: &RootSystem, topo: &SurfaceTopology) -> bool {
    if rs.rank() != 1 {
        return false;
    }
    if topo.non_orientable() {
        return true;
    }
    match topo.center_index() {
        Some(u) if u != 0 => true,
        _ => {
            // Central boundary classes also contribute Λ factors.
            topo.boundaries().iter().any(|b| b.is_central() && b.center != 0)
        }
    }
}

/// Dispatch on `t`.
#[must_use]
pub fn raw_tail_bound(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    t: f64,
    cutoff: f64,
) -> f64 {
    if t > 0.0 {
        raw_tail_positive_t(rs, topo, p, t, cutoff)
    } else {
        raw_tail_zero_t(rs, topo, p, cutoff)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::{build_root_system, Family};
    use alloc::vec;

    #[test]
    fn zero_t_tail_dominates_true_remainder_for_basel() {
        // Closed genus 2 at the identity for A1: terms 1/n², remainder
        // beyond casimir K is about 1/n(K).
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 2, center: 0 };
        let p = InvariantPolynomial::one(1);
        for &cutoff in &[50.0, 500.0, 5000.0] {
            let bound = raw_tail_zero_t(&rs, &topo, &p, cutoff);
            // True remainder: Σ_{ν²(n²−1) > cutoff} 1/n², summed far past
            // convergence.
            let mut truth = 0.0;
            for n in (1..2_000_000i64).rev() {
                if ((n * n - 1) as f64) / 8.0 > cutoff {
                    truth += 1.0 / ((n * n) as f64);
                }
            }
            assert!(bound.is_finite());
            assert!(bound > truth, "bound {bound} vs truth {truth} at {cutoff}");
        }
    }

    #[test]
    fn positive_t_tail_shrinks_with_cutoff() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let topo = SurfaceTopology::Closed { genus: 1, center: 0 };
        let p = InvariantPolynomial::one(2);
        let b1 = raw_tail_positive_t(&rs, &topo, &p, 1.0, 30.0);
        let b2 = raw_tail_positive_t(&rs, &topo, &p, 1.0, 120.0);
        assert!(b1.is_finite() && b2.is_finite());
        assert!(b2 < b1 * 1e-6, "{b2} vs {b1}");
    }

    #[test]
    fn positive_t_tail_dominates_shell_sum_for_su2_torus() {
        // Genus-1 closed partition function: terms e^{-t ν² (n²-1)}.
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 1, center: 0 };
        let p = InvariantPolynomial::one(1);
        let t = 0.5;
        let cutoff = 80.0;
        let bound = raw_tail_positive_t(&rs, &topo, &p, t, cutoff);
        let mut truth = 0.0;
        for n in 1..10_000i64 {
            let pc = ((n * n - 1) as f64) / 8.0;
            if pc > cutoff {
                truth += fx::exp(-t * pc);
            }
        }
        assert!(bound > truth, "bound {bound} vs truth {truth}");
    }

    #[test]
    fn oscillatory_tail_finite_for_sawtooth() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let nu = rs.orth_matrix()[0];
        // θ = π/2 at the character argument: coords = (π/2)/ν.
        let topo = SurfaceTopology::Bounded {
            genus: 1,
            boundaries: vec![crate::algebra::chars::HolonomySpec::regular(vec![
                core::f64::consts::FRAC_PI_2 / nu,
            ])],
        };
        let p = InvariantPolynomial::one(1);
        let b = raw_tail_zero_t(&rs, &topo, &p, 1000.0);
        assert!(b.is_finite());
    }
}
