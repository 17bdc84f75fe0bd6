//! Riemannian volumes in the Killing normalization and the fully assembled
//! moduli invariants (prefactor × regularized series).

use alloc::vec::Vec;

use crate::algebra::roots::RootSystem;
use crate::error::{Error, Result};
use crate::fx;
use crate::rat::{rat_to_f64, Rat, RatMatrix};
use crate::series::engine::{EvalOptions, SeriesResult};
use crate::series::poly::InvariantPolynomial;
use crate::series::regularize::regularized_limit;
use crate::series::topology::SurfaceTopology;

/// Relative flatness tolerance for the heat-kernel volume plateau.
pub const VOLUME_FLATNESS_TOL: f64 = 1e-3;

/// Exact squared volume data of the maximal torus: the torus is
/// `t / (2π · coroot lattice)`, so `Vol(T) = (2π)^l √det B` with `B` the
/// Gram matrix of the simple coroots under the Killing form.
fn coroot_gram(rs: &RootSystem) -> RatMatrix {
    let l = rs.rank();
    // Simple coroot `α_i∨ = α_i / d_i` in fundamental-weight coordinates.
    let halves = rs.simple_root_halves();
    let cartan = rs.cartan();
    let mut coroots = RatMatrix::zeros(l, l);
    for i in 0..l {
        for r in 0..l {
            // fw coords of α_i are the i-th column of the Cartan matrix.
            coroots[(r, i)] = cartan[(r, i)] / halves[i];
        }
    }
    // B_ij = <α_i∨, α_j∨> under 2h∨ × (fw Gram): the Killing Gram is
    // F/(2h∨), and volumes here use the metric in which the series casimir
    // is normalized, i.e. the Killing metric scaled back by 2h∨ on the
    // coroot directions — concretely B = (coroots)^T · F · coroots · 2h∨
    // with F the fundamental-weight Gram matrix.
    let f = rs.fw_gram();
    let mut b = RatMatrix::zeros(l, l);
    let two_hv = Rat::from_integer(2 * i128::from(rs.dual_coxeter()));
    for i in 0..l {
        for j in 0..l {
            let mut acc = Rat::from_integer(0);
            for a in 0..l {
                for c in 0..l {
                    acc += coroots[(a, i)] * f[(a, c)] * coroots[(c, j)];
                }
            }
            b[(i, j)] = acc * two_hv;
        }
    }
    b
}

/// Volume of the maximal torus in the Killing metric.
#[must_use]
pub fn torus_volume(rs: &RootSystem) -> f64 {
    let b = coroot_gram(rs);
    let det = rat_to_f64(b.det());
    fx::powi(2.0 * core::f64::consts::PI, rs.rank() as i32) * fx::sqrt(det)
}

/// Heat-kernel group volume at temperature `t`:
/// `V(t) = (4πt)^{dim G/2} e^{-t‖ρ‖²} Σ_λ d_λ² e^{-t p_c(λ)}`.
///
/// The plateau value (exponentially flat as `t → 0`) is `Vol(G)` in the
/// Killing metric.
pub fn group_volume_heat(rs: &RootSystem, t: f64, cutoff: Rat, opts: &EvalOptions) -> Result<f64> {
    assert!(t > 0.0, "heat-kernel volume needs positive temperature");
    let weights = rs.enumerate_dominant_weights(cutoff, opts.weight_budget)?;
    let terms: Vec<f64> = weights
        .iter()
        .map(|(w, pc)| {
            let d = rs.dimension_f64_unchecked(w);
            d * d * fx::exp(-t * rat_to_f64(*pc))
        })
        .collect();
    let sum = crate::sum::pairwise(&terms);
    let dim = rs.dim_group() as f64;
    let rho2 = rat_to_f64(rs.rho_norm2());
    Ok(fx::powf(4.0 * core::f64::consts::PI * t, 0.5 * dim) * fx::exp(-t * rho2) * sum)
}

/// Group and torus volumes `(Vol G, Vol T)`.
///
/// `Vol G` is read off the heat-kernel plateau along `t_schedule`; the last
/// two schedule points must agree to relative [`VOLUME_FLATNESS_TOL`], else
/// the plateau has not been reached and the call fails with
/// [`Error::ExtrapolationUnstable`].
pub fn group_and_torus_volumes(
    rs: &RootSystem,
    t_schedule: &[f64],
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<(f64, f64)> {
    if t_schedule.len() < 2 {
        return Err(Error::ArityMismatch { expected: 2, got: t_schedule.len() });
    }
    let mut sched = t_schedule.to_vec();
    sched.sort_by(|a, b| b.partial_cmp(a).expect("schedule values must be finite"));
    let mut values = Vec::with_capacity(sched.len());
    for &t in &sched {
        let cut = crate::series::regularize::effective_cutoff(cutoff, t);
        values.push(group_volume_heat(rs, t, cut, opts)?);
    }
    let a = values[values.len() - 2];
    let b = values[values.len() - 1];
    let rel = fx::abs(a - b) / fx::abs(b).max(f64::MIN_POSITIVE);
    if rel > VOLUME_FLATNESS_TOL {
        return Err(Error::ExtrapolationUnstable { residual: rel, threshold: VOLUME_FLATNESS_TOL });
    }
    Ok((b, torus_volume(rs)))
}

/// A fully assembled invariant: geometric prefactor times regularized
/// series.
#[derive(Clone, Debug, PartialEq)]
pub struct AssembledInvariant {
    /// The regularized series factor.
    pub series: SeriesResult,
    /// The geometric prefactor (volumes, center order, `2π` powers, and the
    /// Weyl-denominator factors of regular boundary classes).
    pub prefactor: f64,
    /// Group volume used in the prefactor.
    pub vol_g: f64,
    /// Torus volume used in the prefactor.
    pub vol_t: f64,
    /// `prefactor × series / pi1_order`.
    pub value: f64,
}

/// Complex dimension of the moduli space for the orientable cases and real
/// dimension for the non-orientable ones, as used in the `2π` powers of the
/// prefactor.
fn two_pi_exponent(rs: &RootSystem, topo: &SurfaceTopology) -> i64 {
    let dim_g = rs.dim_group() as i64;
    let npos = rs.positive_roots_fw().len() as i64;
    match topo {
        SurfaceTopology::Closed { genus, .. } => {
            // 2 N_u with N_u = (g−1) dim G.
            2 * (i64::from(*genus) - 1) * dim_g
        }
        SurfaceTopology::Bounded { genus, boundaries } => {
            let s = boundaries.len() as i64;
            2 * ((i64::from(*genus) - 1) * dim_g + s * npos)
        }
        SurfaceTopology::NonOrientableOdd { k, .. } => (2 * i64::from(*k) - 1) * dim_g,
        SurfaceTopology::NonOrientableEven { k, .. } => 2 * i64::from(*k) * dim_g,
    }
}

/// Power of `Vol G` in the prefactor.
fn vol_g_exponent(topo: &SurfaceTopology) -> i64 {
    match topo {
        SurfaceTopology::Closed { genus, .. } => 2 * i64::from(*genus) - 2,
        SurfaceTopology::Bounded { genus, boundaries } => {
            2 * i64::from(*genus) - 2 + boundaries.len() as i64
        }
        SurfaceTopology::NonOrientableOdd { k, .. } => 2 * i64::from(*k) - 1,
        SurfaceTopology::NonOrientableEven { k, .. } => 2 * i64::from(*k),
    }
}

/// Assemble the full invariant for `topo`: regularized series times the
/// volume prefactor, divided by `pi1_order` (order of the relevant
/// fundamental-group quotient; `1` for the simply connected form).
pub fn assembled_invariant(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    t_schedule: &[f64],
    cutoff: Rat,
    pi1_order: u64,
    opts: &EvalOptions,
) -> Result<AssembledInvariant> {
    assert!(pi1_order >= 1, "fundamental-group order must be positive");
    let series = regularized_limit(rs, topo, p, t_schedule, cutoff, opts)?;
    let (vol_g, vol_t) = group_and_torus_volumes(rs, t_schedule, cutoff, opts)?;
    let z = rs.center_order() as f64;
    let two_pi = 2.0 * core::f64::consts::PI;
    let mut prefactor = z * fx::powi(vol_g, vol_g_exponent(topo) as i32)
        / fx::powi(two_pi, two_pi_exponent(rs, topo) as i32);
    if let SurfaceTopology::Bounded { boundaries, .. } = topo {
        let s = boundaries.len() as i32;
        prefactor /= fx::powi(vol_t, s);
        for b in boundaries {
            if !b.is_central() {
                prefactor *= rs.weyl_determinant_abs(b);
            }
        }
    }
    let value = prefactor * series.value / pi1_order as f64;
    Ok(AssembledInvariant { series, prefactor, vol_g, vol_t, value })
}

/// Symplectic volume: the assembled invariant of the constant class `1`.
pub fn moduli_volume(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    t_schedule: &[f64],
    cutoff: Rat,
    pi1_order: u64,
    opts: &EvalOptions,
) -> Result<AssembledInvariant> {
    let one = InvariantPolynomial::one(rs.rank());
    assembled_invariant(rs, topo, &one, t_schedule, cutoff, pi1_order, opts)
}

/// Evaluate the heat-kernel volume identity deviation at one `t`: the
/// relative difference between `V(t)` and the exact torus-side volume.
/// Exposed for diagnostics and tests.
pub fn volume_flatness_deviation(
    rs: &RootSystem,
    t_pair: (f64, f64),
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<f64> {
    let a = group_volume_heat(rs, t_pair.0, cutoff, opts)?;
    let b = group_volume_heat(rs, t_pair.1, cutoff, opts)?;
    Ok(fx::abs(a - b) / fx::abs(b).max(f64::MIN_POSITIVE))
}
