//! Truncated evaluation of the character series
//! `Σ_λ mult(λ) · p(λ+ρ) · e^{-t p_c(λ)} / d_λ^E`
//! over the dominant weights of casimir at most `cutoff`.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::algebra::chars::SINGULAR_TOL;
use crate::algebra::roots::RootSystem;
use crate::algebra::weights::Weight;
use crate::error::{Error, Result};
use crate::fx;
use crate::rat::{rat_to_f64, Rat};
use crate::series::poly::InvariantPolynomial;
use crate::series::tail;
use crate::series::topology::{convergence_certificate, SurfaceTopology};

/// Default ceiling on the number of enumerated dominant weights.
pub const DEFAULT_WEIGHT_BUDGET: u64 = 20_000_000;

/// Safety factor applied to the raw certified tail before reporting, so that
/// differences between successive cutoffs are always dominated by the
/// reported bound even for mixed-sign series.
const TAIL_SAFETY: f64 = 2.0;

/// Evaluation knobs threaded through the series entry points.
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    /// Ceiling on the number of enumerated dominant weights.
    pub weight_budget: u64,
    /// Downgrade a failed Weyl-invariance check to a log warning.
    pub invariance_warn_only: bool,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { weight_budget: DEFAULT_WEIGHT_BUDGET, invariance_warn_only: false }
    }
}

/// Extrapolated limit attached to a series evaluation.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Extrapolated {
    /// The extrapolated value (equal to the top-level `value`).
    pub value: f64,
    /// Extrapolation quality indicator: fit RMS residual, or the last
    /// Richardson correction, depending on the path taken.
    pub residual: f64,
}

/// Result of a series evaluation or regularized limit.
#[derive(Clone, Debug, PartialEq)]
pub struct SeriesResult {
    /// The series value (extrapolated when `extrapolated` is set).
    pub value: f64,
    /// Certified bound on the truncation error of the reported value,
    /// including a safety factor; successive-cutoff differences satisfy
    /// `|value(K) − value(4K)| ≤ tail_bound(K)`.
    pub tail_bound: f64,
    /// The `(t, series value)` pairs actually evaluated.  For direct `t = 0`
    /// evaluations this is the single pair `(0, plain sum)`; for limits in
    /// the class parameter the first component is the class-distance scale.
    pub schedule_values: Vec<(f64, f64)>,
    /// Present when `value` was produced by extrapolation.
    pub extrapolated: Option<Extrapolated>,
    /// Number of dominant weights enumerated for the (largest) evaluation.
    pub weight_count: usize,
    /// Whether the evaluation is backed by a convergence argument (always
    /// true for `t > 0`; at `t = 0` it reflects the certificate).
    pub converged: bool,
}

/// A boundary class with its per-class data hoisted out of the weight loop.
struct PreparedBoundary {
    central: bool,
    center: usize,
    /// Pairing vector `y = M^T x`: `μ(C) = Σ μ_j y_j`.
    y: Vec<f64>,
    /// Weyl denominator `i^{|Δ⁺|} Π 2 sin(α(C)/2)` (regular classes only).
    denominator: Complex64,
}

fn prepare_boundaries(rs: &RootSystem, topo: &SurfaceTopology) -> Result<Vec<PreparedBoundary>> {
    let npos = rs.positive_roots_fw().len();
    let mut out = Vec::new();
    for b in topo.boundaries() {
        rs.check_center_index(b.center)?;
        if b.is_central() {
            out.push(PreparedBoundary {
                central: true,
                center: b.center,
                y: vec![],
                denominator: Complex64::new(1.0, 0.0),
            });
            continue;
        }
        if b.coords.len() != rs.rank() {
            return Err(Error::ArityMismatch { expected: rs.rank(), got: b.coords.len() });
        }
        let mut dprod = 1.0;
        for alpha in rs.pos_roots_orth() {
            let mut a = 0.0;
            for (k, &x) in b.coords.iter().enumerate() {
                a += alpha[k] * x;
            }
            dprod *= 2.0 * fx::sin(0.5 * a);
        }
        if fx::abs(dprod) < SINGULAR_TOL {
            return Err(Error::NearSingularElement {
                weyl_det_abs: fx::abs(dprod),
                tol: SINGULAR_TOL,
            });
        }
        let denominator = match npos % 4 {
            0 => Complex64::new(dprod, 0.0),
            1 => Complex64::new(0.0, dprod),
            2 => Complex64::new(-dprod, 0.0),
            _ => Complex64::new(0.0, -dprod),
        };
        out.push(PreparedBoundary {
            central: false,
            center: b.center,
            y: rs.orth_transpose_apply(&b.coords),
            denominator,
        })
    }
    Ok(out)
}

/// The per-weight multiplier: `Λ` factors, Frobenius-Schur indicators, and
/// boundary characters, everything except `p · e^{-t p_c} / d^E`.
fn weight_multiplier(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    boundaries: &[PreparedBoundary],
    lambda: &Weight,
    dim: f64,
) -> Result<Complex64> {
    let mut mult = Complex64::new(1.0, 0.0);
    match topo {
        SurfaceTopology::Closed { center, .. } => {
            mult = rs.central_character(lambda, *center)?;
        }
        SurfaceTopology::NonOrientableOdd { center, .. }
        | SurfaceTopology::NonOrientableEven { center, .. } => {
            let f = rs.frobenius_schur_unchecked(lambda);
            if f == 0 {
                return Ok(Complex64::new(0.0, 0.0));
            }
            mult = rs.central_character(lambda, *center)? * f64::from(f);
        }
        SurfaceTopology::Bounded { .. } => {
            let l = rs.rank();
            let lam_rho: Vec<i64> = lambda.coords.iter().map(|&c| c + 1).collect();
            let mut orbit = vec![0i64; l];
            for b in boundaries {
                let central = rs.central_character(lambda, b.center)?;
                if b.central {
                    mult *= central * dim;
                    continue;
                }
                let mut terms: Vec<Complex64> = Vec::with_capacity(rs.weyl().order());
                for w in &rs.weyl().elements {
                    w.apply_into(l, &lam_rho, &mut orbit);
                    let mut phase = 0.0;
                    for (j, &c) in orbit.iter().enumerate() {
                        phase += (c as f64) * b.y[j];
                    }
                    let e = Complex64::new(fx::cos(phase), fx::sin(phase));
                    terms.push(if w.sign > 0 { e } else { -e });
                }
                let numerator = crate::sum::pairwise_complex(&terms);
                mult *= central * (numerator / b.denominator);
            }
        }
    }
    Ok(mult)
}

/// One fully-assembled series term.
fn series_term(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    boundaries: &[PreparedBoundary],
    p: &InvariantPolynomial,
    t: f64,
    exponent: i64,
    lambda: &Weight,
    casimir: f64,
) -> Result<Complex64> {
    let dim = rs.dimension_f64_unchecked(lambda);
    let mult = weight_multiplier(rs, topo, boundaries, lambda, dim)?;
    if mult == Complex64::new(0.0, 0.0) {
        return Ok(mult);
    }
    let x = rs.orth_coords(&lambda.plus_rho());
    let pval = p.eval(&x);
    let scale = pval * fx::exp(-t * casimir) / fx::powi(dim, exponent as i32);
    Ok(mult * scale)
}

/// Internal: evaluate all terms in enumeration order (sorted by casimir,
/// then coordinates) and return them with the weight list length.
pub(crate) fn term_values(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    t: f64,
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<(Vec<Complex64>, Vec<(Weight, Rat)>)> {
    let weights = rs.enumerate_dominant_weights(cutoff, opts.weight_budget)?;
    let boundaries = prepare_boundaries(rs, topo)?;
    let exponent = topo.dimension_exponent();

    #[cfg(feature = "parallel")]
    let terms: Result<Vec<Complex64>> = {
        use rayon::prelude::*;
        weights
            .par_iter()
            .map(|(w, pc)| {
                series_term(rs, topo, &boundaries, p, t, exponent, w, rat_to_f64(*pc))
            })
            .collect()
    };
    #[cfg(not(feature = "parallel"))]
    let terms: Result<Vec<Complex64>> = weights
        .iter()
        .map(|(w, pc)| series_term(rs, topo, &boundaries, p, t, exponent, w, rat_to_f64(*pc)))
        .collect();

    Ok((terms?, weights))
}

/// Evaluate the character series for `topo` at temperature `t ≥ 0` with the
/// given casimir cutoff, under default options.
///
/// At `t = 0` a convergence certificate is required; otherwise the call
/// fails with [`Error::DivergentAtZeroT`].  The reported `tail_bound` is a
/// certified bound on the truncation error (with a safety factor, see
/// [`SeriesResult::tail_bound`]).
pub fn moduli_series(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    t: f64,
    cutoff: Rat,
) -> Result<SeriesResult> {
    moduli_series_with(rs, topo, p, t, cutoff, &EvalOptions::default())
}

/// [`moduli_series`] with explicit [`EvalOptions`].
pub fn moduli_series_with(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    t: f64,
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<SeriesResult> {
    assert!(t >= 0.0, "temperature must be nonnegative");
    topo.validate(rs)?;
    p.check_invariance(rs, opts.invariance_warn_only)?;
    if t == 0.0 {
        convergence_certificate(rs, topo, p.degree())?;
        warn_if_beyond_vanishing(rs, topo, p);
    }
    let (terms, weights) = term_values(rs, topo, p, t, cutoff, opts)?;
    let total = crate::sum::pairwise_complex(&terms);
    debug_assert!(
        fx::abs(total.im) <= 1e-8 * (1.0 + fx::abs(total.re)),
        "series imaginary part did not cancel: {total}"
    );
    let raw = tail::raw_tail_bound(rs, topo, p, t, rat_to_f64(cutoff));
    Ok(SeriesResult {
        value: total.re,
        tail_bound: TAIL_SAFETY * raw,
        schedule_values: vec![(t, total.re)],
        extrapolated: None,
        weight_count: weights.len(),
        converged: raw.is_finite(),
    })
}

/// Polynomial classes of degree above the vanishing threshold integrate to
/// zero; flag the expectation so surprising zeros are explained.
pub(crate) fn warn_if_beyond_vanishing(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
) {
    if let Some(threshold) = topo.vanishing_degree(rs) {
        if i64::from(p.degree()) > threshold {
            log::warn!(
                "polynomial degree {} exceeds the vanishing threshold {}: the regularized value is expected to be zero",
                p.degree(),
                threshold
            );
        }
    }
}
