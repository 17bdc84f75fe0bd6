//! Zero-temperature limits of the character series.
//!
//! Three evaluation paths, tried in order:
//!
//! 1. **Direct**: with an absolute-convergence certificate the series is
//!    summed at `t = 0` outright; rank-one series additionally get
//!    Richardson acceleration on prefix sums (partial-sum error is smooth in
//!    `1/N` for these), which buys several orders of accuracy.
//! 2. **Singular subtraction**: rank-one series with constant multiplier
//!    (closed surface, identity obstruction class) and purely super-critical
//!    polynomial terms have the exact small-`t` expansion
//!    `Σ_n n^D e^{-τ n²} = ½ Γ((D+1)/2) τ^{-(D+1)/2} + ζ(-D) + O(τ)`;
//!    subtracting the Γ part leaves a function analytic in `t` whose
//!    quadratic fit yields the regularized value `Σ_a c_a ν^a ζ(-D_a)`.
//! 3. **Quadratic fit**: evaluate along the positive schedule and fit
//!    `a0 + a1 t + a2 t²`; the intercept is the reported limit and the RMS
//!    residual gates acceptance.

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::chars::HolonomySpec;
use crate::algebra::roots::RootSystem;
use crate::algebra::weights::Weight;
use crate::error::{Error, Result};
use crate::fx;
use crate::rat::{rat_to_f64, Rat};
use crate::series::engine::{
    moduli_series_with, term_values, warn_if_beyond_vanishing, EvalOptions, Extrapolated,
    SeriesResult,
};
use crate::series::extrapolate::{neville_at_zero, quadratic_fit};
use crate::series::poly::InvariantPolynomial;
use crate::series::tail;
use crate::series::topology::{convergence_certificate, SurfaceTopology, ZeroTCertificate};

/// Relative residual threshold for accepting a fitted limit.
pub const FIT_RESIDUAL_TOL: f64 = 1e-3;

/// Acceptance threshold for a vanishing check.
pub const VANISHING_TOL: f64 = 1e-3;

/// `ζ(-D)` for integer `D ≥ 0` (trivial zeros included), up to `D = 12`.
fn zeta_neg(d: i64) -> Option<f64> {
    let table = [
        -0.5,                 // ζ(0)
        -1.0 / 12.0,          // ζ(-1)
        0.0,                  // ζ(-2)
        1.0 / 120.0,          // ζ(-3)
        0.0,                  // ζ(-4)
        -1.0 / 252.0,         // ζ(-5)
        0.0,                  // ζ(-6)
        1.0 / 240.0,          // ζ(-7)
        0.0,                  // ζ(-8)
        -1.0 / 132.0,         // ζ(-9)
        0.0,                  // ζ(-10)
        691.0 / 32760.0,      // ζ(-11)
        0.0,                  // ζ(-12)
    ];
    usize::try_from(d).ok().and_then(|i| table.get(i).copied())
}

/// Enlarge the cutoff so the discarded heat factor is below `1e-14`.
pub(crate) fn effective_cutoff(user: Rat, t: f64) -> Rat {
    debug_assert!(t > 0.0);
    let needed = 33.0 / t;
    let needed_int = Rat::from_integer(needed as i128 + 1);
    if needed_int > user {
        needed_int
    } else {
        user
    }
}

fn validate_schedule(t_schedule: &[f64]) -> Result<Vec<f64>> {
    if t_schedule.len() < 4 {
        return Err(Error::ArityMismatch { expected: 4, got: t_schedule.len() });
    }
    let mut sched = t_schedule.to_vec();
    sched.sort_by(|a, b| b.partial_cmp(a).expect("schedule values must be finite"));
    for w in sched.windows(2) {
        assert!(w[0] > w[1], "schedule points must be distinct");
    }
    assert!(
        sched.last().copied().unwrap_or(0.0) > 0.0,
        "schedule points must be positive"
    );
    Ok(sched)
}

/// The `t → 0` limit of the series for `topo`, by the best applicable path.
///
/// `t_schedule` needs at least four distinct positive points (used by the
/// fit paths; the direct path ignores it).  Each schedule evaluation
/// enlarges `cutoff` so that `e^{-t·cutoff} < 1e-14`.
pub fn regularized_limit(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    t_schedule: &[f64],
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<SeriesResult> {
    topo.validate(rs)?;
    p.check_invariance(rs, opts.invariance_warn_only)?;
    let sched = validate_schedule(t_schedule)?;
    warn_if_beyond_vanishing(rs, topo, p);

    if let Ok(ZeroTCertificate::Absolute) = convergence_certificate(rs, topo, p.degree()) {
        return direct_zero_t(rs, topo, p, cutoff, opts);
    }
    if let Some(plan) = singular_subtraction_plan(rs, topo, p) {
        return subtracted_fit(rs, topo, p, &sched, cutoff, opts, &plan);
    }
    schedule_fit(rs, topo, p, &sched, cutoff, opts)
}

/// Direct summation at `t = 0` under an absolute certificate.
fn direct_zero_t(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<SeriesResult> {
    let (terms, weights) = term_values(rs, topo, p, 0.0, cutoff, opts)?;
    let n = terms.len();
    let plain = crate::sum::pairwise_complex(&terms).re;

    if rs.rank() == 1 && n >= 64 {
        // Prefix-sum Richardson: cuts at N/64, N/16, N/4, N, rounded down to
        // even so alternating multipliers contribute whole ± pairs.
        let reals: Vec<f64> = terms.iter().map(|c| c.re).collect();
        let mut cuts: Vec<usize> = [n / 64, n / 16, n / 4, n]
            .iter()
            .map(|&k| {
                let k = k.max(2);
                k - (k % 2)
            })
            .collect();
        cuts.dedup();
        if cuts.len() >= 3 {
            let sums = crate::sum::prefix_sums(&reals, &cuts);
            let xs: Vec<f64> = cuts.iter().map(|&k| 1.0 / k as f64).collect();
            let value = neville_at_zero(&xs, &sums);
            let refined = neville_at_zero(&xs[1..], &sums[1..]);
            let residual = fx::abs(value - refined);
            let coarse_cas = rat_to_f64(weights[cuts[0] - 1].1);
            let raw = tail::raw_tail_zero_t(rs, topo, p, coarse_cas);
            return Ok(SeriesResult {
                value,
                tail_bound: 4.0 * raw + 2.0 * residual,
                schedule_values: vec![(0.0, plain)],
                extrapolated: Some(Extrapolated { value, residual }),
                weight_count: n,
                converged: true,
            });
        }
    }

    let raw = tail::raw_tail_zero_t(rs, topo, p, rat_to_f64(cutoff));
    Ok(SeriesResult {
        value: plain,
        tail_bound: 2.0 * raw,
        schedule_values: vec![(0.0, plain)],
        extrapolated: None,
        weight_count: n,
        converged: true,
    })
}

/// Data for the singular-subtraction path: per polynomial term, the ladder
/// exponent `D_a = a − E` and the frame coefficient `c_a ν^a`.
struct SubtractionPlan {
    /// `(D_a, c_a ν^a)` per term.
    terms: Vec<(i64, f64)>,
}

/// The subtraction path applies to rank-one closed series with the identity
/// obstruction class (constant multiplier `+1`) whose polynomial terms all
/// sit at or above the divergence threshold and within the `ζ` table.
fn singular_subtraction_plan(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
) -> Option<SubtractionPlan> {
    if rs.rank() != 1 {
        return None;
    }
    let SurfaceTopology::Closed { center: 0, .. } = topo else {
        return None;
    };
    let e = topo.dimension_exponent();
    let nu = rs.orth_matrix()[0];
    let mut terms = Vec::new();
    for (exps, coeff) in p.terms() {
        let a = i64::from(exps[0]);
        let d = a - e;
        if d < 0 || zeta_neg(d).is_none() {
            return None;
        }
        terms.push((d, rat_to_f64(*coeff) * fx::powi(nu, a as i32)));
    }
    if terms.is_empty() {
        return None;
    }
    Some(SubtractionPlan { terms })
}

/// Evaluate the schedule, subtract the exact `Γ` singularity per point, and
/// fit the analytic remainder.
fn subtracted_fit(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    sched: &[f64],
    cutoff: Rat,
    opts: &EvalOptions,
    plan: &SubtractionPlan,
) -> Result<SeriesResult> {
    let nu = rs.orth_matrix()[0];
    let rho2 = rat_to_f64(rs.rho_norm2());
    let mut ws = Vec::with_capacity(sched.len());
    let mut max_raw_tail = 0.0f64;
    let mut max_weights = 0usize;
    let mut schedule_values = Vec::with_capacity(sched.len());
    for &t in sched {
        let cut = effective_cutoff(cutoff, t);
        let res = moduli_series_with(rs, topo, p, t, cut, opts)?;
        let tau = t * nu * nu;
        let mut sing = 0.0;
        for &(d, c) in &plan.terms {
            let half = 0.5 * (d as f64 + 1.0);
            sing += c * 0.5 * fx::tgamma(half) * fx::powf(tau, -half);
        }
        sing *= fx::exp(t * rho2);
        ws.push(res.value - sing);
        schedule_values.push((t, res.value));
        max_raw_tail = max_raw_tail.max(res.tail_bound);
        max_weights = max_weights.max(res.weight_count);
    }
    let (a0, _a1, _a2, rms) = quadratic_fit(sched, &ws);
    let threshold = FIT_RESIDUAL_TOL * fx::abs(a0).max(1.0);
    if rms > threshold {
        return Err(Error::ExtrapolationUnstable { residual: rms, threshold });
    }
    Ok(SeriesResult {
        value: a0,
        tail_bound: 2.0 * max_raw_tail + 3.0 * rms,
        schedule_values,
        extrapolated: Some(Extrapolated { value: a0, residual: rms }),
        weight_count: max_weights,
        converged: true,
    })
}

/// Plain quadratic fit along the schedule.
fn schedule_fit(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    sched: &[f64],
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<SeriesResult> {
    let mut vs = Vec::with_capacity(sched.len());
    let mut schedule_values = Vec::with_capacity(sched.len());
    let mut max_raw_tail = 0.0f64;
    let mut max_weights = 0usize;
    for &t in sched {
        let cut = effective_cutoff(cutoff, t);
        let res = moduli_series_with(rs, topo, p, t, cut, opts)?;
        vs.push(res.value);
        schedule_values.push((t, res.value));
        max_raw_tail = max_raw_tail.max(res.tail_bound);
        max_weights = max_weights.max(res.weight_count);
    }
    let (a0, _a1, _a2, rms) = quadratic_fit(sched, &vs);
    let threshold = FIT_RESIDUAL_TOL * fx::abs(a0).max(1.0);
    if rms > threshold {
        return Err(Error::ExtrapolationUnstable { residual: rms, threshold });
    }
    Ok(SeriesResult {
        value: a0,
        tail_bound: 2.0 * max_raw_tail + 3.0 * rms,
        schedule_values,
        extrapolated: Some(Extrapolated { value: a0, residual: rms }),
        weight_count: max_weights,
        converged: true,
    })
}

/// Report from a vanishing-theorem check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VanishingReport {
    /// Whether the degree bound predicts a zero integral.
    pub expected_zero: bool,
    /// Whether the computed value is below [`VANISHING_TOL`].
    pub achieved: bool,
    /// The regularized value.
    pub value: f64,
    /// The acceptance threshold used.
    pub threshold: f64,
}

/// Evaluate the regularized limit and compare against the vanishing theorem:
/// orientable-surface integrals of classes with
/// `deg p > |Δ⁺| · (2g − 2 + s)` are zero.
pub fn vanishing_check(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    p: &InvariantPolynomial,
    t_schedule: &[f64],
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<VanishingReport> {
    let expected_zero = topo
        .vanishing_degree(rs)
        .is_some_and(|threshold| i64::from(p.degree()) > threshold);
    let res = regularized_limit(rs, topo, p, t_schedule, cutoff, opts)?;
    Ok(VanishingReport {
        expected_zero,
        achieved: fx::abs(res.value) <= VANISHING_TOL,
        value: res.value,
        threshold: VANISHING_TOL,
    })
}

/// Physicists' Hermite polynomial `H_k(u)`, by upward recurrence.
fn hermite_phys(k: u32, u: f64) -> f64 {
    let mut prev = 1.0;
    if k == 0 {
        return prev;
    }
    let mut cur = 2.0 * u;
    for j in 1..k {
        let next = 2.0 * u * cur - 2.0 * f64::from(j) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `Σ_{m≥1} m^k sin(mθ) e^{-a m²}` for odd `k`, through the theta-dual
/// (Poisson-resummed) representation
///
/// `(-1)^{(k+3)/2} · ½ √(π/a) · c^k · Σ_n H_k(c(θ-2πn)) e^{-c²(θ-2πn)²}`
///
/// with `c = 1/(2√a)`.  Both representations are exact for every `a > 0`,
/// but their numerical characters are opposite: for `a ≪ 1` the defining
/// sum reaches summands of size `~Γ((k+1)/2)/(2a^{(k+1)/2})` while the
/// value itself is only `O(e^{-θ²/4a})`, so truncated summation returns
/// pure cancellation noise exactly where the dual needs just the few
/// lattice images with `c²(θ-2πn)² ≤ 745` — evaluated without subtractive
/// cancellation.
fn sine_power_theta_dual(k: u32, theta: f64, a: f64) -> f64 {
    debug_assert!(k % 2 == 1, "dual form applies to odd powers");
    debug_assert!(a > 0.0);
    let two_pi = 2.0 * core::f64::consts::PI;
    let c = 0.5 / fx::sqrt(a);
    // Images with u² > 745 underflow e^{-u²} to zero; skip them up front.
    let reach = fx::sqrt(745.0) / c;
    let n_center = (theta / two_pi) as i64;
    let n_span = (reach / two_pi) as i64 + 1;
    let mut images = 0.0;
    for n in (n_center - n_span)..=(n_center + n_span) {
        let u = c * (theta - two_pi * n as f64);
        let u2 = u * u;
        if u2 > 745.0 {
            continue;
        }
        images += hermite_phys(k, u) * fx::exp(-u2);
    }
    if images == 0.0 {
        // Avoid `0 · ∞` when the prefactor overflows for extreme powers.
        return 0.0;
    }
    let sign = if (k + 3) / 2 % 2 == 0 { 1.0 } else { -1.0 };
    sign * 0.5 * fx::sqrt(core::f64::consts::PI / a) * fx::powi(c, k as i32) * images
}

/// Rank-one monomial split of the inner boundary series at the dimension
/// exponent `E = 2g − 1`.
///
/// Sub-threshold monomials (`d ≤ E`) keep truncated summation and the
/// quadratic fit.  Beyond-threshold monomials (`d > E`, i.e. past the inner
/// surface's vanishing degree) have ladder sums
/// `Σ_m m^{d-E} sin(mθ) e^{-t q m²}` that are evaluated through
/// [`sine_power_theta_dual`] instead: truncated summation is
/// cancellation-dominated there, and the quadratic fit model is equally
/// wrong since the inner values decay like `e^{-θ²/(4tq)}` rather than
/// polynomially in `t`.
struct MonomialSplit {
    /// Sub-threshold part; `None` when every monomial lies beyond.
    tame: Option<InvariantPolynomial>,
    /// `(k = d − E, c_d ν^d)` per beyond-threshold monomial, `k` odd.
    dual: Vec<(u32, f64)>,
    /// Heat coefficient: the casimir on the rank-one ladder is `q(m² − 1)`.
    q: f64,
    /// Frame scale: `θ = ν ε`, and the polynomial variable is `ν m`.
    nu: f64,
}

/// Split `p` for the rank-one dual path; `None` when no monomial lies
/// beyond the threshold (the generic path is already exact-enough there) or
/// when an odd-degree monomial slipped past a downgraded invariance check.
fn monomial_split(rs: &RootSystem, genus: u32, p: &InvariantPolynomial) -> Option<MonomialSplit> {
    let e_exp = 2 * i64::from(genus) - 1;
    let nu = rs.orth_matrix()[0];
    let mut tame_terms: Vec<(Vec<u32>, Rat)> = Vec::new();
    let mut dual = Vec::new();
    for (exps, coeff) in p.terms() {
        let d = i64::from(exps[0]);
        let k = d - e_exp;
        if k >= 1 {
            if k % 2 == 0 {
                return None;
            }
            dual.push((k as u32, rat_to_f64(*coeff) * fx::powi(nu, d as i32)));
        } else {
            tame_terms.push((exps.clone(), *coeff));
        }
    }
    if dual.is_empty() {
        return None;
    }
    let tame = if tame_terms.is_empty() {
        None
    } else {
        Some(InvariantPolynomial::from_terms(1, &tame_terms).ok()?)
    };
    // Read `q` off the `m = 2` rung: `p_c = q(m² − 1)` gives `3q` there.
    let q = rat_to_f64(rs.casimir_unchecked(&Weight { coords: vec![1] })) / 3.0;
    Some(MonomialSplit { tame, dual, q, nu })
}

/// Outer `ε → 0` extrapolation shared by the generic and split class-limit
/// paths.  The inner limits are one-sidedly analytic in `ε` with a genuine
/// linear term (the boundary series picks up an `|θ|`-type kink at the
/// center), so the outer variable is `ε` itself, not `ε²`.
fn class_limit_result(
    eps_sorted: &[f64],
    ys: &[f64],
    max_tail: f64,
    max_inner_rms: f64,
    max_weights: usize,
) -> SeriesResult {
    let value = neville_at_zero(eps_sorted, ys);
    let refined = neville_at_zero(&eps_sorted[1..], &ys[1..]);
    let residual = fx::abs(value - refined);
    SeriesResult {
        value,
        tail_bound: 2.0 * max_tail + 2.0 * residual + 3.0 * max_inner_rms,
        schedule_values: eps_sorted.iter().copied().zip(ys.iter().copied()).collect(),
        extrapolated: Some(Extrapolated { value, residual }),
        weight_count: max_weights,
        converged: true,
    }
}

/// Class-limit evaluation with the monomial split.  Returns `Ok(None)` when
/// the beyond-threshold values fail to collapse along the temperature
/// schedule (too-large temperatures); the caller then falls back to the
/// generic fit.
#[allow(clippy::too_many_arguments)]
fn split_class_limit(
    rs: &RootSystem,
    genus: u32,
    center: usize,
    split: &MonomialSplit,
    eps_sorted: &[f64],
    sched: &[f64],
    cutoff: Rat,
    opts: &EvalOptions,
    phi_min: f64,
) -> Result<Option<SeriesResult>> {
    // The order-two obstruction folds into an angle shift:
    // `(-1)^{m-1} sin(mθ) = -sin(m(θ+π))`.
    let (shift, center_sign) =
        if center == 0 { (0.0, 1.0) } else { (core::f64::consts::PI, -1.0) };
    let mut ys = Vec::with_capacity(eps_sorted.len());
    let mut max_weights = 0usize;
    let mut max_inner_rms = 0.0f64;
    let mut max_tail = 0.0f64;
    for &eps in eps_sorted {
        let scale = eps * eps * phi_min * phi_min / 40.0;
        let inner_sched: Vec<f64> = sched.iter().map(|&t| t * scale).collect();
        let theta = split.nu * eps;
        let mut w = 0.0;

        if let Some(tame) = &split.tame {
            // Rank one: the generic ray is the single unit vector.
            let spec = HolonomySpec { center, coords: vec![eps] };
            let inner_topo = SurfaceTopology::Bounded { genus, boundaries: vec![spec] };
            let mut vs = Vec::with_capacity(inner_sched.len());
            for &t in &inner_sched {
                let cut = effective_cutoff(cutoff, t);
                let res = moduli_series_with(rs, &inner_topo, tame, t, cut, opts)?;
                vs.push(res.value);
                max_weights = max_weights.max(res.weight_count);
                max_tail = max_tail.max(res.tail_bound);
            }
            let (fit, _a1, _a2, rms) = quadratic_fit(&inner_sched, &vs);
            let threshold = FIT_RESIDUAL_TOL * fx::abs(fit).max(1.0);
            if rms > threshold {
                return Err(Error::ExtrapolationUnstable { residual: rms, threshold });
            }
            max_inner_rms = max_inner_rms.max(rms);
            w += fit;
        }

        let sin_theta = fx::sin(theta);
        let mut duals = Vec::with_capacity(inner_sched.len());
        for &t in &inner_sched {
            let a = t * split.q;
            let mut s = 0.0;
            for &(k, coeff) in &split.dual {
                s += coeff * sine_power_theta_dual(k, theta + shift, a);
            }
            duals.push(center_sign * fx::exp(a) * s / sin_theta);
        }
        // `e^{-θ²/(4tq)}`-type decay: magnitudes must collapse monotonically
        // along the descending schedule; the deepest value then carries the
        // remaining distance to the (zero) inner limit as its residual.
        if duals.windows(2).any(|pair| fx::abs(pair[1]) > fx::abs(pair[0])) {
            return Ok(None);
        }
        let deep = *duals.last().expect("schedule has points");
        max_inner_rms = max_inner_rms.max(fx::abs(deep));
        w += deep;
        ys.push(w);
    }
    Ok(Some(class_limit_result(eps_sorted, &ys, max_tail, max_inner_rms, max_weights)))
}

/// Limit of boundary-class series as the class approaches a center element.
///
/// For each scale `ε` in `c_schedule` the boundary class is
/// `u · exp(ε v̂)` along a fixed generic ray `v̂`; the inner limit evaluates
/// the one-boundary genus-`g` series (dimension exponent `2g − 1`) on a
/// temperature schedule contracted by `ε²` (the oscillation scale), and the
/// outer limit extrapolates the inner values in `ε` to zero.  The result
/// converges to the closed-surface series at the center element `u` with
/// exponent `2g − 2`.
///
/// Rank-one polynomials with monomials beyond the inner surface's vanishing
/// degree route those monomials through the theta-dual representation (see
/// [`MonomialSplit`]); everything else goes through truncated summation and
/// the quadratic fit.
pub fn c_to_u_limit(
    rs: &RootSystem,
    genus: u32,
    center: usize,
    p: &InvariantPolynomial,
    c_schedule: &[f64],
    t_schedule: &[f64],
    cutoff: Rat,
    opts: &EvalOptions,
) -> Result<SeriesResult> {
    rs.check_center_index(center)?;
    p.check_invariance(rs, opts.invariance_warn_only)?;
    if c_schedule.len() < 3 {
        return Err(Error::ArityMismatch { expected: 3, got: c_schedule.len() });
    }
    let sched = validate_schedule(t_schedule)?;
    let l = rs.rank();

    // Generic ray: incommensurate positive components keep the class away
    // from Weyl walls for every scale.
    let mut ray: Vec<f64> = (0..l).map(|j| 1.0 / fx::sqrt(1.0 + j as f64)).collect();
    let norm = fx::sqrt(ray.iter().map(|v| v * v).sum::<f64>());
    for v in &mut ray {
        *v /= norm;
    }
    // Smallest root pairing along the ray sets the oscillation scale.
    let mut phi_min = f64::INFINITY;
    for alpha in rs.pos_roots_orth() {
        let mut a = 0.0;
        for (k, &v) in ray.iter().enumerate() {
            a += alpha[k] * v;
        }
        phi_min = phi_min.min(fx::abs(a));
    }

    let mut eps_sorted = c_schedule.to_vec();
    eps_sorted.sort_by(|a, b| b.partial_cmp(a).expect("class scales must be finite"));
    assert!(eps_sorted.last().copied().unwrap_or(0.0) > 0.0, "class scales must be positive");

    if l == 1 {
        if let Some(split) = monomial_split(rs, genus, p) {
            if let Some(res) = split_class_limit(
                rs, genus, center, &split, &eps_sorted, &sched, cutoff, opts, phi_min,
            )? {
                return Ok(res);
            }
        }
    }

    let mut ys = Vec::with_capacity(eps_sorted.len());
    let mut max_weights = 0usize;
    let mut max_inner_rms = 0.0f64;
    let mut max_tail = 0.0f64;
    for &eps in &eps_sorted {
        let coords: Vec<f64> = ray.iter().map(|&v| eps * v).collect();
        let spec = HolonomySpec { center, coords };
        let inner_topo = SurfaceTopology::Bounded { genus, boundaries: vec![spec] };
        // Temperatures well below the squared oscillation scale keep the
        // theta-function remainder exponentially negligible.
        let scale = eps * eps * phi_min * phi_min / 40.0;
        let inner_sched: Vec<f64> = sched.iter().map(|&t| t * scale).collect();
        let mut vs = Vec::with_capacity(inner_sched.len());
        for &t in &inner_sched {
            let cut = effective_cutoff(cutoff, t);
            let res = moduli_series_with(rs, &inner_topo, p, t, cut, opts)?;
            vs.push(res.value);
            max_weights = max_weights.max(res.weight_count);
            max_tail = max_tail.max(res.tail_bound);
        }
        let (w, _a1, _a2, rms) = quadratic_fit(&inner_sched, &vs);
        let threshold = FIT_RESIDUAL_TOL * fx::abs(w).max(1.0);
        if rms > threshold {
            return Err(Error::ExtrapolationUnstable { residual: rms, threshold });
        }
        max_inner_rms = max_inner_rms.max(rms);
        ys.push(w);
    }
    Ok(class_limit_result(&eps_sorted, &ys, max_tail, max_inner_rms, max_weights))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::{build_root_system, Family};

    fn schedule() -> Vec<f64> {
        (0..6).map(|k| 0.4 * fx::powi(0.5, k)).collect()
    }

    #[test]
    fn basel_limit_via_direct_path() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 2, center: 0 };
        let p = InvariantPolynomial::one(1);
        let res =
            regularized_limit(&rs, &topo, &p, &schedule(), Rat::from_integer(200_000), &EvalOptions::default())
                .unwrap();
        let zeta2 = core::f64::consts::PI * core::f64::consts::PI / 6.0;
        assert!(res.extrapolated.is_some());
        assert!(fx::abs(res.value - zeta2) < 1e-8, "value {}", res.value);
    }

    #[test]
    fn eta_limit_alternating() {
        // Closed genus 2 with the order-two obstruction: Σ (-1)^{n-1}/n².
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 2, center: 1 };
        let p = InvariantPolynomial::one(1);
        let res =
            regularized_limit(&rs, &topo, &p, &schedule(), Rat::from_integer(200_000), &EvalOptions::default())
                .unwrap();
        let eta2 = core::f64::consts::PI * core::f64::consts::PI / 12.0;
        assert!(fx::abs(res.value - eta2) < 1e-8, "value {}", res.value);
    }

    #[test]
    fn theta_dual_matches_direct_summation() {
        // At moderate `a` both representations are accurate; compare the
        // dual against the defining sum truncated at the underflow edge.
        let cases =
            [(0.7, 0.01), (0.7, 0.05), (0.7 + core::f64::consts::PI, 0.02), (2.9, 0.04)];
        for &(theta, a) in &cases {
            for &k in &[1u32, 3, 5] {
                let m_max = fx::sqrt(745.0 / a) as i64 + 1;
                let terms: Vec<f64> = (1..=m_max)
                    .map(|m| {
                        let mf = m as f64;
                        fx::powi(mf, k as i32) * fx::sin(mf * theta) * fx::exp(-a * mf * mf)
                    })
                    .collect();
                let direct = crate::sum::pairwise(&terms);
                let dual = sine_power_theta_dual(k, theta, a);
                assert!(
                    fx::abs(dual - direct) <= 1e-8 * fx::abs(direct).max(1.0),
                    "k={k} theta={theta} a={a}: dual {dual} vs direct {direct}"
                );
            }
        }
    }

    #[test]
    fn beyond_threshold_class_limits_collapse() {
        // Genus-two boundary limits of x⁴/x⁶/x⁸ at both obstruction
        // classes lie entirely beyond the vanishing degree: the dual path
        // must deliver clean zeros where truncated summation sees only
        // cancellation noise.
        let rs = build_root_system(Family::A, 1).unwrap();
        let c_sched: Vec<f64> = (0..5).map(|j| 0.1 * fx::powi(0.5, j)).collect();
        for center in 0..2 {
            for power in [4u32, 6, 8] {
                let p = InvariantPolynomial::from_terms(1, &[(vec![power], Rat::from_integer(1))])
                    .unwrap();
                let res = c_to_u_limit(
                    &rs,
                    2,
                    center,
                    &p,
                    &c_sched,
                    &schedule(),
                    Rat::from_integer(1000),
                    &EvalOptions::default(),
                )
                .unwrap();
                assert!(fx::abs(res.value) < 1e-3, "x^{power} center {center}: {}", res.value);
            }
        }
    }

    #[test]
    fn monomial_split_is_additive() {
        // A mixed polynomial must reproduce the class limit of its
        // sub-threshold part: the beyond part contributes only its
        // collapsed (underflow-level) inner values.
        let rs = build_root_system(Family::A, 1).unwrap();
        let c_sched = [0.2, 0.1, 0.05];
        let t_sched = [0.4, 0.2, 0.1, 0.05];
        let cutoff = Rat::from_integer(1000);
        let opts = EvalOptions::default();
        let mixed = InvariantPolynomial::from_terms(
            1,
            &[(vec![2], Rat::from_integer(1)), (vec![8], Rat::from_integer(1))],
        )
        .unwrap();
        let quad =
            InvariantPolynomial::from_terms(1, &[(vec![2], Rat::from_integer(1))]).unwrap();
        let a = c_to_u_limit(&rs, 2, 0, &mixed, &c_sched, &t_sched, cutoff, &opts).unwrap();
        let b = c_to_u_limit(&rs, 2, 0, &quad, &c_sched, &t_sched, cutoff, &opts).unwrap();
        assert!(fx::abs(a.value - b.value) < 1e-10, "{} vs {}", a.value, b.value);
    }

    #[test]
    fn quartic_class_vanishes_on_singular_genus_two() {
        // deg p = 4 > |Δ⁺|(2g−2) = 2: regularized value 0 via ζ(-2).
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 2, center: 0 };
        let p = InvariantPolynomial::from_terms(1, &[(vec![4], Rat::from_integer(1))]).unwrap();
        let report = vanishing_check(
            &rs,
            &topo,
            &p,
            &schedule(),
            Rat::from_integer(1000),
            &EvalOptions::default(),
        )
        .unwrap();
        assert!(report.expected_zero);
        assert!(report.achieved, "value {}", report.value);
    }
}
