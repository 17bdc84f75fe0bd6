//! Monte Carlo partition-function estimators over surface relators.
//!
//! The estimator draws, for each sample index, an independent ChaCha stream,
//! fills the relator's generators with Haar elements, and evaluates the
//! truncated heat kernel at the relator value.  Sample values are reduced in
//! index order with pairwise summation, so the result is a pure function of
//! `(group, topology, t, samples, seed)` — thread counts and scheduling
//! cannot change a single bit.

use alloc::vec::Vec;

use crate::algebra::roots::RootSystem;
use crate::error::{Error, Result};
use crate::fx;
use crate::mc::group::SpecialUnitary;
use crate::mc::heat::HeatKernel;
use crate::mc::rng::stream_rng;
use crate::mc::words::{eval_word, surface_word_plan, WordPlan};
use crate::series::SurfaceTopology;
use crate::sum::pairwise;

/// Outcome of a Monte Carlo run.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct McEstimate {
    /// Sample mean of the integrand.
    pub mean: f64,
    /// Standard error: sample standard deviation over `sqrt(samples)`.
    pub stderr: f64,
    /// Number of samples drawn.
    pub samples: u64,
    /// Seed the run was keyed by.
    pub seed: u64,
}

impl McEstimate {
    /// Normalized deviation of the mean from a reference value.
    #[must_use]
    pub fn z_score(&self, reference: f64) -> f64 {
        (self.mean - reference) / self.stderr
    }
}

/// Mean and standard error of ordered sample values.
pub(crate) fn summarize(values: &[f64], seed: u64) -> McEstimate {
    let n = values.len() as f64;
    let mean = pairwise(values) / n;
    let stderr = if values.len() >= 2 {
        let devsq: Vec<f64> = values.iter().map(|v| (v - mean) * (v - mean)).collect();
        fx::sqrt(pairwise(&devsq) / (n - 1.0) / n)
    } else {
        0.0
    };
    McEstimate { mean, stderr, samples: values.len() as u64, seed }
}

/// Ordered per-index sample values for a word plan.
pub(crate) fn plan_sample_values(
    group: SpecialUnitary,
    plan: &WordPlan,
    kernel: &HeatKernel,
    samples: u64,
    seed: u64,
) -> Vec<f64> {
    let value_at = |idx: u64| -> f64 {
        let mut rng = stream_rng(seed, idx);
        let gens: Vec<_> = (0..plan.gens).map(|_| group.haar(&mut rng)).collect();
        let w = eval_word(group, &plan.word, &gens, &plan.fixed)
            .expect("word validated at plan time");
        if plan.weighted {
            kernel.eval_weighted(&w)
        } else {
            kernel.eval(&w)
        }
    };

    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..samples).into_par_iter().map(value_at).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..samples).map(value_at).collect()
    }
}

/// Monte Carlo estimate of the bare character series for `topo` at diffusion
/// time `t > 0`.
///
/// The expectation of the estimator equals the corresponding
/// [`crate::series::moduli_series`] value (the even non-orientable case
/// estimates the squared-indicator series; see the module docs), up to the
/// `1e-12` kernel truncation.  Only SU(2) and SU(3) have samplers.
pub fn mc_partition_estimate(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    t: f64,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    assert!(t > 0.0, "Monte Carlo estimation needs t > 0");
    if samples == 0 {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    }
    topo.validate(rs)?;
    let group = SpecialUnitary::from_root_system(rs)?;
    let plan = surface_word_plan(rs, group, topo)?;
    let kernel = HeatKernel::auto(rs, t)?;
    let values = plan_sample_values(group, &plan, &kernel, samples, seed);
    Ok(summarize(&values, seed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::{build_root_system, Family};

    #[test]
    fn torus_estimator_recovers_the_spectral_sum() {
        // Genus 1, trivial obstruction: E[H(t, [x, y])] = sum e^{-t p}.
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 1, center: 0 };
        let est = mc_partition_estimate(&rs, &topo, 8.0, 3000, 20260822).unwrap();
        let mut want = 0.0;
        for n in 1..30i64 {
            want += fx::exp(-((n * n - 1) as f64));
        }
        let z = est.z_score(want);
        assert!(est.stderr > 0.0 && est.stderr.is_finite());
        assert!(fx::abs(z) < 4.0, "mean {} vs {} (z = {z})", est.mean, want);
    }

    #[test]
    fn runs_are_reproducible_for_a_fixed_seed() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 2, center: 1 };
        let a = mc_partition_estimate(&rs, &topo, 1.0, 400, 7).unwrap();
        let b = mc_partition_estimate(&rs, &topo, 1.0, 400, 7).unwrap();
        assert_eq!(a, b);
        let c = mc_partition_estimate(&rs, &topo, 1.0, 400, 8).unwrap();
        assert_ne!(a.mean.to_bits(), c.mean.to_bits());
    }

    #[test]
    fn estimator_bits_are_frozen_across_schedulers() {
        // Pinned output of a short run; the same bits must come back whether
        // the samples are drawn serially or by a rayon pool, on any host.
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 1, center: 0 };
        let est = mc_partition_estimate(&rs, &topo, 8.0, 512, 1337).unwrap();
        assert_eq!(est.mean.to_bits(), 0x3ff0_dbb9_7ac1_e92c, "mean {}", est.mean);
        assert_eq!(est.stderr.to_bits(), 0x3f72_b183_695d_5895, "stderr {}", est.stderr);
    }

    #[test]
    fn zero_samples_are_rejected() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let topo = SurfaceTopology::Closed { genus: 1, center: 0 };
        assert!(mc_partition_estimate(&rs, &topo, 1.0, 0, 1).is_err());
    }
}
