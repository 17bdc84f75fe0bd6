//! Fixed-order pairwise summation.
//!
//! Series values must be byte-identical across worker counts, so every
//! reduction in the crate goes through these helpers: the addition tree
//! depends only on the *length* of the slice, never on chunking or thread
//! scheduling.

use alloc::vec::Vec;
use num_complex::Complex64;

const PAIRWISE_BASE: usize = 8;

/// Sum `xs` with a balanced binary tree (leaves of at most 8 summed left to
/// right).  Deterministic for a fixed input order and more accurate than a
/// running sum for long, same-sign inputs.
#[must_use]
pub fn pairwise(xs: &[f64]) -> f64 {
    if xs.len() <= PAIRWISE_BASE {
        let mut acc = 0.0;
        for &x in xs {
            acc += x;
        }
        return acc;
    }
    let mid = xs.len() / 2;
    pairwise(&xs[..mid]) + pairwise(&xs[mid..])
}

/// Complex counterpart of [`pairwise`] with the same tree shape.
#[must_use]
pub fn pairwise_complex(xs: &[Complex64]) -> Complex64 {
    if xs.len() <= PAIRWISE_BASE {
        let mut acc = Complex64::new(0.0, 0.0);
        for &x in xs {
            acc += x;
        }
        return acc;
    }
    let mid = xs.len() / 2;
    pairwise_complex(&xs[..mid]) + pairwise_complex(&xs[mid..])
}

/// Prefix sums at the given term counts: `cuts` must be ascending and each
/// entry at most `xs.len()`.  Returns one pairwise sum per cut, each computed
/// over the full prefix so the tree shape matches `pairwise(&xs[..cut])`
/// exactly.
#[must_use]
pub fn prefix_sums(xs: &[f64], cuts: &[usize]) -> Vec<f64> {
    cuts.iter().map(|&c| pairwise(&xs[..c])).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_exact_on_integers() {
        let xs: Vec<f64> = (1..=1000).map(|k| k as f64).collect();
        assert_eq!(pairwise(&xs), 500_500.0);
    }

    #[test]
    fn split_invariance_of_value() {
        // The tree depends only on length, so summing the same data twice
        // must agree bit for bit.
        let xs: Vec<f64> = (0..257).map(|k| 1.0 / (1.0 + k as f64)).collect();
        let a = pairwise(&xs);
        let b = pairwise(&xs.clone());
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn prefix_matches_direct() {
        let xs: Vec<f64> = (0..100).map(|k| crate::fx::sin(k as f64)).collect();
        let cuts = [10, 50, 100];
        let ps = prefix_sums(&xs, &cuts);
        for (i, &c) in cuts.iter().enumerate() {
            assert_eq!(ps[i].to_bits(), pairwise(&xs[..c]).to_bits());
        }
    }
}
