//! Integral weights and dominant-weight enumeration.

use alloc::format;
use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::rat::{rat_int, Rat};

use super::roots::RootSystem;

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight {
    pub coords: Vec<i64>,
}

impl Weight {
    #[must_use]
    pub fn new(coords: Vec<i64>) -> Self {
        Weight { coords }
    }

    #[must_use]
    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    /// All coordinates nonnegative: the weight is dominant.
    #[must_use]
    pub fn is_dominant(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0)
    }

    /// `λ + ρ` with `ρ = (1, …, 1)`.
    #[must_use]
    pub fn plus_rho(&self) -> Vec<i64> {
        self.coords.iter().map(|&c| c + 1).collect()
    }
}

/// Integer square root of a nonnegative `u64` (largest `r` with `r² ≤ n`).
#[must_use]
pub(crate) fn isqrt_u64(n: u64) -> u64 {
    if n == 0 {
        return 0;
    }
    let mut r = crate::fx::sqrt(n as f64) as u64;
    while r.checked_mul(r).map_or(true, |sq| sq > n) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).map_or(false, |sq| sq <= n) {
        r += 1;
    }
    r
}

impl RootSystem {
    /// Require a dominant weight of matching rank.
    pub(crate) fn check_dominant(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank() || !lambda.is_dominant() {
            return Err(Error::NonDominantWeight {
                coords: format!("{:?}", lambda.coords),
            });
        }
        Ok(())
    }

    /// All dominant weights `λ` with Casimir `p(λ) ≤ cutoff`, sorted by
    /// `(p(λ), coords)` ascending.
    ///
    /// The Killing Gram matrix has positive entries and dominant coordinates
    /// are nonnegative, so every cross term in `⟨λ, λ + 2ρ⟩` is nonnegative
    /// and the diagonal alone bounds each coordinate:
    /// `G_ii λ_i² ≤ cutoff  ⇒  λ_i ≤ √(cutoff / G_ii)`.
    /// Scanning the resulting box is exact; `budget` caps both the box size
    /// and the result length.
    pub fn enumerate_dominant_weights(
        &self,
        cutoff: Rat,
        budget: u64,
    ) -> Result<Vec<(Weight, Rat)>> {
        let l = self.rank();
        if cutoff < Rat::from_integer(0) {
            return Ok(Vec::new());
        }
        let mut bounds = Vec::with_capacity(l);
        let mut box_size: u64 = 1;
        for i in 0..l {
            let g_ii = self.killing_gram()[(i, i)];
            // λ_i ≤ sqrt(cutoff / g_ii); compute exactly via integer sqrt of
            // floor(cutoff/g_ii) — floor then isqrt never undershoots the
            // true bound for integer λ_i.
            let q = cutoff / g_ii;
            let fl = q.floor();
            let fl_num = fl.to_integer();
            debug_assert!(fl_num >= 0);
            let b = isqrt_u64(fl_num as u64);
            bounds.push(b);
            box_size = box_size.saturating_mul(b + 1);
            if box_size > budget.saturating_mul(64) {
                return Err(Error::CutoffTooLarge {
                    requested: box_size,
                    budget,
                });
            }
        }
        let mut out: Vec<(Rat, Weight)> = Vec::new();
        let mut coords = alloc::vec![0i64; l];
        loop {
            let w = Weight::new(coords.clone());
            let p = self.casimir_unchecked(&w);
            if p <= cutoff {
                out.push((p, w));
                if out.len() as u64 > budget {
                    return Err(Error::CutoffTooLarge {
                        requested: out.len() as u64,
                        budget,
                    });
                }
            }
            // odometer over the box
            let mut k = 0;
            loop {
                if k == l {
                    out.sort();
                    return Ok(out.into_iter().map(|(p, w)| (w, p)).collect());
                }
                if (coords[k] as u64) < bounds[k] {
                    coords[k] += 1;
                    break;
                }
                coords[k] = 0;
                k += 1;
            }
        }
    }

    /// Casimir eigenvalue `p(λ) = ⟨λ, λ + 2ρ⟩` in the Killing normalization
    /// (adjoint eigenvalue exactly 1).  Exact rational.
    pub fn casimir(&self, lambda: &Weight) -> Result<Rat> {
        self.check_dominant(lambda)?;
        Ok(self.casimir_unchecked(lambda))
    }

    pub(crate) fn casimir_unchecked(&self, lambda: &Weight) -> Rat {
        let l = self.rank();
        let gk = self.killing_gram();
        let mut acc = rat_int(0);
        for i in 0..l {
            let li = rat_int(lambda.coords[i] as i128);
            for j in 0..l {
                // λ_i G_ij (λ_j + 2), folding in the 2ρ shift since ρ = (1,…,1)
                let lj2 = rat_int(lambda.coords[j] as i128 + 2);
                acc += li * gk[(i, j)] * lj2;
            }
        }
        acc
    }

    /// Weyl dimension of the irreducible representation with highest weight
    /// `λ`, as an exact integer.
    ///
    /// Each positive coroot `β∨` contributes `⟨λ+ρ, β∨⟩ / ⟨ρ, β∨⟩`; both
    /// pairings are positive integers in coroot coordinates.  The running
    /// product is kept as an exact big rational and must come out integral.
    pub fn dimension(&self, lambda: &Weight) -> Result<num_bigint::BigInt> {
        self.check_dominant(lambda)?;
        let mut num = num_bigint::BigInt::from(1);
        let mut den = num_bigint::BigInt::from(1);
        for cr in self.positive_coroots() {
            let mut a: i64 = 0;
            let mut b: i64 = 0;
            for (j, &c) in cr.iter().enumerate() {
                a += c * (lambda.coords[j] + 1);
                b += c;
            }
            num *= a;
            den *= b;
        }
        let r = &num % &den;
        debug_assert!(r == num_bigint::BigInt::from(0), "dimension not integral");
        let _ = r;
        Ok(num / den)
    }

    /// Weyl dimension as `f64`: the product is taken factor by factor so no
    /// intermediate overflows, at the cost of one rounding per positive root.
    pub fn dimension_f64(&self, lambda: &Weight) -> Result<f64> {
        self.check_dominant(lambda)?;
        Ok(self.dimension_f64_unchecked(lambda))
    }

    pub(crate) fn dimension_f64_unchecked(&self, lambda: &Weight) -> f64 {
        let mut acc = 1.0f64;
        for cr in self.positive_coroots() {
            let mut a: i64 = 0;
            let mut b: i64 = 0;
            for (j, &c) in cr.iter().enumerate() {
                a += c * (lambda.coords[j] + 1);
                b += c;
            }
            acc *= (a as f64) / (b as f64);
        }
        acc
    }

    /// Coordinates of a weight in the Killing-orthonormal basis of the
    /// Cartan algebra; the same frame in which conjugacy-class coordinates
    /// are given.
    #[must_use]
    pub fn orth_coords(&self, coords: &[i64]) -> Vec<f64> {
        let l = self.rank();
        let m = self.orth_matrix();
        (0..l)
            .map(|i| {
                let mut acc = 0.0;
                for j in 0..l {
                    acc += m[i * l + j] * (coords[j] as f64);
                }
                acc
            })
            .collect()
    }
}

/// Render a rational as `p/q` (or plain integer) for error text.
#[allow(dead_code)]
pub(crate) fn rat_display(r: Rat) -> alloc::string::String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
