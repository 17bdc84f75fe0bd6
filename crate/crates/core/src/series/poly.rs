//! Weyl-invariant polynomials in the orthonormal Cartan coordinates.
//!
//! Series terms evaluate `p` at the shifted weight `λ + ρ`, expressed in the
//! orthonormal frame, so the polynomial variables `x1..xl` carry the same
//! normalization as the heat-kernel Laplacian.  Invariance under the Weyl
//! group is a semantic requirement on the caller; [`InvariantPolynomial::check_invariance`]
//! verifies it numerically on random points.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::roots::RootSystem;
use crate::error::{Error, Result};
use crate::fx;
use crate::rat::{rat_to_f64, Rat};

/// Number of random sample points used by the invariance check.
const INVARIANCE_SAMPLES: usize = 20;
/// Relative tolerance for the invariance check.
const INVARIANCE_TOL: f64 = 1e-9;

/// A polynomial with rational coefficients in `rank` variables.
///
/// Keys are exponent vectors of length `rank`; the map representation keeps
/// iteration (and hence evaluation and display) order-independent of
/// insertion order, which the byte-determinism contract relies on.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantPolynomial {
    rank: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl InvariantPolynomial {
    /// The constant polynomial `1`.
    #[must_use]
    pub fn one(rank: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; rank], Rat::from_integer(1));
        InvariantPolynomial { rank, terms }
    }

    /// The constant polynomial `0`.
    #[must_use]
    pub fn zero(rank: usize) -> Self {
        InvariantPolynomial { rank, terms: BTreeMap::new() }
    }

    /// Build from `(exponents, coefficient)` pairs.  Exponent vectors shorter
    /// than `rank` are zero-padded; longer ones are rejected.
    pub fn from_terms(rank: usize, raw: &[(Vec<u32>, Rat)]) -> Result<Self> {
        let mut terms: BTreeMap<Vec<u32>, Rat> = BTreeMap::new();
        for (exps, coeff) in raw {
            if exps.len() > rank {
                return Err(Error::ArityMismatch { expected: rank, got: exps.len() });
            }
            let mut key = exps.clone();
            key.resize(rank, 0);
            let entry = terms.entry(key).or_insert_with(|| Rat::from_integer(0));
            *entry += *coeff;
        }
        terms.retain(|_, c| *c != Rat::from_integer(0));
        Ok(InvariantPolynomial { rank, terms })
    }

    /// Number of variables.
    #[inline]
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Total degree (0 for constants, including the zero polynomial).
    #[must_use]
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Sum of absolute coefficient values; used by tail bounds.
    #[must_use]
    pub fn coeff_norm(&self) -> f64 {
        let mut s = 0.0;
        for c in self.terms.values() {
            s += fx::abs(rat_to_f64(*c));
        }
        s
    }

    /// True when the polynomial is the constant `1`.
    #[must_use]
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&vec![0; self.rank])
                .is_some_and(|c| *c == Rat::from_integer(1))
    }

    /// Iterate `(exponents, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// Evaluate at a point given in orthonormal coordinates.
    #[must_use]
    pub fn eval(&self, x: &[f64]) -> f64 {
        debug_assert_eq!(x.len(), self.rank);
        let mut acc = 0.0;
        for (exps, coeff) in &self.terms {
            let mut term = rat_to_f64(*coeff);
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term *= fx::powi(x[i], e as i32);
                }
            }
            acc += term;
        }
        acc
    }

    /// Canonical text form in the CLI grammar: terms joined with ` + `, each
    /// `coeff * x1^a1 x2^a2 ...` (exponent-zero factors omitted, constants
    /// bare).
    #[must_use]
    pub fn to_text(&self) -> String {
        use core::fmt::Write;
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut out = String::new();
        for (k, (exps, coeff)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            let _ = write!(out, "{coeff}");
            let mut any = false;
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    out.push_str(if any { " " } else { " * " });
                    let _ = write!(out, "x{}^{}", i + 1, e);
                    any = true;
                }
            }
        }
        out
    }

    /// Verify Weyl invariance numerically.
    ///
    /// Samples [`INVARIANCE_SAMPLES`] fixed pseudorandom points, applies every
    /// Weyl element in the orthonormal frame, and compares values with
    /// relative tolerance [`INVARIANCE_TOL`].  With `warn_only` a violation is
    /// logged and tolerated; otherwise it is
    /// [`Error::NonInvariantPolynomial`].
    pub fn check_invariance(&self, rs: &RootSystem, warn_only: bool) -> Result<()> {
        if self.rank != rs.rank() {
            return Err(Error::ArityMismatch { expected: rs.rank(), got: self.rank });
        }
        let l = self.rank;
        let mut rng = ChaCha8Rng::seed_from_u64(0x0057_1e57_1e57_0001);
        let mut max_violation = 0.0f64;
        let minv = rs.orth_inv_matrix();
        let m = rs.orth_matrix();
        let mut fw = vec![0.0; l];
        let mut wfw = vec![0.0; l];
        let mut wx = vec![0.0; l];
        for _ in 0..INVARIANCE_SAMPLES {
            let x: Vec<f64> = (0..l).map(|_| 2.0 * rng.gen::<f64>() - 1.0).collect();
            let px = self.eval(&x);
            // Back to fundamental-weight coordinates, where Weyl elements are
            // integer matrices.
            for i in 0..l {
                let mut s = 0.0;
                for j in 0..l {
                    s += minv[i * l + j] * x[j];
                }
                fw[i] = s;
            }
            for w in &rs.weyl().elements {
                for i in 0..l {
                    let mut s = 0.0;
                    for j in 0..l {
                        s += (w.mat[i * l + j] as f64) * fw[j];
                    }
                    wfw[i] = s;
                }
                for i in 0..l {
                    let mut s = 0.0;
                    for j in 0..l {
                        s += m[i * l + j] * wfw[j];
                    }
                    wx[i] = s;
                }
                let pwx = self.eval(&wx);
                let scale = fx::abs(px).max(1.0);
                let viol = fx::abs(pwx - px) / scale;
                if viol > max_violation {
                    max_violation = viol;
                }
            }
        }
        if max_violation > INVARIANCE_TOL {
            if warn_only {
                log::warn!(
                    "polynomial is not Weyl-invariant (max relative violation {max_violation:.3e}); proceeding as requested"
                );
                return Ok(());
            }
            return Err(Error::NonInvariantPolynomial { max_violation });
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::{build_root_system, Family};

    fn rat(n: i128, d: i128) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn eval_and_degree() {
        // 3/2 x1^2 x2 - 7
        let p = InvariantPolynomial::from_terms(
            2,
            &[(vec![2, 1], rat(3, 2)), (vec![0, 0], rat(-7, 1))],
        )
        .unwrap();
        assert_eq!(p.degree(), 3);
        let v = p.eval(&[2.0, 3.0]);
        assert_eq!(v, 1.5 * 4.0 * 3.0 - 7.0);
    }

    #[test]
    fn even_powers_are_invariant_for_su2() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let p = InvariantPolynomial::from_terms(1, &[(vec![4], rat(1, 1))]).unwrap();
        p.check_invariance(&rs, false).unwrap();
    }

    #[test]
    fn odd_power_is_rejected_for_su2() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let p = InvariantPolynomial::from_terms(1, &[(vec![3], rat(1, 1))]).unwrap();
        match p.check_invariance(&rs, false) {
            Err(Error::NonInvariantPolynomial { max_violation }) => {
                assert!(max_violation > 1e-3);
            }
            other => panic!("expected invariance failure, got {other:?}"),
        }
    }

    #[test]
    fn norm_squared_is_invariant_for_a2() {
        let rs = build_root_system(Family::A, 2).unwrap();
        // x1^2 + x2^2 is the Killing norm in the orthonormal frame.
        let p = InvariantPolynomial::from_terms(
            2,
            &[(vec![2, 0], rat(1, 1)), (vec![0, 2], rat(1, 1))],
        )
        .unwrap();
        p.check_invariance(&rs, false).unwrap();
        // x1^2 alone is not invariant.
        let q = InvariantPolynomial::from_terms(2, &[(vec![2, 0], rat(1, 1))]).unwrap();
        assert!(q.check_invariance(&rs, false).is_err());
    }

    #[test]
    fn text_roundtrip_shape() {
        let p = InvariantPolynomial::from_terms(
            2,
            &[(vec![0, 0], rat(-1, 3)), (vec![2, 2], rat(5, 1))],
        )
        .unwrap();
        assert_eq!(p.to_text(), "-1/3 + 5 * x1^2 x2^2");
    }
}
