//! Characters of irreducible representations evaluated on maximal-torus
//! elements, via the Weyl character formula.
//!
//! A conjugacy class of a holonomy is specified by a [`HolonomySpec`]: a
//! center element `u` together with Cartan-subalgebra coordinates for the
//! regular part, written in the orthonormal frame fixed by the root system.
//! The actual group element is `u * exp(C)`.  Characters factor as
//! `chi_lambda(u * exp C) = Lambda_lambda(u) * chi_lambda(exp C)`, with
//! `Lambda_lambda(u)` the (unit-modulus) central character.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::algebra::roots::RootSystem;
use crate::algebra::weights::Weight;
use crate::error::{Error, Result};
use crate::fx;
use crate::rat::{rat_to_f64, Rat};

/// Tolerance below which the Weyl denominator counts as singular.
pub const SINGULAR_TOL: f64 = 1e-8;

/// A conjugacy class: center element index times `exp` of a Cartan element.
///
/// `coords` are coordinates in the orthonormal frame of the Cartan
/// subalgebra (the same frame in which polynomial variables live).  The
/// class is *central* exactly when every coordinate is literally `0.0`;
/// central classes take the exact central-character path rather than the
/// Weyl quotient.
#[derive(Clone, Debug, PartialEq)]
pub struct HolonomySpec {
    /// Index into the center element list of the root system.
    pub center: usize,
    /// Orthonormal-frame coordinates of the Cartan-subalgebra part.
    pub coords: Vec<f64>,
}

impl HolonomySpec {
    /// The identity class.
    #[must_use]
    pub fn identity(rank: usize) -> Self {
        HolonomySpec { center: 0, coords: vec![0.0; rank] }
    }

    /// A central class given by a center element index.
    #[must_use]
    pub fn central(center: usize, rank: usize) -> Self {
        HolonomySpec { center, coords: vec![0.0; rank] }
    }

    /// A regular class at the identity component.
    #[must_use]
    pub fn regular(coords: Vec<f64>) -> Self {
        HolonomySpec { center: 0, coords }
    }

    /// Whether the class is central (all coordinates exactly zero).
    #[must_use]
    pub fn is_central(&self) -> bool {
        self.coords.iter().all(|&c| c == 0.0)
    }

    /// Euclidean norm of the Cartan coordinates.
    #[must_use]
    pub fn coord_norm(&self) -> f64 {
        let mut s = 0.0;
        for &c in &self.coords {
            s += c * c;
        }
        fx::sqrt(s)
    }
}

/// `e^{2 pi i r}` with exact values at the quarter points.
///
/// Center element coordinates are rationals with small denominators; for the
/// common orders (2 and 4) the phases are exactly representable and we want
/// `Lambda` to be *exactly* `+-1` or `+-i` so that real series stay real to
/// the last bit.
fn unit_phase(r: Rat) -> Complex64 {
    let half = Rat::new(1, 2);
    let quarter = Rat::new(1, 4);
    let three_quarter = Rat::new(3, 4);
    if r == Rat::from_integer(0) {
        Complex64::new(1.0, 0.0)
    } else if r == half {
        Complex64::new(-1.0, 0.0)
    } else if r == quarter {
        Complex64::new(0.0, 1.0)
    } else if r == three_quarter {
        Complex64::new(0.0, -1.0)
    } else {
        let x = 2.0 * core::f64::consts::PI * rat_to_f64(r);
        Complex64::new(fx::cos(x), fx::sin(x))
    }
}

impl RootSystem {
    /// Validate a center element index.
    pub fn check_center_index(&self, index: usize) -> Result<()> {
        let order = self.center_order();
        if index >= order {
            return Err(Error::InvalidCenterElement { index, order });
        }
        Ok(())
    }

    /// Central character `Lambda_lambda(u)` of the center element `u`.
    ///
    /// For `u` with fundamental-coweight coordinates `c` this is
    /// `e^{2 pi i <lambda, c>}`, a root of unity of order dividing the
    /// center order; it is multiplicative in `u` and in `lambda` additively.
    pub fn central_character(&self, lambda: &Weight, center: usize) -> Result<Complex64> {
        self.check_center_index(center)?;
        let coords = &self.center().elements[center];
        let mut r = Rat::from_integer(0);
        for (j, &cj) in coords.iter().enumerate() {
            r += cj * Rat::from_integer(i128::from(lambda.coords[j]));
        }
        // Reduce mod 1 so the quarter-point fast path triggers.
        r -= r.floor();
        Ok(unit_phase(r))
    }

    /// `prod_{alpha > 0} |2 sin(alpha(C) / 2)|`: absolute value of the Weyl
    /// denominator at the class `spec`.  Zero for central classes.
    #[must_use]
    pub fn weyl_determinant_abs(&self, spec: &HolonomySpec) -> f64 {
        if spec.is_central() {
            return 0.0;
        }
        let mut prod = 1.0;
        for alpha in self.pos_roots_orth() {
            let mut a = 0.0;
            for (k, &x) in spec.coords.iter().enumerate() {
                a += alpha[k] * x;
            }
            prod *= fx::abs(2.0 * fx::sin(0.5 * a));
        }
        prod
    }

    /// Character `chi_lambda` at the class `spec`, by the Weyl formula.
    ///
    /// Central classes return `d_lambda * Lambda_lambda(u)` exactly.  For
    /// regular classes the numerator is summed over the full Weyl group with
    /// pairwise summation (deterministic across runs), and the result is
    /// divided by the complex Weyl denominator.  Returns
    /// [`Error::NearSingularElement`] when the denominator modulus falls
    /// below [`SINGULAR_TOL`] for a non-central class: the quotient is then
    /// numerically unreliable and the caller should perturb the class.
    pub fn character(&self, lambda: &Weight, spec: &HolonomySpec) -> Result<Complex64> {
        self.check_dominant(lambda)?;
        let central = self.central_character(lambda, spec.center)?;
        if spec.is_central() {
            let d = self.dimension_f64_unchecked(lambda);
            return Ok(central * d);
        }
        if spec.coords.len() != self.rank() {
            return Err(Error::ArityMismatch { expected: self.rank(), got: spec.coords.len() });
        }

        // Pull the frame change out of the Weyl loop: for a weight mu in
        // fundamental-weight coordinates, mu(C) = mu . (M^T x) where x are
        // the orthonormal coordinates of C and M is the frame matrix.
        let y = self.orth_transpose_apply(&spec.coords);

        let lam_rho: Vec<i64> = lambda.coords.iter().map(|&c| c + 1).collect();
        let weyl = self.weyl();
        let mut terms: Vec<Complex64> = Vec::with_capacity(weyl.elements.len());
        let mut orbit = vec![0i64; self.rank()];
        for w in &weyl.elements {
            w.apply_into(self.rank(), &lam_rho, &mut orbit);
            let mut phase = 0.0;
            for (j, &m) in orbit.iter().enumerate() {
                phase += (m as f64) * y[j];
            }
            let e = Complex64::new(fx::cos(phase), fx::sin(phase));
            terms.push(if w.sign > 0 { e } else { -e });
        }
        let numerator = crate::sum::pairwise_complex(&terms);

        // Denominator: prod_{alpha>0} (e^{i a/2} - e^{-i a/2})
        //            = i^{#pos} * prod 2 sin(a/2).
        let mut dprod = 1.0;
        for alpha in self.pos_roots_orth() {
            let mut a = 0.0;
            for (k, &x) in spec.coords.iter().enumerate() {
                a += alpha[k] * x;
            }
            dprod *= 2.0 * fx::sin(0.5 * a);
        }
        let npos = self.positive_roots_fw().len();
        let denominator = match npos % 4 {
            0 => Complex64::new(dprod, 0.0),
            1 => Complex64::new(0.0, dprod),
            2 => Complex64::new(-dprod, 0.0),
            _ => Complex64::new(0.0, -dprod),
        };
        let dabs = fx::abs(dprod);
        if dabs < SINGULAR_TOL {
            return Err(Error::NearSingularElement { weyl_det_abs: dabs, tol: SINGULAR_TOL });
        }
        Ok(central * (numerator / denominator))
    }

    /// Frobenius-Schur indicator of the irreducible with highest weight
    /// `lambda`: `+1` real, `-1` quaternionic, `0` complex.
    ///
    /// The representation is self-dual iff `-w_0 lambda = lambda`; in that
    /// case the indicator is `(-1)^{<lambda, 2 rho-check>}`.
    pub fn frobenius_schur(&self, lambda: &Weight) -> Result<i8> {
        self.check_dominant(lambda)?;
        Ok(self.frobenius_schur_unchecked(lambda))
    }

    /// [`Self::frobenius_schur`] without the dominance check.
    #[must_use]
    pub fn frobenius_schur_unchecked(&self, lambda: &Weight) -> i8 {
        let weyl = self.weyl();
        let w0 = &weyl.elements[weyl.longest];
        let image = w0.apply(self.rank(), &lambda.coords);
        let self_dual = image.iter().zip(&lambda.coords).all(|(&a, &b)| a == -b);
        if !self_dual {
            return 0;
        }
        let mut pairing = 0i64;
        for (j, &c) in self.two_rho_coroot().iter().enumerate() {
            pairing += c * lambda.coords[j];
        }
        if pairing % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Apply `M^T` (transpose of the orthonormal frame matrix) to a vector
    /// of orthonormal coordinates, producing the pairing vector `y` with
    /// `mu(C) = sum_j mu_j y_j` for fundamental-weight coordinates `mu`.
    #[must_use]
    pub(crate) fn orth_transpose_apply(&self, x: &[f64]) -> Vec<f64> {
        let l = self.rank();
        let m = self.orth_matrix();
        let mut y = vec![0.0; l];
        for j in 0..l {
            let mut s = 0.0;
            for (i, &xi) in x.iter().enumerate() {
                s += m[i * l + j] * xi;
            }
            y[j] = s;
        }
        y
    }

    /// Parse a center-element label: `e` (identity), `-I` (the order-two
    /// element, when present), or a bare element index.
    pub fn parse_center_label(&self, label: &str) -> Result<usize> {
        let trimmed = label.trim();
        if trimmed == "e" || trimmed == "0" {
            return Ok(0);
        }
        if trimmed == "-I" {
            // The order-two element: coordinates r with 2r integral, r != 0.
            let two = Rat::from_integer(2);
            for (idx, elem) in self.center().elements.iter().enumerate() {
                if idx == 0 {
                    continue;
                }
                let order_two = elem.iter().all(|&r| (two * r).is_integer());
                if order_two {
                    return Ok(idx);
                }
            }
            return Err(Error::InvalidCenterElement { index: usize::MAX, order: self.center_order() });
        }
        match trimmed.parse::<usize>() {
            Ok(idx) => {
                self.check_center_index(idx)?;
                Ok(idx)
            }
            Err(_) => Err(Error::NonDominantWeight { coords: trimmed.to_string() }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::{build_root_system, Family};

    #[test]
    fn su2_character_matches_closed_form() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let nu = rs.orth_matrix()[0]; // 1 / (2 sqrt 2)
        for m in 0..6i64 {
            let lambda = Weight::new(vec![m]);
            for &x in &[0.3, 1.1, 2.7] {
                let spec = HolonomySpec::regular(vec![x]);
                let got = rs.character(&lambda, &spec).unwrap();
                let theta = nu * x;
                let want = fx::sin((m as f64 + 1.0) * theta) / fx::sin(theta);
                assert!(fx::abs(got.re - want) < 1e-10, "m={m} x={x}: {got} vs {want}");
                assert!(fx::abs(got.im) < 1e-10);
            }
        }
    }

    #[test]
    fn central_class_gives_dimension_times_phase() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let lambda = Weight::new(vec![3]);
        let spec = HolonomySpec::central(1, 1);
        let got = rs.character(&lambda, &spec).unwrap();
        // Lambda_3(-I) = e^{2 pi i * 3/2} = -1; dimension 4.
        assert_eq!(got, Complex64::new(-4.0, 0.0));
    }

    #[test]
    fn near_singular_is_rejected() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let lambda = Weight::new(vec![2]);
        let spec = HolonomySpec::regular(vec![1e-12]);
        match rs.character(&lambda, &spec) {
            Err(Error::NearSingularElement { .. }) => {}
            other => panic!("expected near-singular error, got {other:?}"),
        }
    }

    #[test]
    fn frobenius_schur_su2_alternates() {
        let rs = build_root_system(Family::A, 1).unwrap();
        for m in 0..6i64 {
            let f = rs.frobenius_schur(&Weight::new(vec![m])).unwrap();
            let want = if m % 2 == 0 { 1 } else { -1 };
            assert_eq!(i64::from(f), want, "m={m}");
        }
    }

    #[test]
    fn frobenius_schur_su3_complex_pairs() {
        let rs = build_root_system(Family::A, 2).unwrap();
        assert_eq!(rs.frobenius_schur(&Weight::new(vec![1, 0])).unwrap(), 0);
        assert_eq!(rs.frobenius_schur(&Weight::new(vec![0, 1])).unwrap(), 0);
        assert_eq!(rs.frobenius_schur(&Weight::new(vec![1, 1])).unwrap(), 1);
    }

    #[test]
    fn frobenius_schur_b2_spinor_is_quaternionic() {
        let rs = build_root_system(Family::B, 2).unwrap();
        assert_eq!(rs.frobenius_schur(&Weight::new(vec![0, 1])).unwrap(), -1);
        assert_eq!(rs.frobenius_schur(&Weight::new(vec![1, 0])).unwrap(), 1);
    }

    #[test]
    fn central_character_is_multiplicative_in_weight() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let a = Weight::new(vec![1, 0]);
        let b = Weight::new(vec![0, 2]);
        let ab = Weight::new(vec![1, 2]);
        for u in 0..rs.center_order() {
            let pa = rs.central_character(&a, u).unwrap();
            let pb = rs.central_character(&b, u).unwrap();
            let pab = rs.central_character(&ab, u).unwrap();
            assert!((pa * pb - pab).norm() < 1e-12);
        }
    }
}
