//! Surface topologies indexing the character series.
//!
//! Each variant fixes the dimension exponent on `d_λ` and the per-weight
//! multiplier of the series term:
//!
//! | topology                | multiplier                    | exponent    |
//! |-------------------------|-------------------------------|-------------|
//! | closed, genus `g`       | `Λ_λ(u)`                      | `2g − 2`    |
//! | `s` boundaries, genus `g` | `Π_j χ_λ(c_j)`              | `2g − 2 + s`|
//! | non-orientable, odd     | `f_λ Λ_λ(u)`                  | `2k − 2`    |
//! | non-orientable, even    | `f_λ Λ_λ(u)`                  | `2k`        |
//!
//! The odd/even split refers to the number of cross-caps: the odd case is the
//! connected sum of a genus-`k` orientable surface with one cross-cap, the
//! even case with two.

use alloc::vec::Vec;

use crate::algebra::chars::HolonomySpec;
use crate::algebra::roots::RootSystem;
use crate::error::{Error, Result};

/// A surface topology with its discrete holonomy data.
#[derive(Clone, Debug, PartialEq)]
pub enum SurfaceTopology {
    /// Closed orientable surface of genus `genus`; the obstruction class is
    /// the center element with index `center`.
    Closed { genus: u32, center: usize },
    /// Orientable surface of genus `genus` with one fixed conjugacy class per
    /// boundary component (at least one).
    Bounded { genus: u32, boundaries: Vec<HolonomySpec> },
    /// Non-orientable surface with an odd number of cross-caps: genus-`k`
    /// orientable part plus one cross-cap.
    NonOrientableOdd { k: u32, center: usize },
    /// Non-orientable surface with an even number of cross-caps: genus-`k`
    /// orientable part plus two cross-caps.
    NonOrientableEven { k: u32, center: usize },
}

impl SurfaceTopology {
    /// Exponent `E` with the series term carrying `d_λ^{-E}`.
    #[must_use]
    pub fn dimension_exponent(&self) -> i64 {
        match self {
            SurfaceTopology::Closed { genus, .. } => 2 * i64::from(*genus) - 2,
            SurfaceTopology::Bounded { genus, boundaries } => {
                2 * i64::from(*genus) - 2 + boundaries.len() as i64
            }
            SurfaceTopology::NonOrientableOdd { k, .. } => 2 * i64::from(*k) - 2,
            SurfaceTopology::NonOrientableEven { k, .. } => 2 * i64::from(*k),
        }
    }

    /// Whether series terms carry the Frobenius-Schur indicator.
    #[must_use]
    pub fn non_orientable(&self) -> bool {
        matches!(
            self,
            SurfaceTopology::NonOrientableOdd { .. } | SurfaceTopology::NonOrientableEven { .. }
        )
    }

    /// Center element index for the variants that carry one.
    #[must_use]
    pub fn center_index(&self) -> Option<usize> {
        match self {
            SurfaceTopology::Closed { center, .. }
            | SurfaceTopology::NonOrientableOdd { center, .. }
            | SurfaceTopology::NonOrientableEven { center, .. } => Some(*center),
            SurfaceTopology::Bounded { .. } => None,
        }
    }

    /// Boundary conjugacy classes (empty for closed and non-orientable
    /// surfaces).
    #[must_use]
    pub fn boundaries(&self) -> &[HolonomySpec] {
        match self {
            SurfaceTopology::Bounded { boundaries, .. } => boundaries,
            _ => &[],
        }
    }

    /// Number of boundary components.
    #[must_use]
    pub fn boundary_count(&self) -> usize {
        self.boundaries().len()
    }

    /// Number of central boundary classes; these inflate series terms by one
    /// power of `d_λ` each and matter for convergence certificates.
    #[must_use]
    pub fn central_boundary_count(&self) -> usize {
        self.boundaries().iter().filter(|b| b.is_central()).count()
    }

    /// Validate the topology against a root system: center indices in range,
    /// boundary coordinate vectors of the right length, at least one boundary
    /// for the bounded variant.
    pub fn validate(&self, rs: &RootSystem) -> Result<()> {
        if let Some(u) = self.center_index() {
            rs.check_center_index(u)?;
        }
        if let SurfaceTopology::Bounded { boundaries, .. } = self {
            if boundaries.is_empty() {
                return Err(Error::ArityMismatch { expected: 1, got: 0 });
            }
            for b in boundaries {
                rs.check_center_index(b.center)?;
                if b.coords.len() != rs.rank() {
                    return Err(Error::ArityMismatch { expected: rs.rank(), got: b.coords.len() });
                }
            }
        }
        Ok(())
    }

    /// Vanishing threshold for orientable surfaces: integrals of polynomial
    /// classes of degree above `|Δ⁺| · E` vanish.  `None` when no vanishing
    /// statement is made (non-orientable cases).
    #[must_use]
    pub fn vanishing_degree(&self, rs: &RootSystem) -> Option<i64> {
        match self {
            SurfaceTopology::Closed { .. } | SurfaceTopology::Bounded { .. } => {
                Some(rs.positive_roots_fw().len() as i64 * self.dimension_exponent())
            }
            _ => None,
        }
    }
}

/// Outcome of the zero-temperature convergence analysis for a series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ZeroTCertificate {
    /// Terms are absolutely summable: effective decay `m − deg p ≥ 2`.
    Absolute,
    /// Rank-one series with regular boundary classes and `m − deg p ≥ 1`:
    /// conditionally summable by oscillation.
    Oscillatory,
}

/// Certify convergence of the series at `t = 0`, or report the shortfall.
///
/// The effective decay exponent is `m = E − (# central boundaries)`: each
/// central class contributes `χ_λ = d_λ Λ_λ`, cancelling one power of the
/// denominator.  Absolute convergence needs `m − deg p ≥ 2` (the dominant
/// weight lattice has polynomial growth of order `rank ≤ d_λ` per axis);
/// rank-one series with at least one regular boundary oscillate and converge
/// for `m − deg p ≥ 1`.
pub fn convergence_certificate(
    rs: &RootSystem,
    topo: &SurfaceTopology,
    poly_degree: u32,
) -> Result<ZeroTCertificate> {
    let m = topo.dimension_exponent() - topo.central_boundary_count() as i64;
    let margin = m - i64::from(poly_degree);
    if margin >= 2 {
        return Ok(ZeroTCertificate::Absolute);
    }
    let regular_boundaries = topo.boundary_count() - topo.central_boundary_count();
    if rs.rank() == 1 && regular_boundaries > 0 && margin >= 1 {
        return Ok(ZeroTCertificate::Oscillatory);
    }
    let needed = if rs.rank() == 1 && regular_boundaries > 0 { 1 } else { 2 };
    Err(Error::DivergentAtZeroT { excess: needed - margin })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::roots::{build_root_system, Family};
    use alloc::vec;

    #[test]
    fn exponents_match_table() {
        let closed = SurfaceTopology::Closed { genus: 2, center: 0 };
        assert_eq!(closed.dimension_exponent(), 2);
        let bounded = SurfaceTopology::Bounded {
            genus: 1,
            boundaries: vec![HolonomySpec::regular(vec![0.5])],
        };
        assert_eq!(bounded.dimension_exponent(), 1);
        let odd = SurfaceTopology::NonOrientableOdd { k: 1, center: 0 };
        assert_eq!(odd.dimension_exponent(), 0);
        let even = SurfaceTopology::NonOrientableEven { k: 1, center: 0 };
        assert_eq!(even.dimension_exponent(), 2);
    }

    #[test]
    fn certificates() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let closed2 = SurfaceTopology::Closed { genus: 2, center: 0 };
        assert_eq!(
            convergence_certificate(&rs, &closed2, 0).unwrap(),
            ZeroTCertificate::Absolute
        );
        // Torus with one regular boundary: E = 1, oscillatory at degree 0.
        let sawtooth = SurfaceTopology::Bounded {
            genus: 1,
            boundaries: vec![HolonomySpec::regular(vec![1.0])],
        };
        assert_eq!(
            convergence_certificate(&rs, &sawtooth, 0).unwrap(),
            ZeroTCertificate::Oscillatory
        );
        // Closed torus diverges at t = 0.
        let torus = SurfaceTopology::Closed { genus: 1, center: 0 };
        match convergence_certificate(&rs, &torus, 0) {
            Err(Error::DivergentAtZeroT { excess }) => assert_eq!(excess, 2),
            other => panic!("unexpected: {other:?}"),
        }
        // A central boundary eats one power.
        let central_boundary = SurfaceTopology::Bounded {
            genus: 2,
            boundaries: vec![HolonomySpec::central(0, 1)],
        };
        assert_eq!(central_boundary.dimension_exponent(), 3);
        assert_eq!(
            convergence_certificate(&rs, &central_boundary, 0).unwrap(),
            ZeroTCertificate::Absolute
        );
    }
}
