//! Error type shared by the algebra, series, and Monte Carlo layers.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

/// Every failure mode the library reports.  Each variant carries enough
/// context to explain *which* input was rejected, not just that one was.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Family/rank combination outside the supported tables.
    UnsupportedGroup { family: char, rank: usize },
    /// The Weyl group order exceeds the enumeration budget.
    WeylGroupTooLarge { order: u64, budget: u64 },
    /// A highest weight had a negative coordinate.
    NonDominantWeight { coords: String },
    /// A conjugacy class too close to the singular set for stable division
    /// by the Weyl denominator.
    NearSingularElement { weyl_det_abs: f64, tol: f64 },
    /// Center element index out of range for the group.
    InvalidCenterElement { index: usize, order: usize },
    /// A Casimir cutoff that would enumerate more weights than the budget
    /// allows.
    CutoffTooLarge { requested: u64, budget: u64 },
    /// The series has no convergence certificate at `t = 0`.
    DivergentAtZeroT { excess: i64 },
    /// The polynomial insertion is not Weyl-invariant.
    NonInvariantPolynomial { max_violation: f64 },
    /// The `t -> 0` fit residual exceeded its stability threshold.
    ExtrapolationUnstable { residual: f64, threshold: f64 },
    /// A heat-kernel truncation cannot reach the requested accuracy.
    TruncationInsufficient { cutoff: u64, needed: u64 },
    /// A relator word or 2-cell referenced more generators than were sampled.
    ArityMismatch { expected: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnsupportedGroup { family, rank } => {
                write!(f, "unsupported group {family}{rank}")
            }
            Error::WeylGroupTooLarge { order, budget } => {
                write!(f, "Weyl group order {order} exceeds budget {budget}")
            }
            Error::NonDominantWeight { coords } => {
                write!(f, "weight {coords} is not dominant")
            }
            Error::NearSingularElement { weyl_det_abs, tol } => write!(
                f,
                "holonomy too close to singular set: |Weyl denominator| = {weyl_det_abs:.3e} below tolerance {tol:.1e}"
            ),
            Error::InvalidCenterElement { index, order } => {
                write!(f, "center element {index} out of range (order {order})")
            }
            Error::CutoffTooLarge { requested, budget } => write!(
                f,
                "cutoff would enumerate ~{requested} weights, budget is {budget}"
            ),
            Error::DivergentAtZeroT { excess } => write!(
                f,
                "series has no t=0 convergence certificate (degree excess {excess})"
            ),
            Error::NonInvariantPolynomial { max_violation } => write!(
                f,
                "polynomial is not Weyl-invariant (violation {max_violation:.3e})"
            ),
            Error::ExtrapolationUnstable { residual, threshold } => write!(
                f,
                "extrapolation residual {residual:.3e} exceeds threshold {threshold:.3e}"
            ),
            Error::TruncationInsufficient { cutoff, needed } => write!(
                f,
                "heat-kernel cutoff {cutoff} insufficient, need at least {needed}"
            ),
            Error::ArityMismatch { expected, got } => {
                write!(f, "word references generator {got} but only {expected} were sampled")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
