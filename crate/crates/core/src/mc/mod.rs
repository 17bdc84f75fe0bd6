//! Monte Carlo heat-kernel lattice integrators.
//!
//! This layer cross-checks the character series against honest group
//! integrals: Haar-sample the generators of a surface (or 2-complex) word,
//! evaluate a truncated heat kernel at the relator, and average.  For t > 0
//! the expectation of each estimator is, exactly, one of the series the
//! [`crate::series`] engine sums — the comparison is a two-sided test with no
//! shared code path.
//!
//! One intentional asymmetry: the even non-orientable word `z eps z^{-1} eps`
//! integrates to the *squared* Frobenius-Schur indicator, so its estimator
//! matches the even series only when no quaternionic representation
//! contributes below the cutoff.  The odd case avoids this by weighting the
//! kernel with an extra dimension factor, which makes the cross-cap estimator
//! exact for every group wired up here.

pub mod estimate;
pub mod group;
pub mod heat;
pub mod lattice;
pub mod matrix;
pub mod rng;
pub mod words;

pub use estimate::{mc_partition_estimate, McEstimate};
pub use group::SpecialUnitary;
pub use heat::{heat_kernel_eval, required_cutoff, HeatKernel, MC_TRUNCATION_EPS};
pub use lattice::{complex_lattice_integral, surface_of_complex, LatticeComplex, LatticeTwist};
pub use matrix::CMat;
pub use rng::stream_rng;
pub use words::eval_word;
