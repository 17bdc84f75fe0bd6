//! Character series over the dominant weight lattice: truncated evaluation,
//! tail bounds, zero-temperature regularization, and assembled invariants.

pub mod engine;
pub mod extrapolate;
pub mod poly;
pub mod regularize;
pub mod tail;
pub mod topology;
pub mod volumes;

pub use engine::{
    moduli_series, moduli_series_with, EvalOptions, Extrapolated, SeriesResult,
    DEFAULT_WEIGHT_BUDGET,
};
pub use poly::InvariantPolynomial;
pub use regularize::{c_to_u_limit, regularized_limit, vanishing_check, VanishingReport};
pub use topology::{convergence_certificate, SurfaceTopology, ZeroTCertificate};
pub use volumes::{
    assembled_invariant, group_and_torus_volumes, group_volume_heat, moduli_volume, torus_volume,
    volume_flatness_deviation, AssembledInvariant,
};
