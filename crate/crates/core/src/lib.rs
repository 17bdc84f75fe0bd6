//! Exact root-system arithmetic, heat-kernel character series, and a small
//! Monte Carlo lattice integrator for cross-checking them.
//!
//! The crate is split along the data it owns:
//!
//! * [`algebra`] — compact simple root systems in the fundamental-weight
//!   basis: Weyl groups, centers, weight enumeration, characters.
//! * [`series`] — the character sums attached to a surface topology, their
//!   regularized `t -> 0` limits, tail certificates, and volume prefactors.
//! * [`mc`] — Haar sampling on SU(2)/SU(3) and heat-kernel estimators over
//!   relator words and 2-complexes.
//!
//! Everything outside [`mc`] is deterministic; [`mc`] is deterministic for a
//! fixed seed regardless of worker count.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod error;
pub mod fx;
pub mod mc;
pub mod rat;
pub mod series;
pub mod sum;

pub use algebra::roots::{build_root_system, Family, RootSystem};
pub use algebra::weights::Weight;
pub use error::{Error, Result};
