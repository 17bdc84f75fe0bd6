//! Compact simple Lie algebra data in the fundamental-weight basis.
//!
//! Weights are integer coordinate vectors against the fundamental weights
//! `ω_1, …, ω_l`; the `i`-th coordinate of a weight `λ` is the pairing
//! `⟨λ, α_i∨⟩` with the `i`-th simple coroot.  In this basis every structural
//! operation — Weyl reflections, root strings, center phases, Casimir
//! values — is exact integer or rational arithmetic; floats appear only in
//! the orthonormal embedding used for character phases.

pub mod center;
pub mod chars;
pub mod roots;
pub mod weights;
pub mod weyl;
