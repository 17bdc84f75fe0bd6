//! Heat-kernel integrals over 2-complexes.
//!
//! A complex is a bouquet of `one_cells` circles with a 2-cell glued along
//! each word in `two_cells`; the integrand at a tuple of holonomies is the
//! product of one truncated heat kernel per 2-cell, optionally twisted by the
//! real part of a character along an extra word.  Surface partition functions
//! are the one-2-cell special case, so this integrator doubles as an
//! independent check of the relator estimators — and, with several 2-cells,
//! covers the gluings behind 3-manifold torsion checks (e.g. a knot-exterior
//! relator with its boundary element held fixed).

use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::chars::HolonomySpec;
use crate::algebra::roots::RootSystem;
use crate::algebra::weights::Weight;
use crate::error::{Error, Result};
use crate::mc::estimate::{summarize, McEstimate};
use crate::mc::group::SpecialUnitary;
use crate::mc::heat::HeatKernel;
use crate::mc::matrix::CMat;
use crate::mc::rng::stream_rng;
use crate::mc::words::eval_word;
use crate::series::SurfaceTopology;

/// A finite 2-complex with optional fixed boundary holonomy and character
/// twist.
#[derive(Clone, Debug)]
pub struct LatticeComplex {
    /// Number of sampled edge holonomies; words address them as `1..=m`.
    pub one_cells: usize,
    /// Attaching words of the 2-cells.  The letter `m + 1` (if used) refers
    /// to the fixed boundary element.
    pub two_cells: Vec<Vec<i32>>,
    /// Conjugacy class of the fixed element behind letter `m + 1`.
    pub boundary: Option<HolonomySpec>,
    /// Character twist multiplying the integrand.
    pub twist: Option<LatticeTwist>,
}

/// `Re chi_weight(word)` as a multiplicative weight on the integrand.
#[derive(Clone, Debug)]
pub struct LatticeTwist {
    pub weight: Weight,
    pub word: Vec<i32>,
}

impl LatticeComplex {
    /// Complex with the given 2-cells and nothing else.
    #[must_use]
    pub fn plain(one_cells: usize, two_cells: Vec<Vec<i32>>) -> Self {
        LatticeComplex { one_cells, two_cells, boundary: None, twist: None }
    }

    /// The one-2-cell complex presenting a closed genus-`g` surface group.
    #[must_use]
    pub fn closed_surface(genus: u32) -> Self {
        let mut word = Vec::new();
        for i in 1..=genus as i32 {
            word.extend_from_slice(&[2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]);
        }
        Self::plain(2 * genus as usize, vec![word])
    }
}

/// Monte Carlo value of the complex's heat-kernel integral at time `t > 0`.
///
/// For a single 2-cell carrying a surface relator this estimates the same
/// series as [`crate::mc::mc_partition_estimate`] on the matching
/// [`SurfaceTopology`]; the generic form accepts any attaching words.
pub fn complex_lattice_integral(
    rs: &RootSystem,
    lat: &LatticeComplex,
    t: f64,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    assert!(t > 0.0, "Monte Carlo estimation needs t > 0");
    if samples == 0 {
        return Err(Error::ArityMismatch { expected: 1, got: 0 });
    }
    let group = SpecialUnitary::from_root_system(rs)?;
    let fixed: Vec<CMat> = match &lat.boundary {
        Some(spec) => vec![group.class_element(rs, spec)?],
        None => Vec::new(),
    };

    // Validate every word once against identity holonomies, so sampling can
    // assume well-formed letters.
    let idgens = vec![group.identity(); lat.one_cells];
    for w in &lat.two_cells {
        eval_word(group, w, &idgens, &fixed)?;
    }
    if let Some(tw) = &lat.twist {
        rs.dimension(&tw.weight)?; // rejects non-dominant twist weights
        eval_word(group, &tw.word, &idgens, &fixed)?;
    }

    let kernel = HeatKernel::auto(rs, t)?;
    let value_at = |idx: u64| -> f64 {
        let mut rng = stream_rng(seed, idx);
        let gens: Vec<_> = (0..lat.one_cells).map(|_| group.haar(&mut rng)).collect();
        let mut v = 1.0;
        for w in &lat.two_cells {
            let holo = eval_word(group, w, &gens, &fixed).expect("validated word");
            v *= kernel.eval(&holo);
        }
        if let Some(tw) = &lat.twist {
            let holo = eval_word(group, &tw.word, &gens, &fixed).expect("validated word");
            v *= group.character(&tw.weight.coords, &holo).re;
        }
        v
    };

    let values: Vec<f64>;
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        values = (0..samples).into_par_iter().map(value_at).collect();
    }
    #[cfg(not(feature = "parallel"))]
    {
        values = (0..samples).map(value_at).collect();
    }
    Ok(summarize(&values, seed))
}

/// The partition estimator's topology, when the complex is a single surface
/// relator — used by tests to pair the two integrators.
#[must_use]
pub fn surface_of_complex(lat: &LatticeComplex) -> Option<SurfaceTopology> {
    if lat.two_cells.len() != 1 || lat.boundary.is_some() || lat.twist.is_some() {
        return None;
    }
    let word = &lat.two_cells[0];
    let g = lat.one_cells / 2;
    if lat.one_cells % 2 != 0 || word.len() != 4 * g {
        return None;
    }
    let mut expect = Vec::new();
    for i in 1..=g as i32 {
        expect.extend_from_slice(&[2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]);
    }
    (word == &expect).then_some(SurfaceTopology::Closed { genus: g as u32, center: 0 })
}
