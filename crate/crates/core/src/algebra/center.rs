//! The center of the simply connected compact group.
//!
//! A central element is `exp(2πi x)` for a fundamental coweight `x`, taken
//! modulo the coroot lattice; we store `x` in coroot-basis coordinates with
//! every entry reduced to `[0, 1)`.  The generators are the fractional parts
//! of the rows of `A⁻¹` (equivalently columns of `(Aᵀ)⁻¹`), and the group
//! they generate under addition mod 1 is exactly the center.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use num_traits::Zero;

use crate::rat::{Rat, RatMatrix};

#[derive(Debug, Clone)]
pub struct CenterData {
    /// Sorted coweight coordinate vectors; index 0 is the identity.
    pub elements: Vec<Vec<Rat>>,
}

impl CenterData {
    #[must_use]
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

fn frac(x: Rat) -> Rat {
    x - x.floor()
}

/// Enumerate the center from the inverse Cartan matrix.
#[must_use]
pub fn build_center(cartan_inv: &RatMatrix) -> CenterData {
    let l = cartan_inv.rows;
    let mut gens: Vec<Vec<Rat>> = Vec::new();
    for j in 0..l {
        // Coweight ω_j∨ in coroot coordinates: row j of A⁻¹.
        let row: Vec<Rat> = (0..l).map(|k| frac(cartan_inv[(j, k)])).collect();
        gens.push(row);
    }

    let zero: Vec<Rat> = alloc::vec![Rat::zero(); l];
    let mut seen: BTreeSet<Vec<Rat>> = BTreeSet::new();
    seen.insert(zero.clone());
    let mut frontier = alloc::vec![zero];
    while let Some(cur) = frontier.pop() {
        for g in &gens {
            let next: Vec<Rat> = (0..l).map(|k| frac(cur[k] + g[k])).collect();
            if seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }

    let elements: Vec<Vec<Rat>> = seen.into_iter().collect();
    debug_assert!(elements[0].iter().all(Rat::is_zero));
    CenterData { elements }
}
