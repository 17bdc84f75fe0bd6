//! Weyl group enumeration.
//!
//! Elements act on fundamental-weight coordinates by integer matrices.  The
//! simple reflection `s_i` sends `λ ↦ λ − λ_i α_i`, so its matrix is the
//! identity with column `i` replaced by `e_i − (fw coords of α_i)`.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// One Weyl group element: a matrix on fw coordinates plus `det = ±1`.
#[derive(Debug, Clone)]
pub struct WeylElement {
    /// Row-major `l × l` integer matrix.
    pub mat: Vec<i64>,
    /// Determinant, `(−1)^{word length}`.
    pub sign: i8,
}

impl WeylElement {
    #[inline]
    #[must_use]
    pub fn apply(&self, l: usize, coords: &[i64]) -> Vec<i64> {
        let mut out = alloc::vec![0i64; l];
        self.apply_into(l, coords, &mut out);
        out
    }

    /// Like [`Self::apply`] but writing into a caller-provided buffer, so hot
    /// loops (one application per Weyl element per character) avoid
    /// reallocating.
    #[inline]
    pub fn apply_into(&self, l: usize, coords: &[i64], out: &mut [i64]) {
        for i in 0..l {
            let mut acc = 0i64;
            for j in 0..l {
                acc += self.mat[i * l + j] * coords[j];
            }
            out[i] = acc;
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub rank: usize,
    pub elements: Vec<WeylElement>,
    /// Index of the longest element (the one sending `ρ` to `−ρ`).
    pub longest: usize,
}

impl WeylGroup {
    #[must_use]
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

fn mat_mul(l: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = alloc::vec![0i64; l * l];
    for i in 0..l {
        for k in 0..l {
            let aik = a[i * l + k];
            if aik == 0 {
                continue;
            }
            for j in 0..l {
                out[i * l + j] += aik * b[k * l + j];
            }
        }
    }
    out
}

/// Breadth-first closure from the simple reflections.
///
/// `simple_root_fw[i]` are the fw coordinates of `α_i` (column `i` of the
/// Cartan matrix).  `expected_order` is the group order from the classical
/// formula; enumeration refuses budgets above `budget` before doing any
/// work, and the closure is asserted to reach exactly the expected count.
pub fn build_weyl_group(
    simple_root_fw: &[Vec<i64>],
    expected_order: u64,
    budget: u64,
) -> Result<WeylGroup> {
    let l = simple_root_fw.len();
    if expected_order > budget {
        return Err(Error::WeylGroupTooLarge {
            order: expected_order,
            budget,
        });
    }

    let mut gens: Vec<Vec<i64>> = Vec::with_capacity(l);
    for i in 0..l {
        let mut m = alloc::vec![0i64; l * l];
        for r in 0..l {
            m[r * l + r] = 1;
        }
        for r in 0..l {
            m[r * l + i] -= simple_root_fw[i][r];
        }
        gens.push(m);
    }

    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut elements: Vec<WeylElement> = Vec::new();
    let mut id = alloc::vec![0i64; l * l];
    for r in 0..l {
        id[r * l + r] = 1;
    }
    seen.insert(id.clone());
    elements.push(WeylElement { mat: id, sign: 1 });

    let mut frontier: Vec<usize> = alloc::vec![0];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for &idx in &frontier {
            let (mat, sign) = (elements[idx].mat.clone(), elements[idx].sign);
            for g in &gens {
                let prod = mat_mul(l, g, &mat);
                if seen.insert(prod.clone()) {
                    elements.push(WeylElement {
                        mat: prod,
                        sign: -sign,
                    });
                    next.push(elements.len() - 1);
                }
            }
        }
        frontier = next;
    }

    assert_eq!(
        elements.len() as u64,
        expected_order,
        "Weyl closure disagrees with the order formula"
    );

    // Longest element: w0 ρ = −ρ.
    let rho = alloc::vec![1i64; l];
    let neg_rho: Vec<i64> = alloc::vec![-1i64; l];
    let longest = elements
        .iter()
        .position(|w| w.apply(l, &rho) == neg_rho)
        .expect("no longest element found");

    Ok(WeylGroup {
        rank: l,
        elements,
        longest,
    })
}
