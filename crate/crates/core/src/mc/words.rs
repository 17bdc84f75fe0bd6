//! Relator words in sampled generators and fixed class representatives.
//!
//! A word is a sequence of nonzero signed letters.  Letters `1..=m` index the
//! `m` Haar-sampled generators, letters `m+1..` index fixed elements (boundary
//! classes, center obstructions), and a negative letter means the inverse.
//! This is the same convention the lattice 2-cells use, so one evaluator
//! serves both the surface estimators and arbitrary 2-complexes.

use alloc::vec::Vec;

use crate::algebra::roots::RootSystem;
use crate::error::{Error, Result};
use crate::mc::group::SpecialUnitary;
use crate::mc::matrix::CMat;
use crate::series::SurfaceTopology;

/// Multiply out a signed word.  `gens` are letters `1..=gens.len()`, `fixed`
/// continue the numbering.
pub fn eval_word(
    group: SpecialUnitary,
    word: &[i32],
    gens: &[CMat],
    fixed: &[CMat],
) -> Result<CMat> {
    let total = gens.len() + fixed.len();
    let mut acc = group.identity();
    for &letter in word {
        if letter == 0 {
            return Err(Error::ArityMismatch { expected: total, got: 0 });
        }
        let idx = letter.unsigned_abs() as usize;
        if idx > total {
            return Err(Error::ArityMismatch { expected: total, got: idx });
        }
        let m = if idx <= gens.len() { &gens[idx - 1] } else { &fixed[idx - 1 - gens.len()] };
        acc = if letter > 0 { acc.mul(m) } else { acc.mul(&m.adjoint()) };
    }
    Ok(acc)
}

/// Sampling recipe for one surface topology: how many generators to draw,
/// the relator to multiply out, which fixed elements it references, and
/// whether the kernel carries the extra dimension weight.
pub(crate) struct WordPlan {
    pub gens: usize,
    pub word: Vec<i32>,
    pub fixed: Vec<CMat>,
    pub weighted: bool,
}

fn push_commutators(word: &mut Vec<i32>, pairs: u32) {
    for i in 1..=pairs as i32 {
        word.extend_from_slice(&[2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]);
    }
}

/// Build the estimator word for `topo`.
///
/// * closed, genus `g`: `prod [x_i, y_i] * u`, plain kernel;
/// * `s` boundaries: `prod [x_i, y_i] * prod_{j>=2} z_j c_j z_j^{-1} * c_1`,
///   plain kernel;
/// * odd non-orientable: `prod [x_i, y_i] * eps^2 * u`, `d^2` kernel;
/// * even non-orientable: `prod [x_i, y_i] * z eps z^{-1} eps * u`, plain
///   kernel.
pub(crate) fn surface_word_plan(
    rs: &RootSystem,
    group: SpecialUnitary,
    topo: &SurfaceTopology,
) -> Result<WordPlan> {
    let mut word = Vec::new();
    let mut fixed = Vec::new();
    let mut weighted = false;
    let gens;
    match topo {
        SurfaceTopology::Closed { genus, center } => {
            gens = 2 * *genus as usize;
            push_commutators(&mut word, *genus);
            if *center != 0 {
                fixed.push(group.center_matrix(rs, *center)?);
                word.push(gens as i32 + 1);
            }
        }
        SurfaceTopology::Bounded { genus, boundaries } => {
            let s = boundaries.len();
            gens = 2 * *genus as usize + (s - 1);
            push_commutators(&mut word, *genus);
            for (j, spec) in boundaries.iter().enumerate().skip(1) {
                // z_j c_j z_j^{-1} with z_j the (2g + j)-th generator.
                let z = (2 * *genus as usize + j) as i32;
                let c = (gens + j) as i32;
                fixed.push(group.class_element(rs, spec)?);
                word.extend_from_slice(&[z, c, -z]);
            }
            fixed.push(group.class_element(rs, &boundaries[0])?);
            word.push((gens + s) as i32);
        }
        SurfaceTopology::NonOrientableOdd { k, center } => {
            gens = 2 * *k as usize + 1;
            weighted = true;
            push_commutators(&mut word, *k);
            let eps = gens as i32;
            word.extend_from_slice(&[eps, eps]);
            if *center != 0 {
                fixed.push(group.center_matrix(rs, *center)?);
                word.push(gens as i32 + 1);
            }
        }
        SurfaceTopology::NonOrientableEven { k, center } => {
            gens = 2 * *k as usize + 2;
            push_commutators(&mut word, *k);
            let z = gens as i32 - 1;
            let eps = gens as i32;
            word.extend_from_slice(&[z, eps, -z, eps]);
            if *center != 0 {
                fixed.push(group.center_matrix(rs, *center)?);
                word.push(gens as i32 + 1);
            }
        }
    }
    Ok(WordPlan { gens, word, fixed, weighted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::chars::HolonomySpec;
    use crate::algebra::roots::{build_root_system, Family};
    use crate::mc::rng::stream_rng;
    use alloc::vec;

    #[test]
    fn commutator_word_of_commuting_elements_is_trivial() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let group = SpecialUnitary::from_root_system(&rs).unwrap();
        let a = group.class_element(&rs, &HolonomySpec::regular(vec![0.3])).unwrap();
        let b = group.class_element(&rs, &HolonomySpec::regular(vec![1.1])).unwrap();
        let w = eval_word(group, &[1, 2, -1, -2], &[a, b], &[]).unwrap();
        assert!(w.max_abs_diff(&group.identity()) < 1e-14);
    }

    #[test]
    fn inverse_letters_invert() {
        let rs = build_root_system(Family::A, 2).unwrap();
        let group = SpecialUnitary::from_root_system(&rs).unwrap();
        let mut rng = stream_rng(5, 0);
        let g = group.haar(&mut rng);
        let w = eval_word(group, &[1, -1], &[g], &[]).unwrap();
        assert!(w.max_abs_diff(&group.identity()) < 1e-13);
    }

    #[test]
    fn out_of_range_letters_are_reported() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let group = SpecialUnitary::from_root_system(&rs).unwrap();
        let g = group.identity();
        let err = eval_word(group, &[1, 3], &[g, g], &[]).unwrap_err();
        assert_eq!(err, Error::ArityMismatch { expected: 2, got: 3 });
        let err = eval_word(group, &[0], &[g], &[]).unwrap_err();
        assert_eq!(err, Error::ArityMismatch { expected: 1, got: 0 });
    }

    #[test]
    fn surface_plans_have_expected_shapes() {
        let rs = build_root_system(Family::A, 1).unwrap();
        let group = SpecialUnitary::from_root_system(&rs).unwrap();

        let closed = surface_word_plan(
            &rs,
            group,
            &SurfaceTopology::Closed { genus: 2, center: 0 },
        )
        .unwrap();
        assert_eq!(closed.gens, 4);
        assert_eq!(closed.word, vec![1, 2, -1, -2, 3, 4, -3, -4]);
        assert!(closed.fixed.is_empty());
        assert!(!closed.weighted);

        let odd = surface_word_plan(
            &rs,
            group,
            &SurfaceTopology::NonOrientableOdd { k: 1, center: 1 },
        )
        .unwrap();
        assert_eq!(odd.gens, 3);
        assert_eq!(odd.word, vec![1, 2, -1, -2, 3, 3, 4]);
        assert_eq!(odd.fixed.len(), 1);
        assert!(odd.weighted);

        let bounded = surface_word_plan(
            &rs,
            group,
            &SurfaceTopology::Bounded {
                genus: 1,
                boundaries: vec![
                    HolonomySpec::regular(vec![0.4]),
                    HolonomySpec::regular(vec![0.9]),
                ],
            },
        )
        .unwrap();
        // Generators: x, y, z_2; fixed: c_2 (letter 4), c_1 (letter 5).
        assert_eq!(bounded.gens, 3);
        assert_eq!(bounded.word, vec![1, 2, -1, -2, 3, 4, -3, 5]);
        assert_eq!(bounded.fixed.len(), 2);
    }
}
