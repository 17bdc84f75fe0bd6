//! Property tests for the algebraic and summation layers.

mod common;

use proptest::prelude::*;

use flatmod_core::algebra::chars::HolonomySpec;
use flatmod_core::algebra::roots::{build_root_system, Family};
use flatmod_core::mc::{eval_word, stream_rng, SpecialUnitary};
use flatmod_core::rat::Rat;
use flatmod_core::sum::pairwise;
use flatmod_core::{RootSystem, Weight};

fn a2() -> RootSystem {
    build_root_system(Family::A, 2).unwrap()
}

/// `-w0 λ` from the longest element: the dual weight.
fn dual_weight(rs: &RootSystem, coords: &[i64]) -> Vec<i64> {
    let l = rs.rank();
    let w0 = &rs.weyl().elements[rs.weyl().longest];
    let mut out = vec![0i64; l];
    for j in 0..l {
        for i in 0..l {
            out[j] -= w0.mat[j * l + i] * coords[i];
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn enumeration_matches_brute_force(num in 1i128..40, den in 1i128..4) {
        let cutoff = Rat::new(num, den);
        for sys in [build_root_system(Family::A, 1).unwrap(), a2()] {
            let got = sys.enumerate_dominant_weights(cutoff, 1_000_000).unwrap();
            let want = common::brute_force_weights(&sys, cutoff, 60);
            prop_assert_eq!(got.len(), want.len());
            for ((w, p), (bw, bp)) in got.iter().zip(&want) {
                prop_assert_eq!(&w.coords, bw);
                prop_assert_eq!(p, bp);
            }
        }
    }

    #[test]
    fn characters_are_weyl_invariant_everywhere(
        y0 in 0.15f64..1.1,
        y1 in 0.15f64..1.1,
        a in 0i64..4,
        b in 0i64..4,
        widx in 0usize..48,
    ) {
        for sys in [a2(), build_root_system(Family::B, 2).unwrap()] {
            let l = sys.rank();
            let y = [y0, y1];
            let lam = Weight::new(vec![a, b]);
            let base = HolonomySpec::regular(common::frame_coords_for_pairing(&sys, &y));
            let Ok(reference) = sys.character(&lam, &base) else {
                // Near a Weyl wall: not this property's business.
                return Ok(());
            };
            let w = &sys.weyl().elements[widx % sys.weyl().elements.len()];
            let mut ty = vec![0.0; l];
            for j in 0..l {
                for i in 0..l {
                    ty[j] += w.mat[i * l + j] as f64 * y[i];
                }
            }
            let moved = HolonomySpec::regular(common::frame_coords_for_pairing(&sys, &ty));
            let Ok(v) = sys.character(&lam, &moved) else { return Ok(()); };
            prop_assert!(
                (v - reference).norm() < 1e-9 * (1.0 + reference.norm()),
                "{:?} w{}: {} vs {}", lam.coords, widx, v, reference
            );
        }
    }

    #[test]
    fn frobenius_schur_detects_self_duality(a in 0i64..5, b in 0i64..5, c in 0i64..3) {
        for sys in [
            a2(),
            build_root_system(Family::B, 2).unwrap(),
            build_root_system(Family::A, 3).unwrap(),
        ] {
            let coords: Vec<i64> = [a, b, c][..sys.rank()].to_vec();
            let f = sys.frobenius_schur(&Weight::new(coords.clone())).unwrap();
            prop_assert!((-1..=1).contains(&f));
            let self_dual = dual_weight(&sys, &coords) == coords;
            prop_assert_eq!(f != 0, self_dual, "{:?}: fs {}", coords, f);
        }
    }

    #[test]
    fn casimir_is_positive_definite(a in 0i64..50, b in 0i64..50) {
        for sys in [a2(), build_root_system(Family::G, 2).unwrap()] {
            let p = sys.casimir(&Weight::new(vec![a, b])).unwrap();
            if a == 0 && b == 0 {
                prop_assert_eq!(p, Rat::from_integer(0));
            } else {
                prop_assert!(p > Rat::from_integer(0));
            }
        }
    }

    #[test]
    fn central_characters_are_center_roots_of_unity(
        a in 0i64..6,
        b in 0i64..6,
        idx in 0usize..3,
    ) {
        let sys = a2();
        let z = sys.central_character(&Weight::new(vec![a, b]), idx).unwrap();
        prop_assert!((z.norm() - 1.0).abs() < 1e-14);
        let mut pow = num_complex::Complex64::new(1.0, 0.0);
        for _ in 0..sys.center_order() {
            pow *= z;
        }
        prop_assert!((pow - num_complex::Complex64::new(1.0, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn pairwise_sum_is_split_consistent(xs in prop::collection::vec(-1e6f64..1e6, 1..300), split in 0usize..300) {
        let k = split % xs.len();
        let whole = pairwise(&xs);
        let parts = pairwise(&xs[..k]) + pairwise(&xs[k..]);
        let scale: f64 = xs.iter().map(|v| v.abs()).sum::<f64>().max(1.0);
        prop_assert!((whole - parts).abs() < 1e-12 * scale, "{whole} vs {parts}");
    }

    #[test]
    fn word_evaluation_matches_a_naive_fold(
        letters in prop::collection::vec(-3i32..=3, 1..12),
        seed in 0u64..1000,
    ) {
        let word: Vec<i32> = letters.into_iter().filter(|&v| v != 0).collect();
        let rs = build_root_system(Family::A, 1).unwrap();
        let group = SpecialUnitary::from_root_system(&rs).unwrap();
        let mut rng = stream_rng(seed, 0);
        let gens: Vec<_> = (0..3).map(|_| group.haar(&mut rng)).collect();
        let got = eval_word(group, &word, &gens, &[]).unwrap();
        let mut acc = group.identity();
        for &s in &word {
            let g = &gens[(s.unsigned_abs() as usize) - 1];
            let factor = if s > 0 { *g } else { g.adjoint() };
            acc = acc.mul(&factor);
        }
        prop_assert!(got.max_abs_diff(&acc) < 1e-12);
    }
}
