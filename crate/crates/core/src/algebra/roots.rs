//! Root system tables and construction.
//!
//! Supported compact simple groups: A₁–A₇, B₂–B₄, C₂–C₄, D₄, G₂.  The
//! Cartan matrix convention is `A_ij = ⟨α_j, α_i∨⟩`, so the fw coordinates
//! of the simple root `α_j` are the `j`-th *column* of `A`.  Root lengths
//! are normalized so long roots have squared length 2 (`d_i = (α_i,α_i)/2`),
//! and the Killing-normalized inner product divides that form by twice the
//! dual Coxeter number, which makes the adjoint Casimir eigenvalue exactly 1.
//!
//! Construction cross-checks itself with exact identities before returning:
//! the closure count of positive roots against the dimension table, the
//! strange formula `‖ρ‖² = dim g / 24`, `p(θ) = 1`, and
//! `h∨ = 1 + ⟨ρ, θ∨⟩`.  A table typo cannot survive these.

use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fx;
use crate::rat::{rat, rat_int, Rat, RatMatrix};

use super::center::{build_center, CenterData};
use super::weyl::{build_weyl_group, WeylGroup};

/// Budget on Weyl group enumeration.
const WEYL_ORDER_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

impl Family {
    #[must_use]
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
        }
    }

    pub fn from_letter(c: char) -> Option<Family> {
        match c.to_ascii_uppercase() {
            'A' => Some(Family::A),
            'B' => Some(Family::B),
            'C' => Some(Family::C),
            'D' => Some(Family::D),
            'G' => Some(Family::G),
            _ => None,
        }
    }
}

struct GroupTable {
    cartan: Vec<i64>,
    /// Half squared lengths of the simple roots, long = 1.
    d: Vec<Rat>,
    h_vee: i64,
    dim_g: usize,
    weyl_order: u64,
    /// Highest root in fw coordinates.
    theta: Vec<i64>,
}

fn group_table(family: Family, rank: usize) -> Option<GroupTable> {
    let l = rank;
    let tridiag = |n: usize| -> Vec<i64> {
        let mut a = alloc::vec![0i64; n * n];
        for i in 0..n {
            a[i * n + i] = 2;
            if i + 1 < n {
                a[i * n + i + 1] = -1;
                a[(i + 1) * n + i] = -1;
            }
        }
        a
    };
    let factorial = |n: u64| -> u64 { (1..=n).product() };
    match (family, rank) {
        (Family::A, 1..=7) => {
            let mut theta = alloc::vec![0i64; l];
            if l == 1 {
                theta[0] = 2;
            } else {
                theta[0] = 1;
                theta[l - 1] = 1;
            }
            Some(GroupTable {
                cartan: tridiag(l),
                d: alloc::vec![Rat::one(); l],
                h_vee: (l + 1) as i64,
                dim_g: (l + 1) * (l + 1) - 1,
                weyl_order: factorial(l as u64 + 1),
                theta,
            })
        }
        (Family::B, 2..=4) => {
            // Last simple root short: the off-diagonal pair becomes (−1, −2).
            let mut a = tridiag(l);
            a[(l - 1) * l + (l - 2)] = -2;
            let mut d = alloc::vec![Rat::one(); l];
            d[l - 1] = rat(1, 2);
            let mut theta = alloc::vec![0i64; l];
            if l == 2 {
                theta[1] = 2;
            } else {
                theta[1] = 1;
            }
            Some(GroupTable {
                cartan: a,
                d,
                h_vee: 2 * l as i64 - 1,
                dim_g: l * (2 * l + 1),
                weyl_order: (1u64 << l) * factorial(l as u64),
                theta,
            })
        }
        (Family::C, 2..=4) => {
            // Last simple root long, the others short.
            let mut a = tridiag(l);
            a[(l - 2) * l + (l - 1)] = -2;
            let mut d = alloc::vec![rat(1, 2); l];
            d[l - 1] = Rat::one();
            let mut theta = alloc::vec![0i64; l];
            theta[0] = 2;
            Some(GroupTable {
                cartan: a,
                d,
                h_vee: l as i64 + 1,
                dim_g: l * (2 * l + 1),
                weyl_order: (1u64 << l) * factorial(l as u64),
                theta,
            })
        }
        (Family::D, 4) => {
            // Fork at node 2 (0-based node 1): neighbors 1, 3, 4.
            let a = alloc::vec![
                2, -1, 0, 0, //
                -1, 2, -1, -1, //
                0, -1, 2, 0, //
                0, -1, 0, 2,
            ];
            Some(GroupTable {
                cartan: a,
                d: alloc::vec![Rat::one(); 4],
                h_vee: 6,
                dim_g: 28,
                weyl_order: 192,
                theta: alloc::vec![0, 1, 0, 0],
            })
        }
        (Family::G, 2) => Some(GroupTable {
            cartan: alloc::vec![2, -1, -3, 2],
            d: alloc::vec![Rat::one(), rat(1, 3)],
            h_vee: 4,
            dim_g: 14,
            weyl_order: 12,
            theta: alloc::vec![1, 0],
        }),
        _ => None,
    }
}

/// A fully constructed compact simple root system with its Weyl group,
/// center, and orthonormal torus frame.
#[derive(Debug, Clone)]
pub struct RootSystem {
    family: Family,
    rank: usize,
    dim_g: usize,
    h_vee: i64,
    cartan: RatMatrix,
    d: Vec<Rat>,
    fw_gram: RatMatrix,
    killing_gram: RatMatrix,
    rho_norm2: Rat,
    theta: Vec<i64>,
    positive_roots_fw: Vec<Vec<i64>>,
    positive_coroots: Vec<Vec<i64>>,
    two_rho_coroot: Vec<i64>,
    weyl: WeylGroup,
    center: CenterData,
    orth: Vec<f64>,
    orth_inv: Vec<f64>,
    pos_roots_orth: Vec<Vec<f64>>,
}

impl RootSystem {
    #[inline]
    #[must_use]
    pub fn family(&self) -> Family {
        self.family
    }

    #[inline]
    #[must_use]
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the group.
    #[inline]
    #[must_use]
    pub fn dim_group(&self) -> usize {
        self.dim_g
    }

    #[inline]
    #[must_use]
    pub fn dual_coxeter(&self) -> i64 {
        self.h_vee
    }

    #[inline]
    #[must_use]
    pub fn cartan(&self) -> &RatMatrix {
        &self.cartan
    }

    /// Gram matrix of the fundamental weights in the long-root-2 form.
    #[inline]
    #[must_use]
    pub fn fw_gram(&self) -> &RatMatrix {
        &self.fw_gram
    }

    /// Gram matrix of the fundamental weights in the Killing normalization.
    #[inline]
    #[must_use]
    pub fn killing_gram(&self) -> &RatMatrix {
        &self.killing_gram
    }

    /// `⟨ρ, ρ⟩` in the Killing normalization (equals `dim g / 24`).
    #[inline]
    #[must_use]
    pub fn rho_norm2(&self) -> Rat {
        self.rho_norm2
    }

    /// Highest root in fw coordinates.
    #[inline]
    #[must_use]
    pub fn theta(&self) -> &[i64] {
        &self.theta
    }

    /// Positive roots, fw coordinates.
    #[inline]
    #[must_use]
    pub fn positive_roots_fw(&self) -> &[Vec<i64>] {
        &self.positive_roots_fw
    }

    /// Positive coroots in coroot-basis (integer) coordinates; pairing a
    /// weight against one is a plain dot product with its fw coordinates.
    #[inline]
    #[must_use]
    pub fn positive_coroots(&self) -> &[Vec<i64>] {
        &self.positive_coroots
    }

    /// `Σ_{α>0} α∨` in coroot coordinates.
    #[inline]
    #[must_use]
    pub fn two_rho_coroot(&self) -> &[i64] {
        &self.two_rho_coroot
    }

    #[inline]
    #[must_use]
    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    #[inline]
    #[must_use]
    pub fn center(&self) -> &CenterData {
        &self.center
    }

    #[inline]
    #[must_use]
    pub fn center_order(&self) -> usize {
        self.center.order()
    }

    /// Row-major `l × l` map from fw coordinates to the Killing-orthonormal
    /// frame of the Cartan algebra.
    #[inline]
    #[must_use]
    pub fn orth_matrix(&self) -> &[f64] {
        &self.orth
    }

    /// Inverse of [`orth_matrix`](Self::orth_matrix).
    #[inline]
    #[must_use]
    pub fn orth_inv_matrix(&self) -> &[f64] {
        &self.orth_inv
    }

    /// Positive roots mapped to the orthonormal frame (cached for character
    /// denominators).
    #[inline]
    #[must_use]
    pub(crate) fn pos_roots_orth(&self) -> &[Vec<f64>] {
        &self.pos_roots_orth
    }
}

/// Positive-root closure in simple-root coordinates via root strings.
fn positive_roots_simple(cartan: &RatMatrix) -> Vec<Vec<i64>> {
    let l = cartan.rows;
    let mut set: alloc::collections::BTreeSet<Vec<i64>> = alloc::collections::BTreeSet::new();
    for i in 0..l {
        let mut e = alloc::vec![0i64; l];
        e[i] = 1;
        set.insert(e);
    }
    loop {
        let snapshot: Vec<Vec<i64>> = set.iter().cloned().collect();
        let before = set.len();
        for c in &snapshot {
            for i in 0..l {
                if c.iter().sum::<i64>() == 1 && c[i] == 1 {
                    // The string through α_i along α_i holds no further
                    // positive roots (2α_i is never a root).
                    continue;
                }
                // q = longest run of down-steps staying inside the set.
                let mut q = 0i64;
                loop {
                    let mut down = c.clone();
                    down[i] -= q + 1;
                    if down[i] < 0 || !set.contains(&down) {
                        break;
                    }
                    q += 1;
                }
                // ⟨β, α_i∨⟩ is the i-th fw coordinate, i.e. (A c)_i.
                let mut pairing = 0i64;
                for (j, &cj) in c.iter().enumerate() {
                    pairing += cartan[(i, j)].to_integer() as i64 * cj;
                }
                let p = q - pairing;
                if p >= 1 {
                    let mut up = c.clone();
                    up[i] += 1;
                    set.insert(up);
                }
            }
        }
        if set.len() == before {
            return set.into_iter().collect();
        }
    }
}

/// Build the full structure for a supported family and rank.
pub fn build_root_system(family: Family, rank: usize) -> Result<RootSystem> {
    let table = group_table(family, rank).ok_or(Error::UnsupportedGroup {
        family: family.letter(),
        rank,
    })?;
    let l = rank;
    let cartan = RatMatrix::from_i64(l, l, &table.cartan);
    let cartan_inv = cartan.inverse();

    // Simple roots in fw coordinates: columns of the Cartan matrix.
    let simple_fw: Vec<Vec<i64>> = (0..l)
        .map(|j| (0..l).map(|i| cartan[(i, j)].to_integer() as i64).collect())
        .collect();

    // Fundamental-weight Gram matrix F_ij = d_i (A⁻¹)_ij, then the Killing
    // normalization G = F / (2 h∨).
    let mut fw_gram = RatMatrix::zeros(l, l);
    for i in 0..l {
        for j in 0..l {
            fw_gram[(i, j)] = table.d[i] * cartan_inv[(i, j)];
        }
    }
    assert_eq!(fw_gram, fw_gram.transpose(), "Gram matrix must be symmetric");
    let mut killing_gram = RatMatrix::zeros(l, l);
    let scale = rat(1, 2 * table.h_vee as i128);
    for i in 0..l {
        for j in 0..l {
            killing_gram[(i, j)] = fw_gram[(i, j)] * scale;
        }
    }

    // Positive roots and coroots.
    let pos_simple = positive_roots_simple(&cartan);
    assert_eq!(
        2 * pos_simple.len() + l,
        table.dim_g,
        "positive root count disagrees with dim g"
    );
    let mut positive_roots_fw = Vec::with_capacity(pos_simple.len());
    let mut positive_coroots = Vec::with_capacity(pos_simple.len());
    for c in &pos_simple {
        let fw: Vec<i64> = (0..l)
            .map(|i| {
                (0..l)
                    .map(|j| cartan[(i, j)].to_integer() as i64 * c[j])
                    .sum()
            })
            .collect();
        // d_β = cᵀ S c / 2 with S_ij = d_i A_ij.
        let mut norm = Rat::zero();
        for i in 0..l {
            for j in 0..l {
                norm += rat_int(c[i] as i128) * table.d[i] * cartan[(i, j)] * rat_int(c[j] as i128);
            }
        }
        let d_beta = norm / rat_int(2);
        let coroot: Vec<i64> = (0..l)
            .map(|j| {
                let cj = rat_int(c[j] as i128) * table.d[j] / d_beta;
                assert!(cj.is_integer(), "coroot coordinates must be integral");
                cj.to_integer() as i64
            })
            .collect();
        positive_roots_fw.push(fw);
        positive_coroots.push(coroot);
    }
    let mut two_rho_coroot = alloc::vec![0i64; l];
    for cr in &positive_coroots {
        for (j, &c) in cr.iter().enumerate() {
            two_rho_coroot[j] += c;
        }
    }

    // Orthonormal frame: exact LDLᵀ of the Killing Gram, then M = √D·Lᵀ.
    let (lmat, diag) = killing_gram.ldl();
    let mut orth = alloc::vec![0.0f64; l * l];
    for i in 0..l {
        let s = fx::sqrt(crate::rat::rat_to_f64(diag[i]));
        for j in 0..l {
            orth[i * l + j] = s * crate::rat::rat_to_f64(lmat[(j, i)]);
        }
    }
    // Back-substitution inverse of the upper-triangular map.
    let mut orth_inv = alloc::vec![0.0f64; l * l];
    for col in 0..l {
        for i in (0..l).rev() {
            let mut acc = if i == col { 1.0 } else { 0.0 };
            for j in (i + 1)..l {
                acc -= orth[i * l + j] * orth_inv[j * l + col];
            }
            orth_inv[i * l + col] = acc / orth[i * l + i];
        }
    }

    let weyl = build_weyl_group(&simple_fw, table.weyl_order, WEYL_ORDER_BUDGET)?;
    let center = build_center(&cartan_inv);

    let pos_roots_orth: Vec<Vec<f64>> = positive_roots_fw
        .iter()
        .map(|fw| {
            (0..l)
                .map(|i| {
                    (0..l)
                        .map(|j| orth[i * l + j] * fw[j] as f64)
                        .sum::<f64>()
                })
                .collect()
        })
        .collect();

    // ρᵀ G ρ, for the strange-formula check and heat-trace prefactors.
    let rho_rat: Vec<Rat> = alloc::vec![Rat::one(); l];
    let g_rho = killing_gram.mul_vec(&rho_rat);
    let rho_norm2 = g_rho.iter().fold(Rat::zero(), |a, &b| a + b);

    let rs = RootSystem {
        family,
        rank,
        dim_g: table.dim_g,
        h_vee: table.h_vee,
        cartan,
        d: table.d,
        fw_gram,
        killing_gram,
        rho_norm2,
        theta: table.theta,
        positive_roots_fw,
        positive_coroots,
        two_rho_coroot,
        weyl,
        center,
        orth,
        orth_inv,
        pos_roots_orth,
    };

    // Exact construction-time identities.
    assert_eq!(
        rs.rho_norm2,
        rat(rs.dim_g as i128, 24),
        "strange formula ‖ρ‖² = dim g / 24 failed"
    );
    let theta_w = super::weights::Weight::new(rs.theta.clone());
    assert_eq!(
        rs.casimir_unchecked(&theta_w),
        Rat::one(),
        "adjoint Casimir eigenvalue must be exactly 1"
    );
    // h∨ = 1 + ⟨ρ, θ∨⟩: θ is the last root in height order, so find its
    // coroot by matching fw coordinates.
    let theta_coroot = rs
        .positive_roots_fw
        .iter()
        .position(|fw| fw == &rs.theta)
        .map(|idx| &rs.positive_coroots[idx])
        .expect("highest root must appear in the closure");
    let height_theta_vee: i64 = theta_coroot.iter().sum();
    assert_eq!(rs.h_vee, 1 + height_theta_vee, "dual Coxeter number check");

    Ok(rs)
}

impl RootSystem {
    /// Half squared lengths of the simple roots (long root = 1).
    #[inline]
    #[must_use]
    pub fn simple_root_halves(&self) -> &[Rat] {
        &self.d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_supported_groups_build() {
        let cases = [
            (Family::A, 1),
            (Family::A, 2),
            (Family::A, 3),
            (Family::A, 4),
            (Family::A, 5),
            (Family::A, 6),
            (Family::A, 7),
            (Family::B, 2),
            (Family::B, 3),
            (Family::B, 4),
            (Family::C, 2),
            (Family::C, 3),
            (Family::C, 4),
            (Family::D, 4),
            (Family::G, 2),
        ];
        for (f, r) in cases {
            let rs = build_root_system(f, r).unwrap();
            assert_eq!(rs.rank(), r);
        }
    }

    #[test]
    fn unsupported_is_reported() {
        assert!(matches!(
            build_root_system(Family::D, 5),
            Err(Error::UnsupportedGroup { family: 'D', rank: 5 })
        ));
        assert!(matches!(
            build_root_system(Family::A, 8),
            Err(Error::UnsupportedGroup { .. })
        ));
    }

    #[test]
    fn a1_structure() {
        let rs = build_root_system(Family::A, 1).unwrap();
        assert_eq!(rs.positive_roots_fw(), &[alloc::vec![2i64]]);
        assert_eq!(rs.positive_coroots(), &[alloc::vec![1i64]]);
        assert_eq!(rs.rho_norm2(), rat(1, 8));
        assert_eq!(rs.weyl().order(), 2);
        assert_eq!(rs.center_order(), 2);
        // Orthonormal scalar: ‖ω‖ = 1/(2√2).
        let m = rs.orth_matrix();
        assert!(fx::abs(m[0] - 1.0 / (2.0 * fx::sqrt(2.0))) < 1e-15);
    }

    #[test]
    fn g2_has_six_positive_roots_and_trivial_center() {
        let rs = build_root_system(Family::G, 2).unwrap();
        assert_eq!(rs.positive_roots_fw().len(), 6);
        assert_eq!(rs.center_order(), 1);
        assert_eq!(rs.weyl().order(), 12);
    }

    #[test]
    fn d4_center_is_klein_four() {
        let rs = build_root_system(Family::D, 4).unwrap();
        assert_eq!(rs.center_order(), 4);
        assert_eq!(rs.weyl().order(), 192);
        assert_eq!(rs.positive_roots_fw().len(), 12);
    }
}
