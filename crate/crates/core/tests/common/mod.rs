//! Independent oracles for the integration tests.
//!
//! Nothing here calls the library's character, dimension, or indicator
//! paths: multiplicities come from Freudenthal's recursion, torus integrals
//! from exact lattice-Fourier quadrature, and the Weyl determinant from an
//! explicit adjoint matrix.  Agreement between these and the library is the
//! point of the tests.

// Each integration target compiles this module separately and uses its own
// subset of the oracles.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_complex::Complex64;
use num_traits::Zero;

use flatmod_core::rat::{Rat, RatMatrix};
use flatmod_core::{RootSystem, Weight};

/// `<x, y>` under the library's exact Killing-normalized Gram matrix.
pub fn ip(gram: &RatMatrix, x: &[i64], y: &[i64]) -> Rat {
    let l = x.len();
    let mut acc = Rat::zero();
    for i in 0..l {
        for j in 0..l {
            acc += gram[(i, j)] * Rat::from_integer(i128::from(x[i]) * i128::from(y[j]));
        }
    }
    acc
}

/// Simple roots in fundamental-weight coordinates (columns of the Cartan
/// matrix).
pub fn simple_roots_fw(rs: &RootSystem) -> Vec<Vec<i64>> {
    let l = rs.rank();
    let cartan = rs.cartan();
    (0..l)
        .map(|i| {
            (0..l)
                .map(|r| {
                    let e = cartan[(r, i)];
                    assert!(e.is_integer());
                    *e.numer() as i64
                })
                .collect()
        })
        .collect()
}

/// Exact weight multiplicities of the irreducible with highest weight `lam`,
/// by Freudenthal's recursion.
pub fn freudenthal_multiplicities(rs: &RootSystem, lam: &[i64]) -> BTreeMap<Vec<i64>, i64> {
    let l = rs.rank();
    let gram = rs.killing_gram();
    let simples = simple_roots_fw(rs);
    let positives = rs.positive_roots_fw();
    let rho = vec![1i64; l];
    let add = |a: &[i64], b: &[i64], k: i64| -> Vec<i64> {
        a.iter().zip(b).map(|(&x, &y)| x + k * y).collect()
    };
    let lam_rho = add(lam, &rho, 1);
    let norm_top = ip(gram, &lam_rho, &lam_rho);

    let mut mult: BTreeMap<Vec<i64>, i64> = BTreeMap::new();
    mult.insert(lam.to_vec(), 1);
    let mut level: Vec<Vec<i64>> = vec![lam.to_vec()];
    while !level.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for mu in &level {
            for s in &simples {
                let cand = add(mu, s, -1);
                if mult.contains_key(&cand) || next.contains(&cand) {
                    continue;
                }
                next.push(cand);
            }
        }
        let mut kept: Vec<Vec<i64>> = Vec::new();
        for mu in next {
            let mu_rho = add(&mu, &rho, 1);
            let denom = norm_top.clone() - ip(gram, &mu_rho, &mu_rho);
            if denom.is_zero() {
                continue;
            }
            let mut num = Rat::zero();
            for alpha in positives {
                let mut k = 1i64;
                loop {
                    let up = add(&mu, alpha, k);
                    match mult.get(&up) {
                        Some(&m) if m > 0 => {
                            num += Rat::from_integer(i128::from(m)) * ip(gram, &up, alpha);
                        }
                        Some(_) => {}
                        None => break,
                    }
                    k += 1;
                }
            }
            let m = num * Rat::from_integer(2) / denom;
            assert!(m.is_integer(), "Freudenthal gave non-integer multiplicity");
            let m = *m.numer() as i64;
            assert!(m >= 0);
            if m > 0 {
                mult.insert(mu.clone(), m);
                kept.push(mu);
            }
        }
        level = kept;
    }
    mult
}

/// Dimension as the plain count of weights with multiplicity.
pub fn dimension_by_multiplicities(rs: &RootSystem, lam: &[i64]) -> i64 {
    freudenthal_multiplicities(rs, lam).values().sum()
}

/// Character on the torus from the multiplicity table: `mu(X) = 2 pi <mu, s>`
/// at the lattice point `j / m` (coroot-basis coordinates).
fn char_at_grid(
    mult: &BTreeMap<Vec<i64>, i64>,
    j: &[usize],
    m: usize,
    stretch: i64,
) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (mu, &mm) in mult {
        let mut freq = 0i64;
        for (k, &c) in mu.iter().enumerate() {
            freq += stretch * c * j[k] as i64;
        }
        let phase = 2.0 * std::f64::consts::PI * (freq.rem_euclid(m as i64) as f64) / m as f64;
        acc += (mm as f64) * Complex64::new(phase.cos(), phase.sin());
    }
    acc
}

/// `|delta(s)|^2 = prod_{alpha > 0} 4 sin^2(pi <alpha, s>)` at a grid point.
fn weyl_density_at_grid(rs: &RootSystem, j: &[usize], m: usize) -> f64 {
    let mut prod = 1.0;
    for alpha in rs.positive_roots_fw() {
        let mut freq = 0i64;
        for (k, &c) in alpha.iter().enumerate() {
            freq += c * j[k] as i64;
        }
        let s = (std::f64::consts::PI * freq as f64 / m as f64).sin();
        prod *= 4.0 * s * s;
    }
    prod
}

fn grid_points(rank: usize, m: usize) -> Vec<Vec<usize>> {
    let mut pts = vec![vec![]];
    for _ in 0..rank {
        let mut next = Vec::with_capacity(pts.len() * m);
        for p in &pts {
            for j in 0..m {
                let mut q = p.clone();
                q.push(j);
                next.push(q);
            }
        }
        pts = next;
    }
    pts
}

/// `int_G chi_lambda(g^2) dg` by Weyl integration over an exact Fourier grid:
/// the integrand's frequencies are lattice points, so any `m` beyond the
/// largest frequency makes the quadrature exact.
pub fn fs_by_quadrature(rs: &RootSystem, lam: &[i64], m: usize) -> f64 {
    let mult = freudenthal_multiplicities(rs, lam);
    let wsize = rs.weyl().elements.len() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in grid_points(rs.rank(), m) {
        let dens = weyl_density_at_grid(rs, &j, m);
        if dens == 0.0 {
            continue;
        }
        acc += dens * char_at_grid(&mult, &j, m, 2);
    }
    let total = acc / (wsize * (m as f64).powi(rs.rank() as i32));
    assert!(total.im.abs() < 1e-8, "quadrature imaginary part {}", total.im);
    total.re
}

/// `(1/|W|) int_T |delta|^2 chi_lambda conj(chi_mu)` on the same exact grid;
/// equals `delta_{lambda mu}` by orthogonality.
pub fn orthogonality_by_quadrature(rs: &RootSystem, lam: &[i64], mu: &[i64], m: usize) -> f64 {
    let ml = freudenthal_multiplicities(rs, lam);
    let mm = freudenthal_multiplicities(rs, mu);
    let wsize = rs.weyl().elements.len() as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in grid_points(rs.rank(), m) {
        let dens = weyl_density_at_grid(rs, &j, m);
        if dens == 0.0 {
            continue;
        }
        acc += dens * char_at_grid(&ml, &j, m, 1) * char_at_grid(&mm, &j, m, 1).conj();
    }
    let total = acc / (wsize * (m as f64).powi(rs.rank() as i32));
    assert!(total.im.abs() < 1e-8);
    total.re
}

/// All dominant weights in the coordinate box `[0, bound]^rank` with Casimir
/// at most `cutoff`, sorted the way the library promises to sort.
pub fn brute_force_weights(rs: &RootSystem, cutoff: Rat, bound: i64) -> Vec<(Vec<i64>, Rat)> {
    let l = rs.rank();
    let mut found: Vec<(Vec<i64>, Rat)> = Vec::new();
    let mut coords = vec![0i64; l];
    loop {
        let w = Weight::new(coords.clone());
        let p = rs.casimir(&w).unwrap();
        if p <= cutoff {
            found.push((coords.clone(), p));
        }
        // Odometer over the box.
        let mut k = 0;
        loop {
            if k == l {
                found.sort_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)));
                return found;
            }
            coords[k] += 1;
            if coords[k] <= bound {
                break;
            }
            coords[k] = 0;
            k += 1;
        }
    }
}

/// The pairing vector `y` with `mu(C) = mu . y` for a class whose frame
/// coordinates are `x` — transpose of the public frame matrix.
pub fn pairing_vector(rs: &RootSystem, x: &[f64]) -> Vec<f64> {
    let l = rs.rank();
    let m = rs.orth_matrix();
    (0..l)
        .map(|jj| {
            let mut s = 0.0;
            for (i, &xi) in x.iter().enumerate() {
                s += m[i * l + jj] * xi;
            }
            s
        })
        .collect()
}

/// Frame coordinates `x` realizing a prescribed pairing vector `y`
/// (`x = M^{-T} y`), for building classes with chosen torus angles.
pub fn frame_coords_for_pairing(rs: &RootSystem, y: &[f64]) -> Vec<f64> {
    let l = rs.rank();
    let inv = rs.orth_inv_matrix();
    (0..l)
        .map(|i| {
            let mut s = 0.0;
            for (jj, &yj) in y.iter().enumerate() {
                s += inv[jj * l + i] * yj;
            }
            s
        })
        .collect()
}

/// Coefficients of `det(xI - M)` for a real `n x n` matrix, by the
/// Faddeev-LeVerrier recursion; index `k` holds the coefficient of
/// `x^{n-k}` (so index 0 is 1).
pub fn char_poly(mat: &[Vec<f64>]) -> Vec<f64> {
    let n = mat.len();
    let matmul = |a: &Vec<Vec<f64>>, b: &Vec<Vec<f64>>| -> Vec<Vec<f64>> {
        let mut c = vec![vec![0.0; n]; n];
        for r in 0..n {
            for k in 0..n {
                let ark = a[r][k];
                for s in 0..n {
                    c[r][s] += ark * b[k][s];
                }
            }
        }
        c
    };
    let trace = |a: &Vec<Vec<f64>>| -> f64 { (0..n).map(|i| a[i][i]).sum() };

    let mut coeffs = vec![1.0];
    let mut nmat = vec![vec![0.0; n]; n];
    for k in 1..=n {
        // N_k = M N_{k-1} + c_{k-1} I
        let mut step = matmul(&mat.to_vec(), &nmat);
        let ck_prev = coeffs[k - 1];
        for i in 0..n {
            step[i][i] += ck_prev;
        }
        let mn = matmul(&mat.to_vec(), &step);
        coeffs.push(-trace(&mn) / k as f64);
        nmat = step;
    }
    coeffs
}

/// Evaluate `det(xI - M) / (x - 1)^rank` at `x = 1` by synthetic division,
/// checking that the divisions leave no remainder (the Cartan directions are
/// fixed by the adjoint action of a torus element).
pub fn reduced_adjoint_det_at_one(coeffs: &[f64], rank: usize) -> f64 {
    let mut cur = coeffs.to_vec();
    for _ in 0..rank {
        // Divide by (x - 1): b_0 = c_0, b_i = c_i + b_{i-1}; remainder last.
        let mut b = Vec::with_capacity(cur.len() - 1);
        let mut carry = 0.0;
        for (i, &c) in cur.iter().enumerate() {
            let v = c + carry;
            if i + 1 == cur.len() {
                assert!(v.abs() < 1e-6, "nonzero remainder {v} dividing by (x-1)");
            } else {
                b.push(v);
                carry = v;
            }
        }
        cur = b;
    }
    cur.iter().sum()
}
