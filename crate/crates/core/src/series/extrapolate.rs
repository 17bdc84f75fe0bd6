//! Extrapolation helpers: Neville tables to the origin and small least
//! squares fits in the temperature parameter.

use alloc::vec::Vec;

use crate::fx;

/// Neville polynomial extrapolation of `(xs, ys)` to `x = 0`.
///
/// Nodes must be pairwise distinct.  With data smooth in `x` and nodes in
/// geometric progression this is classical Richardson acceleration.
#[must_use]
pub fn neville_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    debug_assert_eq!(xs.len(), ys.len());
    debug_assert!(!xs.is_empty());
    let n = xs.len();
    let mut tab: Vec<f64> = ys.to_vec();
    for level in 1..n {
        for i in 0..n - level {
            let xi = xs[i];
            let xj = xs[i + level];
            tab[i] = (xj * tab[i] - xi * tab[i + 1]) / (xj - xi);
        }
    }
    tab[0]
}

/// Least-squares fit of `v ≈ a0 + a1 t + a2 t²`.
///
/// Returns `(a0, a1, a2, rms_residual)`.  Requires at least three points;
/// with exactly three the fit interpolates and the residual is zero.
#[must_use]
pub fn quadratic_fit(ts: &[f64], vs: &[f64]) -> (f64, f64, f64, f64) {
    debug_assert_eq!(ts.len(), vs.len());
    debug_assert!(ts.len() >= 3);
    // Normal equations for the Vandermonde design [1, t, t^2].
    let mut s = [0.0f64; 5];
    let mut b = [0.0f64; 3];
    for (&t, &v) in ts.iter().zip(vs) {
        let t2 = t * t;
        s[0] += 1.0;
        s[1] += t;
        s[2] += t2;
        s[3] += t * t2;
        s[4] += t2 * t2;
        b[0] += v;
        b[1] += v * t;
        b[2] += v * t2;
    }
    let mut m = [
        [s[0], s[1], s[2], b[0]],
        [s[1], s[2], s[3], b[1]],
        [s[2], s[3], s[4], b[2]],
    ];
    // Gaussian elimination with partial pivoting on the 3x4 tableau.
    for col in 0..3 {
        let mut piv = col;
        for r in col + 1..3 {
            if fx::abs(m[r][col]) > fx::abs(m[piv][col]) {
                piv = r;
            }
        }
        m.swap(col, piv);
        let diag = m[col][col];
        for r in 0..3 {
            if r != col && m[r][col] != 0.0 {
                let f = m[r][col] / diag;
                for c in col..4 {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    let a0 = m[0][3] / m[0][0];
    let a1 = m[1][3] / m[1][1];
    let a2 = m[2][3] / m[2][2];
    let mut sq = 0.0;
    for (&t, &v) in ts.iter().zip(vs) {
        let r = v - (a0 + a1 * t + a2 * t * t);
        sq += r * r;
    }
    let rms = fx::sqrt(sq / ts.len() as f64);
    (a0, a1, a2, rms)
}
