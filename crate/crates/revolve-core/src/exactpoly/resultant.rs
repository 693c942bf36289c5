//! Resultant of two univariate polynomials with multivariate coefficients,
//! as the determinant of their Sylvester matrix.
//!
//! The determinant is computed by fraction-free Bareiss elimination: every
//! division in the pivot updates is exact over the coefficient ring, so
//! intermediate entries stay polynomial instead of exploding into
//! fractions.

use super::mpoly::MPoly;
use super::rat::rat_int;

/// `Res_t(a, b)` where `a`, `b` are given by their coefficient lists in
/// `t`, lowest degree first, over a common variable set. Both must be
/// nonzero in `t` (possibly constant).
pub fn resultant(a: &[MPoly], b: &[MPoly]) -> MPoly {
    let a = trim(a);
    let b = trim(b);
    assert!(!a.is_empty() && !b.is_empty(), "resultant of zero polynomial");
    let vars = a[0].vars();
    let m = a.len() - 1;
    let n = b.len() - 1;
    let one = MPoly::constant(vars, rat_int(1));
    if m == 0 && n == 0 {
        return one;
    }
    if m == 0 {
        return power(&a[0], n);
    }
    if n == 0 {
        return power(&b[0], m);
    }

    // Sylvester layout: n shifted rows of a's coefficients, then m of b's,
    // all written highest degree first.
    let size = m + n;
    let zero = MPoly::zero(vars);
    let mut mat = vec![vec![zero.clone(); size]; size];
    for row in 0..n {
        for (k, coeff) in a.iter().rev().enumerate() {
            mat[row][row + k] = coeff.clone();
        }
    }
    for row in 0..m {
        for (k, coeff) in b.iter().rev().enumerate() {
            mat[n + row][row + k] = coeff.clone();
        }
    }
    bareiss_det(mat, vars)
}

fn trim(coeffs: &[MPoly]) -> Vec<MPoly> {
    let mut v = coeffs.to_vec();
    while v.last().is_some_and(MPoly::is_zero) {
        v.pop();
    }
    v
}

fn power(base: &MPoly, mut n: usize) -> MPoly {
    let mut acc = MPoly::constant(base.vars(), rat_int(1));
    let mut b = base.clone();
    loop {
        if n & 1 == 1 {
            acc = acc.mul(&b);
        }
        n >>= 1;
        if n == 0 {
            return acc;
        }
        b = b.square();
    }
}

fn bareiss_det(mut m: Vec<Vec<MPoly>>, vars: super::mpoly::VarSet) -> MPoly {
    let n = m.len();
    let mut prev = MPoly::constant(vars, rat_int(1));
    let mut sign = 1i32;
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return MPoly::zero(vars);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        let pivot = m[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[i][j].mul(&pivot).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = t.exact_div(&prev);
            }
            m[i][k] = MPoly::zero(vars);
        }
        prev = pivot;
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        det.neg()
    } else {
        det
    }
}
