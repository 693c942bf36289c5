//! Root extraction: exact rational roots, and floating-point approximations
//! of the remaining algebraic ones.
//!
//! The numeric half is display-only by design: no decision procedure in
//! this crate consumes approximate roots.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::Zero;
use thiserror::Error;

use super::factorint::positive_divisors;
use super::poly::Poly;
use super::rat::{rat_int, rat_to_f64, Rat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("operation requires a nonzero polynomial")]
pub struct ZeroPolynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum NumericRootError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("root iteration failed to reach the requested tolerance")]
    NoConvergence,
}

/// All rational roots of `a`, each repeated according to its multiplicity,
/// sorted ascending. Candidates come from the rational-root bound on the
/// primitive integer form of `a`.
pub fn rational_roots(a: &Poly) -> Result<Vec<Rat>, ZeroPolynomial> {
    if a.is_zero() {
        return Err(ZeroPolynomial);
    }
    let mut ints = a.primitive_int();
    let mut roots = Vec::new();

    // roots at zero: trailing zero coefficients of the integer form
    while ints.first().is_some_and(Zero::is_zero) {
        ints.remove(0);
        roots.push(rat_int(0));
    }
    if ints.len() <= 1 {
        roots.sort();
        return Ok(roots);
    }

    let mut poly = Poly::from_coeffs(ints.iter().cloned().map(Rat::from_integer).collect());
    let a0 = ints.first().unwrap().clone();
    let an = ints.last().unwrap().clone();
    for num in positive_divisors(&a0) {
        for den in positive_divisors(&an) {
            if num.gcd(&den) != BigInt::from(1) {
                continue;
            }
            for cand in [
                Rat::new(num.clone(), den.clone()),
                Rat::new(-num.clone(), den.clone()),
            ] {
                while poly.eval(&cand).is_zero() {
                    roots.push(cand.clone());
                    let linear = Poly::from_coeffs(vec![-cand.clone(), rat_int(1)]);
                    poly = poly.exact_div(&linear);
                    if poly.is_constant() {
                        roots.sort();
                        return Ok(roots);
                    }
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}

/// All complex roots of `a` with multiplicity, approximated to residual
/// `|a(r)| < tol` by Durand–Kerner iteration, sorted by `(re, im)`.
///
/// Multiplicities are separated exactly first (Yun's algorithm), so the
/// iteration only ever sees squarefree polynomials.
pub fn numeric_roots(a: &Poly, tol: f64) -> Result<Vec<Complex64>, NumericRootError> {
    if a.is_zero() {
        return Err(NumericRootError::ZeroPolynomial);
    }
    assert!(tol > 0.0, "tolerance must be positive");
    let mut all = Vec::new();
    for (factor, multiplicity) in yun_squarefree_factors(a) {
        if factor.is_constant() {
            continue;
        }
        let roots = durand_kerner(&factor);
        for r in roots {
            for _ in 0..multiplicity {
                all.push(r);
            }
        }
    }
    all.sort_by(|a, b| {
        a.re.partial_cmp(&b.re)
            .unwrap()
            .then(a.im.partial_cmp(&b.im).unwrap())
    });
    // the residual contract is on the original polynomial, never relaxed
    let coeffs: Vec<Complex64> = a
        .coeffs()
        .iter()
        .map(|c| Complex64::new(rat_to_f64(c), 0.0))
        .collect();
    for r in &all {
        if eval_complex(&coeffs, *r).norm() >= tol {
            return Err(NumericRootError::NoConvergence);
        }
    }
    Ok(all)
}

/// Yun's squarefree decomposition: `a = lc * prod f_i^i` with each `f_i`
/// monic squarefree, returned as `(f_i, i)` pairs (trivial factors omitted).
fn yun_squarefree_factors(a: &Poly) -> Vec<(Poly, u32)> {
    let a = a.monic();
    if a.is_constant() {
        return Vec::new();
    }
    let da = a.derivative();
    let g = a.gcd(&da);
    if g.is_constant() {
        return vec![(a, 1)];
    }
    let mut out = Vec::new();
    let mut b = a.exact_div(&g);
    let mut c = da.exact_div(&g);
    let mut i = 1u32;
    loop {
        let d = &c - &b.derivative();
        if d.is_zero() {
            if !b.is_constant() {
                out.push((b, i));
            }
            break;
        }
        let f = b.gcd(&d);
        if !f.is_constant() {
            out.push((f.clone(), i));
        }
        b = b.exact_div(&f);
        c = d.exact_div(&f);
        i += 1;
        if b.is_constant() {
            break;
        }
    }
    out
}

fn eval_complex(coeffs: &[Complex64], x: Complex64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Simultaneous iteration on a squarefree monic-able polynomial; runs to
/// stationarity and lets the caller judge residuals.
fn durand_kerner(a: &Poly) -> Vec<Complex64> {
    let monic = a.monic();
    let n = monic.degree().unwrap();
    let coeffs: Vec<Complex64> = monic
        .coeffs()
        .iter()
        .map(|c| Complex64::new(rat_to_f64(c), 0.0))
        .collect();
    // Cauchy-style radius keeps the start ring around all roots
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let unit = seed / seed.norm();
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| unit.powu(k as u32 + 1) * radius * 0.9)
        .collect();

    const MAX_ITERS: usize = 1000;
    for _ in 0..MAX_ITERS {
        let mut moved = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if j != i {
                    denom *= z[i] - z[j];
                }
            }
            if denom.norm() == 0.0 {
                // coincident iterates: nudge apart
                z[i] += Complex64::new(1e-6, 1e-6);
                continue;
            }
            let delta = eval_complex(&coeffs, z[i]) / denom;
            z[i] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-15 * radius {
            break;
        }
    }
    z
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat::rat;

    fn p(coeffs: &[i64]) -> Poly {
        Poly::from_ints(coeffs)
    }

    #[test]
    fn rational_root_examples() {
        assert_eq!(rational_roots(&p(&[-1, 0, 1])).unwrap(), vec![rat_int(-1), rat_int(1)]);
        assert_eq!(rational_roots(&p(&[1, 0, 0, 0, 1])).unwrap(), Vec::<Rat>::new());
        assert_eq!(rational_roots(&p(&[-3, 2])).unwrap(), vec![rat(3, 2)]);
        assert!(rational_roots(&Poly::zero()).is_err());
    }

    #[test]
    fn rational_roots_with_multiplicity() {
        // t^2 (t - 1)^2 (t + 2)
        let a = &(&p(&[0, 0, 1]) * &p(&[-1, 1]).pow(2)) * &p(&[2, 1]);
        let roots = rational_roots(&a).unwrap();
        assert_eq!(
            roots,
            vec![rat_int(-2), rat_int(0), rat_int(0), rat_int(1), rat_int(1)]
        );
    }

    #[test]
    fn numeric_root_examples() {
        // t^2 + 1 -> ±i
        let roots = numeric_roots(&p(&[1, 0, 1]), 1e-9).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].im + 1.0).abs() < 1e-8 && roots[0].re.abs() < 1e-8);
        assert!((roots[1].im - 1.0).abs() < 1e-8);

        // t^2 - 2 -> ±sqrt(2), frozen from a bisection oracle: 1.41421356...
        let roots = numeric_roots(&p(&[-2, 0, 1]), 1e-10).unwrap();
        assert!((roots[1].re - 1.4142135623730951).abs() < 1e-9);
        assert!(roots[1].im.abs() < 1e-9);

        // t - 5 -> 5
        let roots = numeric_roots(&p(&[-5, 1]), 1e-12).unwrap();
        assert!((roots[0].re - 5.0).abs() < 1e-10);
    }

    #[test]
    fn numeric_roots_multiplicity() {
        let a = p(&[-1, 1]).pow(3); // (t-1)^3
        let roots = numeric_roots(&a, 1e-9).unwrap();
        assert_eq!(roots.len(), 3);
        for r in roots {
            assert!((r.re - 1.0).abs() < 1e-8 && r.im.abs() < 1e-8);
        }
    }

    #[test]
    fn bisection_oracle_sqrt2() {
        // independent check that sqrt(2) really is 1.41421356...
        let f = |x: f64| x * x - 2.0;
        let (mut lo, mut hi) = (1.0f64, 2.0f64);
        for _ in 0..60 {
            let mid = 0.5 * (lo + hi);
            if f(mid) > 0.0 {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        assert!((lo - 1.4142135623730951).abs() < 1e-12);
    }

    #[test]
    fn yun_decomposition() {
        // t^2 (t+1)^3
        let a = &p(&[0, 0, 1]) * &p(&[1, 1]).pow(3);
        let factors = yun_squarefree_factors(&a);
        assert_eq!(factors.len(), 2);
        assert_eq!(factors[0], (p(&[0, 1]), 2));
        assert_eq!(factors[1], (p(&[1, 1]), 3));
    }
}
