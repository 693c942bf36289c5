//! Bivariate polynomials as dense vectors in a main variable with
//! univariate coefficients, plus the primitive-PRS gcd over the
//! rational-function field in the secondary variable.
//!
//! This is deliberately not a general multivariate gcd: two callers need
//! exactly this shape — the properness test (main variable `t`,
//! coefficients in `s`) and the squarefree normalization of implicit
//! curves (main variable `y`, coefficients in `z`).

use super::poly::Poly;
use super::rat::rat_int;

/// Coefficient of the main variable's `i`-th power is `coeffs[i]`, a
/// polynomial in the secondary variable. No trailing zero coefficients.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct BiPoly {
    coeffs: Vec<Poly>,
}

impl BiPoly {
    pub fn from_coeffs(mut coeffs: Vec<Poly>) -> Self {
        while coeffs.last().is_some_and(Poly::is_zero) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree in the main variable; `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Poly> {
        self.coeffs.last()
    }

    pub fn derivative_main(&self) -> BiPoly {
        if self.coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        BiPoly::from_coeffs(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.scale(&rat_int(i as i64 + 1)))
                .collect(),
        )
    }

    /// Content in the main variable: the univariate gcd of all coefficients.
    pub fn content(&self) -> Poly {
        let mut g = Poly::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.degree() == Some(0) {
                break;
            }
        }
        g
    }

    pub fn primitive_part(&self) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let content = self.content();
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| c.exact_div(&content)).collect(),
        }
    }

    fn mul_coeff(&self, f: &Poly) -> BiPoly {
        if f.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            coeffs: self.coeffs.iter().map(|c| c * f).collect(),
        }
    }

    fn sub(&self, rhs: &BiPoly) -> BiPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = Poly::zero();
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i).unwrap_or(&zero);
            let b = rhs.coeffs.get(i).unwrap_or(&zero);
            out.push(a - b);
        }
        BiPoly::from_coeffs(out)
    }

    fn shift_main(&self, k: usize) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Poly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        BiPoly { coeffs }
    }

    /// Pseudo-remainder in the main variable: a `Poly`-multiple of
    /// `self mod rhs` that stays polynomial in the secondary variable.
    pub fn pseudo_rem(&self, rhs: &BiPoly) -> BiPoly {
        let db = rhs.degree().expect("pseudo_rem by zero");
        if db == 0 {
            return BiPoly::zero();
        }
        let lc = rhs.leading_coeff().unwrap().clone();
        let mut rem = self.clone();
        while rem.degree().is_some_and(|d| d >= db) {
            let k = rem.degree().unwrap() - db;
            let top = rem.leading_coeff().unwrap().clone();
            rem = rem.mul_coeff(&lc).sub(&rhs.mul_coeff(&top).shift_main(k));
        }
        rem
    }

    /// Specialize the secondary variable to `s0`; the result is univariate
    /// in the main variable.
    pub fn eval_secondary(&self, s0: &super::rat::Rat) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| c.eval(s0)).collect())
    }

    /// Gcd over the rational-function field in the secondary variable,
    /// returned as a primitive bivariate polynomial (unique up to a unit).
    /// Only its structure — chiefly the main-variable degree — matters to
    /// callers.
    pub fn gcd_main(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let mut a = self.primitive_part();
        let mut b = other.primitive_part();
        if a.coeffs.len() < b.coeffs.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                // coprime in the main variable
                return BiPoly::from_coeffs(vec![Poly::one()]);
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a
    }
}
