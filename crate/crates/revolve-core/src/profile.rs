//! The profile-curve model and its decision procedures: properness,
//! symmetry about the axis of revolution, normality (surjectivity over the
//! complex parameter values) and exact point membership.
//!
//! A profile curve is `(0, p(t), q(t))` in the `(y,z)`-plane; rotating it
//! about the `z`-axis produces the surface under study. Validation rejects
//! curves contained in the axis, horizontal lines (which would sweep a
//! plane) and non-proper parametrizations.

use thiserror::Error;

use crate::exactpoly::rat::{rat_int, Rat};
use crate::exactpoly::BiPoly;
use crate::ratexpr::RationalFunction;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    /// `p` is identically zero: the curve lies on the `z`-axis.
    #[error("DegenerateAxis: p is identically zero, the profile lies on the z-axis")]
    DegenerateAxis,
    /// `q` is constant: the curve is a horizontal line and the surface a
    /// plane.
    #[error("DegenerateLine: q is constant, the profile is a line parallel to the y-axis")]
    DegenerateLine,
    /// The map `t -> (p(t), q(t))` is not injective.
    #[error("NotProper: the parametrization is not proper (not injective)")]
    NotProper,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum Component {
    #[error("p")]
    P,
    #[error("q")]
    Q,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pole: denominator of {component} vanishes at t = {at}")]
pub struct PoleError {
    pub component: Component,
    pub at: Rat,
}

/// Limit of a rational function as `t -> ∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitAtInfinity {
    Finite(Rat),
    Infinite,
}

/// Outcome of the normality check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Normality {
    /// Every curve point is reached at some complex parameter value.
    Normal,
    /// Exactly `(0, b, c)` — the finite limit of the parametrization at
    /// infinity — is unreachable.
    NotNormal { b: Rat, c: Rat },
}

impl Normality {
    pub fn critical_point(&self) -> Option<(&Rat, &Rat)> {
        match self {
            Normality::Normal => None,
            Normality::NotNormal { b, c } => Some((b, c)),
        }
    }
}

/// A validated profile curve `(0, p(t), q(t))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileCurve {
    p: RationalFunction,
    q: RationalFunction,
}

impl ProfileCurve {
    /// Validates and builds. Rejects `p ≡ 0`, constant `q`, and non-proper
    /// parametrizations, in that order.
    pub fn new(p: RationalFunction, q: RationalFunction) -> Result<ProfileCurve, ProfileError> {
        let pc = ProfileCurve::new_assume_proper(p, q)?;
        if !check_proper(pc.p(), pc.q()) {
            return Err(ProfileError::NotProper);
        }
        Ok(pc)
    }

    /// Skips the properness check (user-asserted input). Degeneracy is
    /// still rejected; every downstream result assumes properness holds.
    pub fn new_assume_proper(
        p: RationalFunction,
        q: RationalFunction,
    ) -> Result<ProfileCurve, ProfileError> {
        if p.is_zero() {
            return Err(ProfileError::DegenerateAxis);
        }
        if q.is_constant() {
            return Err(ProfileError::DegenerateLine);
        }
        Ok(ProfileCurve { p, q })
    }

    pub fn p(&self) -> &RationalFunction {
        &self.p
    }

    pub fn q(&self) -> &RationalFunction {
        &self.q
    }

    /// The mirror curve `(0, -p(t), q(t))`: the reflection across the
    /// `z`-axis. An involution; properness and non-degeneracy carry over.
    pub fn mirror(&self) -> ProfileCurve {
        ProfileCurve {
            p: self.p.neg(),
            q: self.q.clone(),
        }
    }

    /// Exact evaluation `(p(t0), q(t0))`.
    pub fn eval(&self, t0: &Rat) -> Result<(Rat, Rat), PoleError> {
        let y = self.p.eval(t0).ok_or_else(|| PoleError {
            component: Component::P,
            at: t0.clone(),
        })?;
        let z = self.q.eval(t0).ok_or_else(|| PoleError {
            component: Component::Q,
            at: t0.clone(),
        })?;
        Ok((y, z))
    }

    /// `max(deg p, deg q)` with the degree of a rational function taken as
    /// `max(deg num, deg den)`; this is the `m` of the Bézout bound that
    /// drives the symmetry sampling.
    pub fn degree_bound(&self) -> usize {
        self.p.degree().max(self.q.degree())
    }

    /// Decides whether the profile equals its mirror curve, by sampling.
    ///
    /// Both curves have degree at most `2m`, so by Bézout they coincide as
    /// soon as they share `2m + 1` points. Samples walk `t0 = 1, 2, 3, …`
    /// skipping poles; each sampled profile point is tested for membership
    /// on the mirror curve by an exact gcd test, and the first failure
    /// decides non-symmetry.
    pub fn is_symmetric(&self) -> bool {
        let m = self.degree_bound();
        let needed = 2 * m + 1;
        // poles are finite: den degrees bound how many samples can be skipped
        let cap = needed
            + self.p.den().degree().unwrap_or(0)
            + self.q.den().degree().unwrap_or(0);
        let mut successes = 0;
        let mut t0 = rat_int(1);
        for _ in 0..cap {
            if let Ok((alpha, beta)) = self.eval(&t0) {
                // (0, -alpha, beta) on the profile <=> common root of
                // alpha*p2 + p1 and beta*q2 - q1
                let h1 = &self.p.den().scale(&alpha) + self.p.num();
                let h2 = &self.q.den().scale(&beta) - self.q.num();
                let h = h1.gcd(&h2);
                if h.degree().unwrap_or(0) == 0 {
                    return false;
                }
                successes += 1;
                if successes >= needed {
                    return true;
                }
            }
            t0 += rat_int(1);
        }
        unreachable!("pole skipping exhausted more samples than denominators have roots")
    }

    /// Decides normality and reports the critical point when there is one.
    ///
    /// If either component diverges at infinity there is no finite limit
    /// point and the parametrization is normal. Otherwise the limit
    /// `(α, β)` is the only candidate for a missed point; it is attained
    /// at a finite parameter iff `α·p2 - p1` and `β·q2 - q1` have a common
    /// root.
    pub fn normality(&self) -> Normality {
        let (alpha, beta) = match (limit_at_infinity(&self.p), limit_at_infinity(&self.q)) {
            (LimitAtInfinity::Finite(a), LimitAtInfinity::Finite(b)) => (a, b),
            _ => return Normality::Normal,
        };
        let h1 = &self.p.den().scale(&alpha) - self.p.num();
        let h2 = &self.q.den().scale(&beta) - self.q.num();
        let h = h1.gcd(&h2);
        if h.degree().unwrap_or(0) > 0 {
            Normality::Normal
        } else {
            Normality::NotNormal { b: alpha, c: beta }
        }
    }

    /// Whether `(0, b, c)` is reachable by the parametrization, i.e. some
    /// complex `t0` has `p(t0) = b` and `q(t0) = c`.
    ///
    /// By properness this decides curve membership for every point except
    /// the critical point, which is on the curve but unreachable; callers
    /// that may hit the critical point handle it separately. (The coverage
    /// algorithm only asks about `(0,-b,c)` for a critical point `(0,b,c)`
    /// with `b ≠ 0`, which is never the critical point itself.)
    pub fn point_on_curve(&self, b: &Rat, c: &Rat) -> bool {
        let h1 = &self.p.den().scale(b) - self.p.num();
        let h2 = &self.q.den().scale(c) - self.q.num();
        h1.gcd(&h2).degree().unwrap_or(0) > 0
    }
}

pub fn limit_at_infinity(rf: &RationalFunction) -> LimitAtInfinity {
    let dn = rf.num().degree();
    let dd = rf.den().degree().expect("denominator is nonzero");
    match dn {
        None => LimitAtInfinity::Finite(rat_int(0)),
        Some(dn) if dn > dd => LimitAtInfinity::Infinite,
        Some(dn) if dn == dd => LimitAtInfinity::Finite(
            rf.num().leading_coeff().unwrap() / rf.den().leading_coeff().unwrap(),
        ),
        _ => LimitAtInfinity::Finite(rat_int(0)),
    }
}

/// Whether `t -> (p(t), q(t))` is injective (birational onto its image):
/// the gcd in `t` of `p1(t)p2(s) - p1(s)p2(t)` and `q1(t)q2(s) - q1(s)q2(t)`
/// over the rational-function field in `s` must have degree 1.
///
/// A rational specialization `s = s0` that preserves both leading
/// coefficients can only enlarge the gcd, so finding a specialized gcd of
/// degree 1 certifies properness without bivariate arithmetic; the exact
/// bivariate computation is the fallback that certifies either answer.
pub fn check_proper(p: &RationalFunction, q: &RationalFunction) -> bool {
    let g1 = difference_form(p);
    let g2 = difference_form(q);
    match (g1, g2) {
        (None, None) => unreachable!("both components constant is rejected at validation"),
        (None, Some(g)) | (Some(g), None) => g.degree() == Some(1),
        (Some(g1), Some(g2)) => {
            for k in 1..=4i64 {
                let s0 = rat_int(k);
                let lc1 = g1.leading_coeff().unwrap().eval(&s0);
                let lc2 = g2.leading_coeff().unwrap().eval(&s0);
                if lc1 == rat_int(0) || lc2 == rat_int(0) {
                    continue;
                }
                let u1 = g1.eval_secondary(&s0);
                let u2 = g2.eval_secondary(&s0);
                if u1.gcd(&u2).degree() == Some(1) {
                    return true;
                }
            }
            g1.gcd_main(&g2).degree() == Some(1)
        }
    }
}

/// `n(t)d(s) - n(s)d(t)` as a polynomial in `t` with coefficients in `s`;
/// `None` when the function is constant (the form vanishes identically).
fn difference_form(rf: &RationalFunction) -> Option<BiPoly> {
    if rf.is_constant() {
        return None;
    }
    let n = rf.num();
    let d = rf.den();
    let len = n.coeffs().len().max(d.coeffs().len());
    let coeffs = (0..len)
        .map(|i| {
            // coefficient of t^i: n_i * d(s) - d_i * n(s)
            &d.scale(&n.coeff(i)) - &n.scale(&d.coeff(i))
        })
        .collect();
    Some(BiPoly::from_coeffs(coeffs))
}
