//! The coverage algorithms: what part of the surface of revolution can the
//! classical parametrization miss?
//!
//! Over the reals the answer is one of four shapes, keyed on whether the
//! profile is symmetric about the axis and whether its parametrization is
//! normal:
//!
//! | symmetric | normal | real critical set                      |
//! |-----------|--------|----------------------------------------|
//! | yes       | yes    | empty                                  |
//! | yes       | no     | the critical point                     |
//! | no        | yes    | the mirror curve                       |
//! | no        | no     | mirror curve (∪ one circle if needed)  |
//!
//! Over the complexes, pairs of lines `{x ± iy = 0}` appear at every
//! `z`-level where the profile meets the axis; those levels are the roots
//! of a single squarefree polynomial `J(z)`.

use crate::exactpoly::rat::{rat_int, Rat};
use crate::exactpoly::Poly;
use crate::oracle;
use crate::profile::{Normality, PoleError, ProfileCurve};

/// A point of the ambient space with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point3 {
    pub x: Rat,
    pub y: Rat,
    pub z: Rat,
}

impl Point3 {
    pub fn new(x: Rat, y: Rat, z: Rat) -> Point3 {
        Point3 { x, y, z }
    }
}

/// The cross-section circle of signed radius `alpha` in the plane
/// `z = c`, centered on the axis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    pub alpha: Rat,
    pub c: Rat,
}

/// A real critical set: a superset of everything the surface
/// parametrization misses over the reals, of dimension at most 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealCriticalSet {
    Empty,
    SinglePoint(Point3),
    MirrorCurve(ProfileCurve),
    MirrorCurveAndCircle(ProfileCurve, Circle),
}

impl RealCriticalSet {
    pub fn kind(&self) -> &'static str {
        match self {
            RealCriticalSet::Empty => "empty",
            RealCriticalSet::SinglePoint(_) => "point",
            RealCriticalSet::MirrorCurve(_) => "mirror",
            RealCriticalSet::MirrorCurveAndCircle(..) => "mirror_and_circle",
        }
    }

    pub fn mirror(&self) -> Option<&ProfileCurve> {
        match self {
            RealCriticalSet::MirrorCurve(m) => Some(m),
            RealCriticalSet::MirrorCurveAndCircle(m, _) => Some(m),
            _ => None,
        }
    }

    pub fn circle(&self) -> Option<&Circle> {
        match self {
            RealCriticalSet::MirrorCurveAndCircle(_, c) => Some(c),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&Point3> {
        match self {
            RealCriticalSet::SinglePoint(p) => Some(p),
            _ => None,
        }
    }
}

/// The critical set over the complexes: the real part plus the line pairs
/// `{(t, ±it, λ)}` at each root `λ` of `axis_levels`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexCriticalSet {
    pub real: RealCriticalSet,
    /// Squarefree `J(z)`; its complex roots are the `z`-levels carrying
    /// line pairs.
    pub axis_levels: Poly,
}

/// The classical surface parametrization `P(s0, t0)`, exactly.
pub fn surface_eval(pc: &ProfileCurve, s0: &Rat, t0: &Rat) -> Result<Point3, PoleError> {
    let (y, z) = pc.eval(t0)?;
    let denom = rat_int(1) + s0 * s0;
    let cos_part = (rat_int(1) - s0 * s0) / &denom;
    let sin_part = (rat_int(2) * s0) / &denom;
    Ok(Point3::new(sin_part * &y, cos_part * &y, z))
}

/// Rational point of the circle at parameter `s0`; sweeping `s0` covers
/// everything except `(0, -alpha, c)`.
pub fn circle_eval(circle: &Circle, s0: &Rat) -> Point3 {
    let denom = rat_int(1) + s0 * s0;
    let x = rat_int(2) * s0 / &denom * &circle.alpha;
    let y = (rat_int(1) - s0 * s0) / &denom * &circle.alpha;
    Point3::new(x, y, circle.c.clone())
}

/// The real-coverage decision: symmetry and normality select the row, and
/// in the non-symmetric non-normal case the circle through the critical
/// point is dropped when the mirror image of the critical point lies on
/// the profile (then the mirror curve already accounts for it).
pub fn real_critical_set(pc: &ProfileCurve) -> RealCriticalSet {
    let symmetric = pc.is_symmetric();
    let normality = pc.normality();
    match (symmetric, normality) {
        (true, Normality::Normal) => RealCriticalSet::Empty,
        (true, Normality::NotNormal { b, c }) => {
            RealCriticalSet::SinglePoint(Point3::new(rat_int(0), b, c))
        }
        (false, Normality::Normal) => RealCriticalSet::MirrorCurve(pc.mirror()),
        (false, Normality::NotNormal { b, c }) => {
            if b == rat_int(0) || pc.point_on_curve(&-&b, &c) {
                RealCriticalSet::MirrorCurve(pc.mirror())
            } else {
                RealCriticalSet::MirrorCurveAndCircle(pc.mirror(), Circle { alpha: b, c })
            }
        }
    }
}

/// Direct criterion for full real coverage: a symmetric profile with one
/// component of numerator degree above its denominator degree covers the
/// whole surface.
pub fn corollary_shortcut(pc: &ProfileCurve) -> bool {
    let tops_out = |rf: &crate::ratexpr::RationalFunction| {
        rf.num().degree().unwrap_or(0) > rf.den().degree().unwrap_or(0)
    };
    (tops_out(pc.p()) || tops_out(pc.q())) && pc.is_symmetric()
}

/// Real critical set plus the axis-level polynomial `J(z)` whose roots
/// carry the complex line pairs. `J` is read off the implicit profile
/// polynomial as the squarefree part of `f(0, z)`, which captures every
/// axis intersection — including a critical point sitting on the axis.
pub fn complex_critical_set(pc: &ProfileCurve) -> ComplexCriticalSet {
    let real = real_critical_set(pc);
    let f = oracle::implicitize_profile(pc);
    let axis_levels = oracle::axis_levels(&f)
        .expect("profile validation excludes an axis-contained curve");
    ComplexCriticalSet { real, axis_levels }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat::rat;
    use crate::ratexpr::parse_ratfunc;

    fn profile(p: &str, q: &str) -> ProfileCurve {
        ProfileCurve::new(parse_ratfunc(p).unwrap(), parse_ratfunc(q).unwrap()).unwrap()
    }

    fn circle_profile() -> ProfileCurve {
        profile("2*t/(t^2+1)", "(t^2-1)/(t^2+1)")
    }

    #[test]
    fn surface_eval_examples() {
        // s = 1 rotates the profile point a quarter turn
        let p = surface_eval(&circle_profile(), &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(p, Point3::new(rat_int(1), rat_int(0), rat_int(0)));
        // s = 0 recovers the profile curve
        let pc = profile("t/(t^4+1)", "(t^2-1)/(t^4+1)");
        let p = surface_eval(&pc, &rat_int(0), &rat_int(1)).unwrap();
        assert_eq!(p, Point3::new(rat_int(0), rat(1, 2), rat_int(0)));
        let (y, z) = pc.eval(&rat(7, 3)).unwrap();
        let q = surface_eval(&pc, &rat_int(0), &rat(7, 3)).unwrap();
        assert_eq!(q, Point3::new(rat_int(0), y, z));
    }

    #[test]
    fn circle_eval_examples() {
        let c = Circle { alpha: rat_int(1), c: rat_int(1) };
        assert_eq!(circle_eval(&c, &rat_int(0)), Point3::new(rat_int(0), rat_int(1), rat_int(1)));
        assert_eq!(circle_eval(&c, &rat_int(1)), Point3::new(rat_int(1), rat_int(0), rat_int(1)));
        let c2 = Circle { alpha: rat_int(-2), c: rat_int(0) };
        assert_eq!(circle_eval(&c2, &rat_int(0)), Point3::new(rat_int(0), rat_int(-2), rat_int(0)));
        // x^2 + y^2 = alpha^2 and z = c, for any parameter
        for k in -5..5 {
            let s = rat(k, 3);
            let p = circle_eval(&c2, &s);
            assert_eq!(&p.x * &p.x + &p.y * &p.y, rat_int(4));
            assert_eq!(p.z, rat_int(0));
        }
    }

    #[test]
    fn four_paper_examples() {
        // symmetric + normal
        let out = real_critical_set(&profile("t^5/(t^4+1)", "t^2/(t^4+1)"));
        assert_eq!(out, RealCriticalSet::Empty);

        // symmetric + not normal: the origin is missed
        let out = real_critical_set(&profile("t/(t^4+1)", "(t^2-1)/(t^4+1)"));
        assert_eq!(
            out,
            RealCriticalSet::SinglePoint(Point3::new(rat_int(0), rat_int(0), rat_int(0)))
        );

        // non-symmetric + normal: the mirror curve
        let pc = profile("t/(t^4+1)", "t^3/(t^2+1)");
        let out = real_critical_set(&pc);
        assert_eq!(out, RealCriticalSet::MirrorCurve(pc.mirror()));

        // non-symmetric + not normal with unreachable mirror image of the
        // critical point: mirror curve plus the circle through (0,1,1)
        let pc = profile("t^3/(t^3+1)", "(t^2-1)/(t^2+1)");
        let out = real_critical_set(&pc);
        assert_eq!(
            out,
            RealCriticalSet::MirrorCurveAndCircle(
                pc.mirror(),
                Circle { alpha: rat_int(1), c: rat_int(1) }
            )
        );
    }

    #[test]
    fn sphere_misses_north_pole() {
        let out = real_critical_set(&circle_profile());
        assert_eq!(
            out,
            RealCriticalSet::SinglePoint(Point3::new(rat_int(0), rat_int(0), rat_int(1)))
        );
    }

    #[test]
    fn corollary_examples() {
        assert!(corollary_shortcut(&profile("t^5/(t^4+1)", "t^2/(t^4+1)")));
        assert!(!corollary_shortcut(&circle_profile()));
        assert!(!corollary_shortcut(&profile("t/(t^4+1)", "t^3/(t^2+1)")));
        // shortcut implies the full computation returns Empty
        let pc = profile("t^5/(t^4+1)", "t^2/(t^4+1)");
        assert!(corollary_shortcut(&pc));
        assert_eq!(real_critical_set(&pc), RealCriticalSet::Empty);
    }

    #[test]
    fn complex_levels() {
        // sphere: line pairs at z = ±1
        let out = complex_critical_set(&circle_profile());
        assert_eq!(out.axis_levels, Poly::from_ints(&[-1, 0, 1]));
        assert_eq!(
            out.real,
            RealCriticalSet::SinglePoint(Point3::new(rat_int(0), rat_int(0), rat_int(1)))
        );

        // profile meets the axis only at the origin
        let out = complex_critical_set(&profile("t^5/(t^4+1)", "t^2/(t^4+1)"));
        assert_eq!(out.axis_levels.eval(&rat_int(0)), rat_int(0));
        assert_eq!(out.axis_levels, Poly::from_ints(&[0, 1]));

        // axis met only at complex parameters: p = t^2+1 vanishes at ±i,
        // where q = t takes the values ±i, so J = z^2 + 1
        let out = complex_critical_set(&profile("t^2+1", "t"));
        assert_eq!(out.axis_levels, Poly::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn critical_point_on_axis_shows_in_levels() {
        // the symmetric non-normal example has its critical point (0,0,0)
        // on the axis; J must vanish there
        let out = complex_critical_set(&profile("t/(t^4+1)", "(t^2-1)/(t^4+1)"));
        assert_eq!(out.axis_levels.eval(&rat_int(0)), rat_int(0));
    }
}
