//! Independent verification machinery: exact implicit equations for the
//! profile curve and the surface, and a reachability decision for rational
//! points.
//!
//! Everything the coverage algorithms claim can be cross-checked here: the
//! profile is implicitized by a resultant, the surface polynomial is
//! assembled from the even/odd split of the curve polynomial, and
//! reachability of a rational point reduces to a handful of univariate gcd
//! degree tests. The two sides share no code path beyond the polynomial
//! kernel.

use thiserror::Error;

use crate::coverage::Point3;
use crate::exactpoly::rat::{rat_int, Rat};
use crate::exactpoly::{resultant, MPoly, Poly, Var, VarSet};
use crate::profile::ProfileCurve;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum OracleError {
    /// The level polynomial `g` vanished identically, which would mean the
    /// surface is a plane — rejected at profile validation.
    #[error("DegenerateLevel: level polynomial vanishes identically")]
    DegenerateLevel,
    /// `f(0, z)` vanished identically, which would put the z-axis inside
    /// the profile curve — rejected at profile validation.
    #[error("AxisContained: the z-axis lies on the profile curve")]
    AxisContained,
}

/// The defining polynomial `f(y, z)` of the profile curve: primitive,
/// squarefree, positive leading coefficient under `(y, z)` lex order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicitProfile {
    f: MPoly,
}

impl ImplicitProfile {
    pub fn f(&self) -> &MPoly {
        &self.f
    }

    /// `f(y0, z0) = 0`, exactly.
    pub fn vanishes_at(&self, y0: &Rat, z0: &Rat) -> bool {
        self.f
            .eval(&[(Var::Y, y0.clone()), (Var::Z, z0.clone())])
            == rat_int(0)
    }
}

/// The even/odd split `f(y,z) = A(y^2,z) + y·B(y^2,z)`, with `u` standing
/// for `y^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ABSplit {
    pub a: MPoly,
    pub b: MPoly,
}

/// The defining polynomial `F(x,y,z)` of the surface of revolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImplicitSurface {
    f: MPoly,
    symmetric: bool,
}

impl ImplicitSurface {
    pub fn f(&self) -> &MPoly {
        &self.f
    }

    /// Whether the profile curve is symmetric about the axis (`B ≡ 0`).
    pub fn symmetric(&self) -> bool {
        self.symmetric
    }
}

/// Intersection of the surface with a plane `z = c`, described by the level
/// polynomial `g(λ)` in the squared radius `λ = x^2 + y^2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelDecomposition {
    /// The pair of complex lines `{x ± iy = 0}` lies in the plane section.
    pub has_line_pair: bool,
    /// Level polynomial; its positive roots are the squared radii of the
    /// section's circles.
    pub g: Poly,
    /// Positive rational roots of `g`, ascending, without repetition.
    pub rational_radii_squared: Vec<Rat>,
}

fn yz() -> VarSet {
    VarSet::of(&[Var::Y, Var::Z])
}

fn uz() -> VarSet {
    VarSet::of(&[Var::U, Var::Z])
}

fn xyz() -> VarSet {
    VarSet::of(&[Var::X, Var::Y, Var::Z])
}

/// Implicitizes the profile curve: the primitive squarefree part of
/// `Res_t(y·p2(t) - p1(t), z·q2(t) - q1(t))`.
///
/// For a proper reduced parametrization the resultant is a constant times
/// a power of the defining polynomial, so the squarefree-primitive
/// normalization recovers `f` canonically.
pub fn implicitize_profile(pc: &ProfileCurve) -> ImplicitProfile {
    let vars = yz();
    let y = MPoly::var(vars, Var::Y);
    let z = MPoly::var(vars, Var::Z);
    let build = |v: &MPoly, num: &Poly, den: &Poly| -> Vec<MPoly> {
        let len = num.coeffs().len().max(den.coeffs().len());
        (0..len)
            .map(|i| {
                v.scale(&den.coeff(i))
                    .sub(&MPoly::constant(vars, num.coeff(i)))
            })
            .collect()
    };
    let a = build(&y, pc.p().num(), pc.p().den());
    let b = build(&z, pc.q().num(), pc.q().den());
    let res = resultant(&a, &b);
    assert!(
        !res.is_zero(),
        "implicitization resultant vanished for a valid profile"
    );
    let f = squarefree_yz(&res).primitive_normalized();
    ImplicitProfile { f }
}

/// Squarefree part of a polynomial in `y` and `z`: the univariate
/// squarefree machinery handles the content in `z`, a primitive remainder
/// sequence in `y` over `Q(z)` handles the rest.
fn squarefree_yz(f: &MPoly) -> MPoly {
    let vars = f.vars();
    if f.degree_of(Var::Y) == 0 {
        let uni = f.to_univariate(Var::Z);
        let sq = uni.squarefree_part().expect("nonzero by construction");
        return MPoly::from_univariate(&sq, Var::Z, vars);
    }
    if f.degree_of(Var::Z) == 0 {
        let uni = f.to_univariate(Var::Y);
        let sq = uni.squarefree_part().expect("nonzero by construction");
        return MPoly::from_univariate(&sq, Var::Y, vars);
    }
    let b = f.to_bipoly(Var::Y, Var::Z);
    let content = b.content();
    let pp = b.primitive_part();
    let g = pp.gcd_main(&pp.derivative_main());
    let pp_m = MPoly::from_bipoly(&pp, Var::Y, Var::Z, vars);
    let sf_pp = if g.degree() == Some(0) {
        pp_m
    } else {
        let g_m = MPoly::from_bipoly(&g, Var::Y, Var::Z, vars);
        pp_m.exact_div(&g_m)
    };
    let content_sf = content.squarefree_part().expect("content of nonzero poly");
    let content_m = MPoly::from_univariate(&content_sf, Var::Z, vars);
    sf_pp.mul(&content_m)
}

/// Collects even and odd `y`-degree terms: `A` gets the even terms with
/// `y^2 ↦ u`, `B` the odd ones with a single `y` factored out.
pub fn ab_split(profile: &ImplicitProfile) -> ABSplit {
    let vars = uz();
    let mut a = MPoly::zero(vars);
    let mut b = MPoly::zero(vars);
    let u = MPoly::var(vars, Var::U);
    for (ydeg, coeff) in profile.f.coefficients_in(Var::Y).iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        // coeff is a polynomial in z alone
        let in_z = coeff.to_univariate(Var::Z);
        let mut term = MPoly::from_univariate(&in_z, Var::Z, vars);
        for _ in 0..ydeg / 2 {
            term = term.mul(&u);
        }
        if ydeg % 2 == 0 {
            a = a.add(&term);
        } else {
            b = b.add(&term);
        }
    }
    ABSplit { a, b }
}

/// Assembles the surface polynomial from the split: `A(x^2+y^2, z)` in the
/// symmetric case, `A^2 - (x^2+y^2)·B^2` otherwise.
pub fn implicit_surface(pc: &ProfileCurve) -> ImplicitSurface {
    let profile = implicitize_profile(pc);
    surface_from_split(&ab_split(&profile))
}

pub fn surface_from_split(split: &ABSplit) -> ImplicitSurface {
    let vars = xyz();
    let rho = MPoly::var(vars, Var::X)
        .square()
        .add(&MPoly::var(vars, Var::Y).square());
    let widen = |m: &MPoly| -> MPoly {
        // u ↦ x^2 + y^2; the leftover variable z rides along
        m.substitute(Var::U, &rho, vars)
    };
    let symmetric = split.b.is_zero();
    let f = if symmetric {
        widen(&split.a)
    } else {
        let a2 = widen(&split.a).square();
        let b2 = widen(&split.b).square();
        a2.sub(&rho.mul(&b2))
    };
    ImplicitSurface { f, symmetric }
}

/// Exact membership test `F(P) = 0`.
pub fn on_surface(surface: &ImplicitSurface, point: &Point3) -> bool {
    surface.f.eval(&[
        (Var::X, point.x.clone()),
        (Var::Y, point.y.clone()),
        (Var::Z, point.z.clone()),
    ]) == rat_int(0)
}

/// Decides whether a rational point is reached by the surface
/// parametrization at some complex `(s, t)`.
///
/// With `ρ = x^2 + y^2` (zero forces `x = y = 0` over the rationals):
/// on the axis the point is reachable iff some parameter has `p = 0` and
/// `q = z`. Off the axis, a parameter `t0` with `p(t0)^2 = ρ`, `q(t0) = z`
/// puts the point's cross-section circle in the image; that circle misses
/// exactly its `x = 0` mirror point, so for `x ≠ 0` existence of `t0`
/// suffices, while for `x = 0` the point must be hit by the profile
/// parametrization itself.
pub fn reachable(pc: &ProfileCurve, point: &Point3) -> bool {
    let p1 = pc.p().num();
    let p2 = pc.p().den();
    let q1 = pc.q().num();
    let q2 = pc.q().den();
    let z_line = &q2.scale(&point.z) - q1;
    let rho = &point.x * &point.x + &point.y * &point.y;
    if rho == rat_int(0) {
        return p1.gcd(&z_line).degree().unwrap_or(0) > 0;
    }
    let radial = &(p1 * p1) - &(p2 * p2).scale(&rho);
    if radial.gcd(&z_line).degree().unwrap_or(0) == 0 {
        return false;
    }
    if point.x != rat_int(0) {
        return true;
    }
    let y_line = &p2.scale(&point.y) - p1;
    y_line.gcd(&z_line).degree().unwrap_or(0) > 0
}

/// Intersection of the surface with the plane `z = c` (Lemma-style level
/// analysis): builds `g(λ) = F|_{y=0, z=c, x^2 ↦ λ}`, which equals
/// `A(λ,c)` in the symmetric case and `A^2(λ,c) - λ·B^2(λ,c)` otherwise.
pub fn level_decomposition(
    surface: &ImplicitSurface,
    c: &Rat,
) -> Result<LevelDecomposition, OracleError> {
    // F has only even exponents in x and y by construction
    let in_x = surface
        .f
        .substitute_scalar(Var::Y, &rat_int(0))
        .substitute_scalar(Var::Z, c)
        .to_univariate(Var::X);
    let mut coeffs = vec![rat_int(0); in_x.coeffs().len() / 2 + 1];
    for (k, coeff) in in_x.coeffs().iter().enumerate() {
        if !num_traits::Zero::is_zero(coeff) {
            assert!(k % 2 == 0, "surface polynomial has odd x-degree terms");
            coeffs[k / 2] = coeff.clone();
        }
    }
    let g = Poly::from_coeffs(coeffs);
    if g.is_zero() {
        return Err(OracleError::DegenerateLevel);
    }
    let has_line_pair = g.eval(&rat_int(0)) == rat_int(0);
    let mut radii: Vec<Rat> = crate::exactpoly::rational_roots(&g)
        .expect("g nonzero")
        .into_iter()
        .filter(|r| r > &rat_int(0))
        .collect();
    radii.dedup();
    Ok(LevelDecomposition {
        has_line_pair,
        g,
        rational_radii_squared: radii,
    })
}

/// The squarefree polynomial whose roots are the `z`-levels at which the
/// profile curve meets the `z`-axis (over the complexes): the squarefree
/// part of `f(0, z)`.
pub fn axis_levels(profile: &ImplicitProfile) -> Result<Poly, OracleError> {
    let in_z = profile
        .f
        .substitute_scalar(Var::Y, &rat_int(0))
        .to_univariate(Var::Z);
    if in_z.is_zero() {
        return Err(OracleError::AxisContained);
    }
    Ok(in_z.squarefree_part().expect("nonzero"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat::rat;
    use crate::ratexpr::parse_ratfunc;

    fn profile(p: &str, q: &str) -> ProfileCurve {
        ProfileCurve::new(parse_ratfunc(p).unwrap(), parse_ratfunc(q).unwrap()).unwrap()
    }

    fn circle() -> ProfileCurve {
        profile("2*t/(t^2+1)", "(t^2-1)/(t^2+1)")
    }

    #[test]
    fn implicitize_circle() {
        let f = implicitize_profile(&circle());
        assert_eq!(f.f().to_string(), "y^2+z^2-1");
        // vanishes on sampled curve points
        for k in -6..6 {
            let t0 = rat(k, 5);
            let (y0, z0) = circle().eval(&t0).unwrap();
            assert!(f.vanishes_at(&y0, &z0));
        }
    }

    #[test]
    fn implicitize_cubic_and_parabola() {
        let f = implicitize_profile(&profile("t^3", "t"));
        assert_eq!(f.f().to_string(), "-z^3+y");
        // direct elimination (t = z): y - z^3 up to normalization
        let g = implicitize_profile(&profile("t", "t^2"));
        // lex(y > z) positive leading coefficient picks y^2 - z
        assert_eq!(g.f().to_string(), "y^2-z");
    }

    #[test]
    fn ab_split_examples() {
        // circle: even terms only
        let split = ab_split(&implicitize_profile(&circle()));
        assert_eq!(split.a.to_string(), "z^2+u-1");
        assert!(split.b.is_zero());

        // cubic: f = y - z^3 gives A = -z^3, B = 1
        let split = ab_split(&implicitize_profile(&profile("t^3", "t")));
        assert_eq!(split.a.to_string(), "-z^3");
        assert_eq!(split.b.to_string(), "1");
    }

    #[test]
    fn ab_split_reconstruction_identity() {
        for pc in [
            circle(),
            profile("t^3", "t"),
            profile("t/(t^4+1)", "t^3/(t^2+1)"),
            profile("t^3/(t^3+1)", "(t^2-1)/(t^2+1)"),
        ] {
            let f = implicitize_profile(&pc);
            let split = ab_split(&f);
            // rebuild A(y^2,z) + y*B(y^2,z) over (y,z)
            let vars = yz();
            let y = MPoly::var(vars, Var::Y);
            let y2 = y.square();
            let a_back = split.a.substitute(Var::U, &y2, vars);
            let b_back = split.b.substitute(Var::U, &y2, vars);
            let rebuilt = a_back.add(&y.mul(&b_back));
            assert_eq!(rebuilt, f.f().clone());
        }
    }

    #[test]
    fn surface_polynomials() {
        let sphere = implicit_surface(&circle());
        assert!(sphere.symmetric());
        assert_eq!(sphere.f().to_string(), "x^2+y^2+z^2-1");

        let revolved_cubic = implicit_surface(&profile("t^3", "t"));
        assert!(!revolved_cubic.symmetric());
        assert_eq!(revolved_cubic.f().to_string(), "z^6-x^2-y^2");

        let paraboloid = implicit_surface(&profile("t", "t^2"));
        assert!(paraboloid.symmetric());
        assert_eq!(paraboloid.f().to_string(), "x^2+y^2-z");
    }

    #[test]
    fn surface_membership() {
        let sphere = implicit_surface(&circle());
        assert!(on_surface(&sphere, &Point3::new(rat_int(1), rat_int(0), rat_int(0))));
        // the missing north pole is still on the surface
        assert!(on_surface(&sphere, &Point3::new(rat_int(0), rat_int(0), rat_int(1))));
        assert!(!on_surface(&sphere, &Point3::new(rat_int(0), rat_int(0), rat_int(2))));
    }

    #[test]
    fn reachability_on_sphere() {
        let pc = circle();
        assert!(!reachable(&pc, &Point3::new(rat_int(0), rat_int(0), rat_int(1))));
        assert!(reachable(&pc, &Point3::new(rat_int(1), rat_int(0), rat_int(0))));
        assert!(reachable(&pc, &Point3::new(rat_int(0), rat_int(-1), rat_int(0))));
        // south pole is on the axis and reachable (p(0) = 0, q(0) = -1)
        assert!(reachable(&pc, &Point3::new(rat_int(0), rat_int(0), rat_int(-1))));
    }

    #[test]
    fn reachability_mirror_point() {
        // mirror image of a sample of a non-symmetric profile is missed
        let pc = profile("t/(t^4+1)", "t^3/(t^2+1)");
        let (y1, z1) = pc.eval(&rat_int(1)).unwrap();
        assert_eq!((y1.clone(), z1.clone()), (rat(1, 2), rat(1, 2)));
        assert!(!reachable(&pc, &Point3::new(rat_int(0), -y1, z1)));
    }

    #[test]
    fn level_decompositions_of_sphere() {
        let sphere = implicit_surface(&circle());
        let mid = level_decomposition(&sphere, &rat_int(0)).unwrap();
        assert!(!mid.has_line_pair);
        assert_eq!(mid.rational_radii_squared, vec![rat_int(1)]);

        let top = level_decomposition(&sphere, &rat_int(1)).unwrap();
        assert!(top.has_line_pair);
        assert!(top.rational_radii_squared.is_empty());

        let outside = level_decomposition(&sphere, &rat_int(2)).unwrap();
        assert!(!outside.has_line_pair);
        assert!(outside.rational_radii_squared.is_empty());
        assert_eq!(outside.g, Poly::from_ints(&[3, 1]));
    }

    #[test]
    fn level_matches_ab_route() {
        // g from F equals A^2(λ,c) - λ·B^2(λ,c) computed from the split
        for pc in [circle(), profile("t^3", "t"), profile("t^3/(t^3+1)", "(t^2-1)/(t^2+1)")] {
            let f = implicitize_profile(&pc);
            let split = ab_split(&f);
            let surface = surface_from_split(&split);
            for c in [rat_int(0), rat_int(1), rat(1, 2)] {
                let level = level_decomposition(&surface, &c).unwrap();
                let a_c = eval_z(&split.a, &c);
                let b_c = eval_z(&split.b, &c);
                let expected = if surface.symmetric() {
                    a_c
                } else {
                    &(&a_c * &a_c) - &(&(&b_c * &b_c) * &Poly::var())
                };
                assert_eq!(level.g, expected);
            }
        }
    }

    fn eval_z(m: &MPoly, c: &Rat) -> Poly {
        // A(u, z) at z = c, read as a univariate polynomial in u
        if m.is_zero() {
            return Poly::zero();
        }
        m.substitute_scalar(Var::Z, c).to_univariate(Var::U)
    }

    #[test]
    fn axis_level_examples() {
        let sphere_f = implicitize_profile(&circle());
        assert_eq!(axis_levels(&sphere_f).unwrap(), Poly::from_ints(&[-1, 0, 1]));

        let cubic_f = implicitize_profile(&profile("t^3", "t"));
        // f(0,z) = -z^3, squarefree part z
        assert_eq!(axis_levels(&cubic_f).unwrap(), Poly::from_ints(&[0, 1]));

        let parab_f = implicitize_profile(&profile("t", "t^2"));
        assert_eq!(axis_levels(&parab_f).unwrap(), Poly::from_ints(&[0, 1]));
    }

    #[test]
    fn squarefree_yz_on_planted_square() {
        let vars = yz();
        let y = MPoly::var(vars, Var::Y);
        let z = MPoly::var(vars, Var::Z);
        let one = MPoly::constant(vars, rat_int(1));
        let f = y.square().add(&z.square()).sub(&one); // irreducible
        let squared = f.square();
        assert_eq!(
            squarefree_yz(&squared).primitive_normalized(),
            f.primitive_normalized()
        );
        // with an extra pure-z square factor
        let zfac = z.sub(&one);
        let g = squared.mul(&zfac.square());
        let sf = squarefree_yz(&g).primitive_normalized();
        assert_eq!(sf, f.mul(&zfac).primitive_normalized());
    }
}
