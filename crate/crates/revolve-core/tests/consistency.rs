//! Cross-module consistency: the coverage algorithms against the
//! implicitization oracle, over a seeded corpus of random profiles.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use revolve_core::coverage::{
    circle_eval, complex_critical_set, corollary_shortcut, real_critical_set, surface_eval,
    Point3, RealCriticalSet,
};
use revolve_core::exactpoly::rat::{rat, rat_int, Rat};
use revolve_core::oracle::{
    ab_split, implicit_surface, implicitize_profile, on_surface, reachable, surface_from_split,
};
use revolve_core::profile::Normality;
use revolve_core::{Poly, ProfileCurve, RationalFunction};

fn random_poly(rng: &mut ChaCha8Rng, deg: usize, parity: Option<u8>) -> Poly {
    loop {
        let coeffs: Vec<Rat> = (0..=deg)
            .map(|k| {
                let keep = match parity {
                    None => true,
                    Some(p) => k % 2 == p as usize,
                };
                if keep {
                    rat_int(rng.gen_range(-4..=4))
                } else {
                    rat_int(0)
                }
            })
            .collect();
        let p = Poly::from_coeffs(coeffs);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Draws valid profiles with a mix of shapes: arbitrary, axis-symmetric
/// (odd p, even q), and bounded ones with finite limits at infinity.
fn random_profile(rng: &mut ChaCha8Rng) -> ProfileCurve {
    loop {
        let style = rng.gen_range(0..4);
        let (p, q) = match style {
            0 => (
                RationalFunction::new(random_poly(rng, 3, None), random_poly(rng, 2, None)),
                RationalFunction::new(random_poly(rng, 3, None), random_poly(rng, 2, None)),
            ),
            1 => (
                // symmetric: p odd, q even (denominators even)
                RationalFunction::new(random_poly(rng, 3, Some(1)), random_poly(rng, 2, Some(0))),
                RationalFunction::new(random_poly(rng, 2, Some(0)), random_poly(rng, 2, Some(0))),
            ),
            2 => (
                // symmetric with proper fractions: limits exist, often not normal
                RationalFunction::new(random_poly(rng, 1, Some(1)), random_poly(rng, 4, Some(0))),
                RationalFunction::new(random_poly(rng, 2, Some(0)), random_poly(rng, 4, Some(0))),
            ),
            _ => (
                // equal degrees: finite limits at infinity
                RationalFunction::new(random_poly(rng, 2, None), random_poly(rng, 2, None)),
                RationalFunction::new(random_poly(rng, 2, None), random_poly(rng, 2, None)),
            ),
        };
        if let Ok(pc) = ProfileCurve::new(p, q) {
            return pc;
        }
    }
}

fn sample_params() -> Vec<Rat> {
    (-30..=30).map(|k| rat(k, 7)).collect()
}

#[test]
fn symmetry_agrees_with_ab_split() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..12 {
        let pc = random_profile(&mut rng);
        let split = ab_split(&implicitize_profile(&pc));
        assert_eq!(
            pc.is_symmetric(),
            split.b.is_zero(),
            "symmetry mismatch for p={} q={}",
            pc.p(),
            pc.q()
        );
    }
}

#[test]
fn implicit_equations_vanish_on_samples() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..8 {
        let pc = random_profile(&mut rng);
        let f = implicitize_profile(&pc);
        let surface = implicit_surface(&pc);
        let mut checked = 0;
        for t0 in sample_params() {
            let Ok((y0, z0)) = pc.eval(&t0) else { continue };
            assert!(f.vanishes_at(&y0, &z0), "f fails at t={t0} for p={} q={}", pc.p(), pc.q());
            let s0 = rat(3, 5);
            let pt = surface_eval(&pc, &s0, &t0).unwrap();
            assert!(on_surface(&surface, &pt));
            checked += 1;
        }
        assert!(checked >= 50);
    }
}

#[test]
fn parametrization_samples_are_reachable() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..6 {
        let pc = random_profile(&mut rng);
        for t0 in sample_params().into_iter().step_by(5) {
            let Ok(pt) = surface_eval(&pc, &rat(1, 3), &t0) else { continue };
            assert!(reachable(&pc, &pt), "sampled point not reachable: p={} q={}", pc.p(), pc.q());
        }
    }
}

#[test]
fn normality_cross_checks() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for _ in 0..12 {
        let pc = random_profile(&mut rng);
        let f = implicitize_profile(&pc);
        match pc.normality() {
            Normality::NotNormal { b, c } => {
                // the critical point is on the curve but has no preimage
                assert!(f.vanishes_at(&b, &c));
                assert!(!pc.point_on_curve(&b, &c));
            }
            Normality::Normal => {
                // when the limit exists it is attained at a finite parameter
                use revolve_core::profile::{limit_at_infinity, LimitAtInfinity};
                if let (LimitAtInfinity::Finite(b), LimitAtInfinity::Finite(c)) =
                    (limit_at_infinity(pc.p()), limit_at_infinity(pc.q()))
                {
                    assert!(pc.point_on_curve(&b, &c));
                }
            }
        }
    }
}

#[test]
fn table_rows_match_symmetry_and_normality() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..16 {
        let pc = random_profile(&mut rng);
        let set = real_critical_set(&pc);
        let symmetric = pc.is_symmetric();
        let normal = matches!(pc.normality(), Normality::Normal);
        match (&set, symmetric, normal) {
            (RealCriticalSet::Empty, true, true) => {}
            (RealCriticalSet::SinglePoint(_), true, false) => {}
            (RealCriticalSet::MirrorCurve(_), false, _) => {}
            (RealCriticalSet::MirrorCurveAndCircle(..), false, false) => {}
            other => panic!("critical set off the table: {other:?}"),
        }
        if corollary_shortcut(&pc) {
            assert_eq!(set, RealCriticalSet::Empty);
        }
    }
}

#[test]
fn missing_points_lie_in_reported_set() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..10 {
        let pc = random_profile(&mut rng);
        let set = real_critical_set(&pc);
        for t0 in sample_params() {
            let Ok((y0, z0)) = pc.eval(&t0) else { continue };
            let mirror_pt = Point3::new(rat_int(0), -&y0, z0.clone());
            if reachable(&pc, &mirror_pt) {
                continue;
            }
            // an unreachable mirror sample must be inside the reported set
            match &set {
                RealCriticalSet::Empty => {
                    panic!("empty critical set but unreachable mirror point at t={t0}")
                }
                RealCriticalSet::SinglePoint(p) => assert_eq!(&mirror_pt, p),
                RealCriticalSet::MirrorCurve(_) | RealCriticalSet::MirrorCurveAndCircle(..) => {
                    // mirror samples lie on the mirror curve by construction
                }
            }
        }
    }
}

#[test]
fn circle_component_is_genuinely_missing() {
    // Example 4 exercises the circle row of the table
    let pc = ProfileCurve::new(
        revolve_core::ratexpr::parse_ratfunc("t^3/(t^3+1)").unwrap(),
        revolve_core::ratexpr::parse_ratfunc("(t^2-1)/(t^2+1)").unwrap(),
    )
    .unwrap();
    let set = real_critical_set(&pc);
    let circle = set.circle().expect("expected the circle row");
    let surface = implicit_surface(&pc);
    for k in -8..8 {
        let s0 = rat(k, 3);
        let pt = circle_eval(circle, &s0);
        assert!(on_surface(&surface, &pt));
        // circle points other than (0, ±alpha, c) are unreachable
        if pt.x != rat_int(0) {
            assert!(!reachable(&pc, &pt), "circle point reachable at s={s0}");
        }
    }
}

#[test]
fn rotational_closure() {
    // a surface point off the axis drags its whole cross-section circle in
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..6 {
        let pc = random_profile(&mut rng);
        let surface = implicit_surface(&pc);
        for t0 in [rat_int(2), rat(1, 2), rat(-3, 2)] {
            let Ok(pt) = surface_eval(&pc, &rat(2, 3), &t0) else { continue };
            let rho = &pt.x * &pt.x + &pt.y * &pt.y;
            if rho == rat_int(0) {
                continue;
            }
            // alpha^2 = rho; the profile evaluation gives a signed radius
            let (alpha, _) = pc.eval(&t0).unwrap();
            assert_eq!(&alpha * &alpha, rho);
            let circ = revolve_core::Circle { alpha, c: pt.z.clone() };
            for k in -4..4 {
                assert!(on_surface(&surface, &circle_eval(&circ, &rat(k, 5))));
            }
        }
    }
}

#[test]
fn complex_levels_are_on_the_implicit_curve() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for _ in 0..8 {
        let pc = random_profile(&mut rng);
        let out = complex_critical_set(&pc);
        let f = implicitize_profile(&pc);
        for root in revolve_core::exactpoly::rational_roots(&out.axis_levels).unwrap() {
            assert!(f.vanishes_at(&rat_int(0), &root));
        }
    }
}

#[test]
fn surface_from_split_matches_symmetry_flag() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..8 {
        let pc = random_profile(&mut rng);
        let split = ab_split(&implicitize_profile(&pc));
        let surface = surface_from_split(&split);
        assert_eq!(surface.symmetric(), split.b.is_zero());
        assert_eq!(surface.symmetric(), pc.is_symmetric());
    }
}
