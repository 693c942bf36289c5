//! Report types and their deterministic serializations.
//!
//! JSON output has a fixed key order (struct declaration order), rationals
//! serialize as `"num/den"` strings, polynomials in canonical text form.
//! Timing never enters the JSON bytes, so identical inputs give identical
//! output.

use serde::Serialize;

use revolve_core::coverage::{complex_critical_set, real_critical_set};
use revolve_core::exactpoly::rat::{rat_to_decimal, rat_to_string, Rat};
use revolve_core::exactpoly::{numeric_roots, rational_roots};
use revolve_core::oracle::{ab_split, implicit_surface, implicitize_profile, on_surface, reachable, surface_from_split};
use revolve_core::profile::Normality;
use revolve_core::ratexpr::format_ratfunc;
use revolve_core::{Point3, Poly, ProfileCurve, RealCriticalSet};

use crate::{CliError, ProfileArgs};

#[derive(Serialize)]
pub struct PointJson {
    pub x: String,
    pub y: String,
    pub z: String,
}

impl PointJson {
    fn from_point(p: &Point3) -> PointJson {
        PointJson {
            x: rat_to_string(&p.x),
            y: rat_to_string(&p.y),
            z: rat_to_string(&p.z),
        }
    }

    fn from_yz(b: &Rat, c: &Rat) -> PointJson {
        PointJson {
            x: "0".to_string(),
            y: rat_to_string(b),
            z: rat_to_string(c),
        }
    }
}

#[derive(Serialize)]
pub struct MirrorJson {
    pub p: String,
    pub q: String,
}

#[derive(Serialize)]
pub struct CircleJson {
    pub alpha: String,
    pub c: String,
}

#[derive(Serialize)]
pub struct CriticalSetJson {
    pub kind: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<PointJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mirror: Option<MirrorJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circle: Option<CircleJson>,
}

#[derive(Serialize)]
pub struct ApproxRootJson {
    /// 12 significant digits; approximate by construction.
    pub re: String,
    pub im: String,
}

#[derive(Serialize)]
pub struct ComplexJson {
    /// The squarefree polynomial J(z) whose roots carry the line pairs.
    pub axis_levels: String,
    /// Exact rational roots of J.
    pub rational_levels: Vec<String>,
    /// Numeric approximations of the remaining (irrational) roots.
    pub approximate_levels: Vec<ApproxRootJson>,
}

#[derive(Serialize)]
pub struct AnalysisReport {
    pub input: InputJson,
    pub properness: &'static str,
    pub symmetric: bool,
    pub normal: bool,
    pub critical_point: Option<PointJson>,
    pub critical_set: CriticalSetJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub complex: Option<ComplexJson>,
}

#[derive(Serialize)]
pub struct InputJson {
    pub p: String,
    pub q: String,
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serialization cannot fail")
}

fn critical_set_json(set: &RealCriticalSet) -> CriticalSetJson {
    CriticalSetJson {
        kind: set.kind(),
        point: set.point().map(PointJson::from_point),
        mirror: set.mirror().map(|m| MirrorJson {
            p: format_ratfunc(m.p()),
            q: format_ratfunc(m.q()),
        }),
        circle: set.circle().map(|c| CircleJson {
            alpha: rat_to_string(&c.alpha),
            c: rat_to_string(&c.c),
        }),
    }
}

fn complex_json(axis_levels: &Poly) -> Result<ComplexJson, CliError> {
    let rational = rational_roots(axis_levels).expect("J is nonzero");
    // deflate the rational roots; approximate whatever is left
    let mut rest = axis_levels.monic();
    for r in &rational {
        let linear = Poly::from_coeffs(vec![-r, revolve_core::exactpoly::rat::rat_int(1)]);
        rest = rest.exact_div(&linear);
    }
    let approximate = if rest.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        numeric_roots(&rest, 1e-9)
            .map_err(|e| CliError::Internal(format!("axis level approximation failed: {e}")))?
            .into_iter()
            .map(|r| ApproxRootJson {
                re: f64_decimal(r.re),
                im: f64_decimal(r.im),
            })
            .collect()
    };
    Ok(ComplexJson {
        axis_levels: axis_levels.display_with_var("z"),
        rational_levels: rational.iter().map(rat_to_string).collect(),
        approximate_levels: approximate,
    })
}

fn f64_decimal(v: f64) -> String {
    format!("{v:.12e}")
}

pub fn analyze(
    pc: &ProfileCurve,
    args: &ProfileArgs,
    complex: bool,
) -> Result<AnalysisReport, CliError> {
    let symmetric = pc.is_symmetric();
    let normality = pc.normality();
    let (set, axis_levels) = if complex {
        let out = complex_critical_set(pc);
        (out.real, Some(out.axis_levels))
    } else {
        (real_critical_set(pc), None)
    };
    let complex_part = match &axis_levels {
        Some(j) => Some(complex_json(j)?),
        None => None,
    };
    Ok(AnalysisReport {
        input: InputJson {
            p: format_ratfunc(pc.p()),
            q: format_ratfunc(pc.q()),
        },
        properness: if args.skip_proper_check {
            "assumed"
        } else {
            "checked"
        },
        symmetric,
        normal: matches!(normality, Normality::Normal),
        critical_point: normality
            .critical_point()
            .map(|(b, c)| PointJson::from_yz(b, c)),
        critical_set: critical_set_json(&set),
        complex: complex_part,
    })
}

pub fn analyze_text(rep: &AnalysisReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("p: {}\n", rep.input.p));
    out.push_str(&format!("q: {}\n", rep.input.q));
    out.push_str(&format!("properness: {}\n", rep.properness));
    out.push_str(&format!("symmetric: {}\n", rep.symmetric));
    out.push_str(&format!("normal: {}\n", rep.normal));
    match &rep.critical_point {
        Some(p) => out.push_str(&format!("critical point: (0, {}, {})\n", p.y, p.z)),
        None => out.push_str("critical point: none\n"),
    }
    out.push_str(&format!("critical set: {}\n", rep.critical_set.kind));
    if let Some(p) = &rep.critical_set.point {
        out.push_str(&format!("  point: (0, {}, {})\n", p.y, p.z));
    }
    if let Some(m) = &rep.critical_set.mirror {
        out.push_str(&format!("  mirror: p = {}, q = {}\n", m.p, m.q));
    }
    if let Some(c) = &rep.critical_set.circle {
        out.push_str(&format!(
            "  circle: radius |{}| in the plane z = {}\n",
            c.alpha, c.c
        ));
    }
    if let Some(cx) = &rep.complex {
        out.push_str(&format!("axis levels: J(z) = {}\n", cx.axis_levels));
        if cx.rational_levels.is_empty() {
            out.push_str("  rational levels: none\n");
        } else {
            out.push_str(&format!(
                "  rational levels: {}\n",
                cx.rational_levels.join(", ")
            ));
        }
        if !cx.approximate_levels.is_empty() {
            let rendered: Vec<String> = cx
                .approximate_levels
                .iter()
                .map(|r| format!("{} + {}i (approx)", r.re, r.im))
                .collect();
            out.push_str(&format!("  approximate levels: {}\n", rendered.join(", ")));
        }
    }
    out
}

#[derive(Serialize)]
pub struct ReachabilityReport {
    pub point: PointJson,
    pub reachable: bool,
    pub on_surface: bool,
    /// Which critical-set component contains an unreachable surface point.
    pub component: Option<&'static str>,
}

pub fn reachability(pc: &ProfileCurve, point: &Point3) -> ReachabilityReport {
    let surface = implicit_surface(pc);
    let is_reachable = reachable(pc, point);
    let is_on_surface = on_surface(&surface, point);
    let component = if !is_reachable && is_on_surface {
        Some(locate_in_critical_set(pc, point))
    } else {
        None
    };
    ReachabilityReport {
        point: PointJson::from_point(point),
        reachable: is_reachable,
        on_surface: is_on_surface,
        component,
    }
}

fn locate_in_critical_set(pc: &ProfileCurve, point: &Point3) -> &'static str {
    let set = real_critical_set(pc);
    let zero: Rat = revolve_core::exactpoly::rat::rat_int(0);
    if let Some(p) = set.point() {
        if p == point {
            return "point";
        }
    }
    if let Some(mirror) = set.mirror() {
        if point.x == zero {
            // membership on the mirror curve: reachable by its
            // parametrization, or equal to its one unreachable point
            if mirror.point_on_curve(&point.y, &point.z) {
                return "mirror";
            }
            if let Normality::NotNormal { b, c } = pc.normality() {
                if point.y == -&b && point.z == c {
                    return "mirror";
                }
            }
        }
    }
    if let Some(circle) = set.circle() {
        if point.z == circle.c
            && &point.x * &point.x + &point.y * &point.y == &circle.alpha * &circle.alpha
        {
            return "circle";
        }
    }
    "outside reported set"
}

pub fn reachability_text(rep: &ReachabilityReport) -> String {
    let mut out = format!("reachable: {}\n", rep.reachable);
    out.push_str(&format!("on surface: {}\n", rep.on_surface));
    if let Some(component) = rep.component {
        out.push_str(&format!("component: {component}\n"));
    }
    out
}

#[derive(Serialize)]
pub struct ImplicitReport {
    pub f: String,
    #[serde(rename = "A")]
    pub a: String,
    #[serde(rename = "B")]
    pub b: String,
    #[serde(rename = "F")]
    pub big_f: String,
    pub symmetric: bool,
}

pub fn implicit_equations(pc: &ProfileCurve) -> ImplicitReport {
    let profile = implicitize_profile(pc);
    let split = ab_split(&profile);
    let surface = surface_from_split(&split);
    ImplicitReport {
        f: profile.f().to_string(),
        a: split.a.to_string(),
        b: split.b.to_string(),
        big_f: surface.f().to_string(),
        symmetric: surface.symmetric(),
    }
}

/// Decimal rendering used by the CSV exporter (15 significant digits).
pub fn csv_decimal(x: &Rat) -> String {
    rat_to_decimal(x, 15)
}
