//! CSV export of surface and critical-set samples.
//!
//! Row order is fixed: the row-major `n×n` surface grid (outer loop over
//! `s`), then mirror-curve samples over the `t`-range, then 64 circle
//! samples, then the single point — the last three only with
//! `include_critical` and only when the critical set has the component.
//! Pole rows are skipped and counted.

use revolve_core::coverage::{circle_eval, real_critical_set, surface_eval};
use revolve_core::exactpoly::rat::{rat, rat_int, Rat};
use revolve_core::{Point3, ProfileCurve};

use crate::report::csv_decimal;

pub struct SampleSpec {
    pub n: usize,
    pub s_range: (Rat, Rat),
    pub t_range: (Rat, Rat),
    pub include_critical: bool,
}

/// Renders the CSV (header always present) and the number of skipped pole
/// samples.
pub fn run(pc: &ProfileCurve, spec: &SampleSpec) -> (String, usize) {
    let mut out = String::from("x,y,z,source\n");
    let mut skipped = 0usize;
    let s_values = linspace(&spec.s_range.0, &spec.s_range.1, spec.n);
    let t_values = linspace(&spec.t_range.0, &spec.t_range.1, spec.n);

    for s0 in &s_values {
        for t0 in &t_values {
            match surface_eval(pc, s0, t0) {
                Ok(p) => push_row(&mut out, &p, "surface"),
                Err(_) => skipped += 1,
            }
        }
    }

    if spec.include_critical {
        let set = real_critical_set(pc);
        if let Some(mirror) = set.mirror() {
            for t0 in &t_values {
                match mirror.eval(t0) {
                    Ok((y, z)) => {
                        push_row(&mut out, &Point3::new(rat_int(0), y, z), "mirror")
                    }
                    Err(_) => skipped += 1,
                }
            }
        }
        if let Some(circle) = set.circle() {
            for k in 0..64i64 {
                let s0 = rat(2 * k - 63, 8);
                push_row(&mut out, &circle_eval(circle, &s0), "circle");
            }
        }
        if let Some(point) = set.point() {
            push_row(&mut out, point, "point");
        }
    }

    (out, skipped)
}

fn push_row(out: &mut String, p: &Point3, source: &str) {
    out.push_str(&format!(
        "{},{},{},{source}\n",
        csv_decimal(&p.x),
        csv_decimal(&p.y),
        csv_decimal(&p.z)
    ));
}

fn linspace(a: &Rat, b: &Rat, n: usize) -> Vec<Rat> {
    match n {
        0 => Vec::new(),
        1 => vec![a.clone()],
        _ => {
            let step = (b - a) / rat_int(n as i64 - 1);
            (0..n).map(|k| a + &step * rat_int(k as i64)).collect()
        }
    }
}
