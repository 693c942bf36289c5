//! The ground field: arbitrary-precision rationals.
//!
//! `Rat` is always kept in canonical reduced form (coprime numerator and
//! denominator, positive denominator, zero as `0/1`); `num_rational`
//! maintains that invariant on every construction.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rat = num_rational::BigRational;

/// `n/d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Canonical text form: `"num"` when the denominator is 1, `"num/den"`
/// otherwise. This is the representation used in every JSON report.
pub fn rat_to_string(x: &Rat) -> String {
    x.to_string()
}

/// Parses `"n"` or `"n/d"` (optionally signed) into a reduced rational.
pub fn rat_from_str(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    s.parse::<Rat>().map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Best `f64` approximation of `x`, robust to numerators and denominators
/// that individually overflow `f64`.
pub fn rat_to_f64(x: &Rat) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    // Scale so the integer quotient keeps 64 extra bits of precision.
    let shifted = x.numer() << 128u32;
    let q = shifted / x.denom();
    match q.to_f64() {
        Some(v) => v / 2f64.powi(128),
        None => f64::INFINITY * (if x.is_negative() { -1.0 } else { 1.0 }),
    }
}

/// Exact decimal rendering of `x` with `sig` significant digits.
///
/// Positional notation while the exponent is moderate, scientific notation
/// otherwise; rounding is half-away-from-zero on the exact value, so the
/// output is deterministic and independent of floating point.
pub fn rat_to_decimal(x: &Rat, sig: usize) -> String {
    assert!(sig > 0);
    if x.is_zero() {
        return "0".to_string();
    }
    let neg = x.is_negative();
    let num = x.numer().abs();
    let den = x.denom().clone();

    // exponent e with 10^e <= |x| < 10^(e+1)
    let mut e = num.to_string().len() as i64 - den.to_string().len() as i64;
    let pow10 = |k: u32| BigInt::from(10u32).pow(k);
    let magnitude = |e: i64| -> (BigInt, BigInt) {
        // compares |x| against 10^e: returns (num * 10^max(0,-e), den * 10^max(0,e))
        if e >= 0 {
            (num.clone(), &den * pow10(e as u32))
        } else {
            (&num * pow10((-e) as u32), den.clone())
        }
    };
    loop {
        let (a, b) = magnitude(e);
        if a < b {
            e -= 1;
            continue;
        }
        let (a2, b2) = magnitude(e + 1);
        if a2 >= b2 {
            e += 1;
            continue;
        }
        break;
    }

    // mantissa = round(|x| * 10^(sig-1-e)), an integer with `sig` digits
    let shift = sig as i64 - 1 - e;
    let (mut a, b) = if shift >= 0 {
        (&num * pow10(shift as u32), den.clone())
    } else {
        (num.clone(), &den * pow10((-shift) as u32))
    };
    // half-away-from-zero
    a = (&a * 2 + &b) / (&b * 2);
    let mut digits = a.to_string();
    if digits.len() > sig {
        // rounding carried over (e.g. 9.99... -> 10.0...)
        e += 1;
        digits.truncate(sig);
    }
    debug_assert_eq!(digits.len(), sig);

    let sign = if neg { "-" } else { "" };
    if (-4..16).contains(&e) {
        if e >= 0 {
            let point = (e + 1) as usize;
            if point >= digits.len() {
                let zeros = "0".repeat(point - digits.len());
                format!("{sign}{digits}{zeros}")
            } else {
                format!("{sign}{}.{}", &digits[..point], &digits[point..])
            }
        } else {
            let zeros = "0".repeat((-e - 1) as usize);
            format!("{sign}0.{zeros}{digits}")
        }
    } else {
        format!("{sign}{}.{}e{}", &digits[..1], &digits[1..], e)
    }
}
