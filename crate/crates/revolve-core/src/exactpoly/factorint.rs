//! Divisor enumeration for the rational-root test.
//!
//! Trial division handles the small primes; Miller–Rabin plus Pollard's rho
//! take over for whatever cofactor remains, so candidate roots stay correct
//! for coefficients far beyond machine range.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// All positive divisors of `|n|`, ascending. `n` must be nonzero.
pub(crate) fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    assert!(!n.is_zero());
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut push = |p: BigInt, k: u32| {
        if let Some(last) = factors.iter_mut().find(|(q, _)| *q == p) {
            last.1 += k;
        } else {
            factors.push((p, k));
        }
    };

    for p in std::iter::once(2u64).chain((3..100_000u64).step_by(2)) {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut k = 0;
        while (&n % &pb).is_zero() {
            n /= &pb;
            k += 1;
        }
        if k > 0 {
            push(pb, k);
        }
    }
    if n > BigInt::one() {
        let mut stack = vec![n];
        while let Some(m) = stack.pop() {
            if is_probable_prime(&m) {
                push(m, 1);
            } else {
                let d = pollard_rho(&m);
                stack.push(&m / &d);
                stack.push(d);
            }
        }
    }

    let mut divisors = vec![BigInt::one()];
    for (p, k) in factors {
        let mut next = Vec::with_capacity(divisors.len() * (k as usize + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..k {
                acc = &acc * &p;
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors.sort();
    divisors
}

fn is_probable_prime(n: &BigInt) -> bool {
    if n < &BigInt::from(2) {
        return false;
    }
    for p in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let pb = BigInt::from(p);
        if n == &pb {
            return true;
        }
        if (n % &pb).is_zero() {
            return false;
        }
    }
    // Miller-Rabin with the deterministic base set for < 3.3e24; for larger
    // inputs these bases make a false positive astronomically unlikely,
    // and a false positive only costs a missed divisor candidate.
    let one = BigInt::one();
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = BigInt::from(a).modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = BigInt::from(2);
        let mut d = BigInt::one();
        while d == one {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}
