//! Arithmetic in `F_p` for primes below `2^31`.

use crate::error::{Error, Result};
use crate::poly::Polynomial;

pub const DEFAULT_PRIME: u64 = 32003;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates a characteristic for the local engine.
pub fn check_prime(p: u64) -> Result<u32> {
    if p >= 1 << 31 || !is_prime(p) {
        return Err(Error::BadCharacteristic(p));
    }
    Ok(p as u32)
}

#[inline]
pub fn reduce(c: i64, p: u32) -> u32 {
    c.rem_euclid(i64::from(p)) as u32
}

#[inline]
pub fn add(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) + u64::from(b)) % u64::from(p)) as u32
}

#[inline]
pub fn mul(a: u32, b: u32, p: u32) -> u32 {
    ((u64::from(a) * u64::from(b)) % u64::from(p)) as u32
}

#[inline]
pub fn neg(a: u32, p: u32) -> u32 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn inv(a: u32, p: u32) -> u32 {
    debug_assert!(a != 0);
    pow(a, p - 2, p)
}

pub fn pow(mut a: u32, mut e: u32, p: u32) -> u32 {
    let mut r = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a, p);
        }
        a = mul(a, a, p);
        e >>= 1;
    }
    r
}

/// Symmetric representative in `(-p/2, p/2]`, used for display.
pub fn lift(a: u32, p: u32) -> i64 {
    let a = i64::from(a);
    let p = i64::from(p);
    if a > p / 2 {
        a - p
    } else {
        a
    }
}

/// Reduces the coefficients of `poly` modulo `p` to symmetric representatives.
pub fn reduce_polynomial(poly: &Polynomial, p: u32) -> Result<Polynomial> {
    Polynomial::from_terms(
        poly.nvars(),
        poly.terms()
            .iter()
            .map(|(m, c)| (m.clone(), lift(reduce(*c, p), p))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
        assert!(check_prime(0).is_err());
        assert!(check_prime(4).is_err());
    }

    #[test]
    fn inverse() {
        let p = 32003;
        for a in [1, 2, 3, 1000, 32002] {
            assert_eq!(mul(a, inv(a, p), p), 1);
        }
        assert_eq!(lift(32002, p), -1);
        assert_eq!(reduce(-1, p), 32002);
    }
}
