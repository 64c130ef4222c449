//! Independent brute-force oracles used by the property suites and `selftest`.
//!
//! Nothing here shares code paths with the engines it checks: membership is
//! plain divisibility against the raw generator list.

use crate::monomial::Monomial;

/// Number of exponent vectors in `∏ [0, bounds_i)` not divisible by any of `gens`.
pub fn box_count(gens: &[Monomial], bounds: &[u32]) -> u64 {
    let n = bounds.len();
    if bounds.contains(&0) {
        return 0;
    }
    let mut v = vec![0u32; n];
    let mut total = 0u64;
    loop {
        let inside = gens
            .iter()
            .any(|g| g.exps().iter().zip(&v).all(|(a, b)| a <= b));
        if !inside {
            total += 1;
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == n {
                return total;
            }
            v[k] += 1;
            if v[k] < bounds[k] {
                break;
            }
            v[k] = 0;
            k += 1;
        }
    }
}

/// `C(a, b)` over the integers, zero outside `0 <= b <= a`.
pub fn binomial_by_factorials(a: i64, b: i64) -> i128 {
    if b < 0 || a < b {
        return 0;
    }
    let mut num: i128 = 1;
    let mut den: i128 = 1;
    for k in 0..b {
        num *= i128::from(a - k);
        den *= i128::from(k + 1);
    }
    num / den
}
