//! Exact binomial coefficients with the convention `C(a, b) = 0` for `a < b`
//! or `a < 0`, which the shadow and operator formulas rely on throughout.

use num_bigint::BigUint;
use num_traits::{One, Zero};

/// `C(top, k)` over the integers, zero whenever `top < k` or `top < 0`.
pub fn binomial(top: i64, k: u32) -> BigUint {
    if top < 0 || top < k as i64 {
        return BigUint::zero();
    }
    binomial_big(&BigUint::from(top as u64), k)
}

/// `C(top, k)` for an arbitrary-precision top argument.
pub fn binomial_big(top: &BigUint, k: u32) -> BigUint {
    if *top < BigUint::from(k) {
        return BigUint::zero();
    }
    let mut res = BigUint::one();
    // Each partial product is divisible by i + 1, so division stays exact.
    for i in 0..u64::from(k) {
        res = res * (top - BigUint::from(i)) / BigUint::from(i + 1);
    }
    res
}

/// Largest `m >= k` with `C(m, k) <= bound`, or `None` when `bound` is zero.
pub fn max_top_within(k: u32, bound: &BigUint) -> Option<BigUint> {
    // k = 0 has no largest m (C(m, 0) = 1 for every m); bound = 0 has none at all.
    if k == 0 || bound.is_zero() {
        return None;
    }
    if k == 1 {
        return Some(bound.clone());
    }
    let mut lo = BigUint::from(k); // C(k, k) = 1 <= bound
    let mut hi = lo.clone() + 1u32;
    while binomial_big(&hi, k) <= *bound {
        lo = hi.clone();
        hi *= 2u32;
    }
    // Invariant: C(lo, k) <= bound < C(hi, k).
    while &lo + 1u32 < hi {
        let mid = (&lo + &hi) / 2u32;
        if binomial_big(&mid, k) <= *bound {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(lo)
}
