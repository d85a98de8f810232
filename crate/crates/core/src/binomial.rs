//! Exact binomial coefficients over big integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(a, b)` with the conventions used throughout: `C(a, 0) = 1` for every
/// `a` (including negative), and `C(a, b) = 0` when `b < 0` or `b > a >= 0`
/// or `a < 0 < b`.
pub fn binomial(a: i64, b: i64) -> BigInt {
    if b < 0 {
        return BigInt::zero();
    }
    if b == 0 {
        return BigInt::one();
    }
    if a < 0 || b > a {
        return BigInt::zero();
    }
    // Walk the row multiplicatively; every intermediate division is exact.
    let b = b.min(a - b);
    let mut c = BigInt::one();
    for i in 0..b {
        c = c * BigInt::from(a - i) / BigInt::from(i + 1);
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(10, 3), BigInt::from(120));
        assert_eq!(binomial(7, 0), BigInt::one());
        assert_eq!(binomial(7, 7), BigInt::one());
    }

    #[test]
    fn conventions() {
        assert_eq!(binomial(-1, 0), BigInt::one());
        assert_eq!(binomial(-1, 2), BigInt::zero());
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
    }

    #[test]
    fn pascal_rule_holds() {
        for a in 1..40i64 {
            for b in 1..a {
                assert_eq!(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b));
            }
        }
    }
}
