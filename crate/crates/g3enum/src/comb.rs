//! Exact binomial and multinomial coefficients.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)` as a big integer; zero outside the Pascal triangle.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k))
}

/// `n! / (parts_1! ... parts_r!)`; the parts must sum to `n`.
pub fn multinomial(n: u32, parts: &[u32]) -> BigInt {
    debug_assert_eq!(parts.iter().sum::<u32>(), n);
    let mut remaining = i64::from(n);
    let mut acc = BigInt::one();
    for &p in parts {
        acc *= binomial(remaining, i64::from(p));
        remaining -= i64::from(p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(8, 4), BigInt::from(70));
        assert_eq!(binomial(3, 5), BigInt::zero());
        assert_eq!(binomial(3, -1), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(5, &[1, 2, 2]), BigInt::from(30));
        assert_eq!(multinomial(4, &[4]), BigInt::one());
        assert_eq!(multinomial(6, &[2, 2, 2]), BigInt::from(90));
    }
}
