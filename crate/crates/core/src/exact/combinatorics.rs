use num_bigint::BigInt;
use num_traits::{One, Zero};

/// `C(n, k)`, zero outside `0 ≤ k ≤ n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        // acc·(n−i)/(i+1) stays integral at every step
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n!! = n·(n−2)·…`, with `0!! = 1!! = 1`.
pub fn double_factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    let mut m = n;
    while m > 1 {
        acc *= m;
        m -= 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 0), BigInt::from(1));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(double_factorial(7), BigInt::from(105));
        assert_eq!(double_factorial(8), BigInt::from(384));
        assert_eq!(double_factorial(0), BigInt::from(1));
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40 {
            for k in 1..n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }
}
