//! Exact values of binary Krawtchouk polynomials.

use num_bigint::{BigInt, Sign};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A Krawtchouk value as sign and binary logarithm of its magnitude.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum KrawtchoukValue {
    Zero,
    NonZero { negative: bool, log2_abs: f64 },
}

impl KrawtchoukValue {
    /// `(1/n) log2 |K|`, minus infinity for a zero value.
    pub fn normalized_log2(&self, n: usize) -> f64 {
        match *self {
            KrawtchoukValue::Zero => f64::NEG_INFINITY,
            KrawtchoukValue::NonZero { log2_abs, .. } => log2_abs / n as f64,
        }
    }
}

/// `log2 |v|` of a nonzero integer from its leading 64 bits.
fn log2_big(v: &BigInt) -> f64 {
    let bits = v.bits();
    let shift = bits.saturating_sub(64);
    let top = (v.magnitude() >> shift).to_f64().expect("64-bit mantissa");
    top.log2() + shift as f64
}

/// Exact `K_k(x) = sum_j (-1)^j C(x, j) C(n-x, k-j)` for `0 <= k, x <= n`,
/// via the recurrence `(i+1) K_{i+1} = (n - 2x) K_i - (n - i + 1) K_{i-1}`.
pub fn krawtchouk_exact(n: usize, k: usize, x: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::domain("degree k", k as f64, "[0, n]"));
    }
    if x > n {
        return Err(Error::domain("argument x", x as f64, "[0, n]"));
    }
    let a = BigInt::from(n as i64 - 2 * x as i64);
    let mut prev = BigInt::from(1);
    if k == 0 {
        return Ok(prev);
    }
    let mut cur = a.clone();
    for i in 1..k {
        let next = (&a * &cur - BigInt::from(n - i + 1) * &prev) / BigInt::from(i + 1);
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// [`krawtchouk_exact`] as sign and log-magnitude.
pub fn krawtchouk_value(n: usize, k: usize, x: usize) -> Result<KrawtchoukValue> {
    let v = krawtchouk_exact(n, k, x)?;
    if v.is_zero() {
        return Ok(KrawtchoukValue::Zero);
    }
    Ok(KrawtchoukValue::NonZero {
        negative: v.sign() == Sign::Minus,
        log2_abs: log2_big(&v),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn by_sum(n: i64, k: i64, x: i64) -> BigInt {
        fn c(n: i64, k: i64) -> BigInt {
            if k < 0 || k > n {
                return BigInt::zero();
            }
            (0..k).fold(BigInt::from(1), |acc, i| acc * (n - i) / (i + 1))
        }
        (0..=k)
            .map(|j| {
                let t = c(x, j) * c(n - x, k - j);
                if j % 2 == 0 {
                    t
                } else {
                    -t
                }
            })
            .sum()
    }

    #[test]
    fn matches_explicit_sum() {
        for n in [1usize, 7, 20, 33] {
            for k in 0..=n {
                for x in 0..=n {
                    assert_eq!(
                        krawtchouk_exact(n, k, x).unwrap(),
                        by_sum(n as i64, k as i64, x as i64),
                        "n {n} k {k} x {x}"
                    );
                }
            }
        }
    }

    #[test]
    fn special_values() {
        for x in 0..=10 {
            assert_eq!(krawtchouk_exact(10, 0, x).unwrap(), BigInt::from(1));
        }
        assert_eq!(krawtchouk_exact(10, 3, 0).unwrap(), BigInt::from(120));
        // K_k(n/2) vanishes for odd k.
        assert_eq!(krawtchouk_value(10, 3, 5).unwrap(), KrawtchoukValue::Zero);
        let v = krawtchouk_value(10, 1, 7).unwrap();
        assert_eq!(
            v,
            KrawtchoukValue::NonZero {
                negative: true,
                log2_abs: 2.0
            }
        );
        assert!(krawtchouk_exact(5, 6, 0).is_err());
        assert!(krawtchouk_exact(5, 1, 6).is_err());
    }

    #[test]
    fn log_magnitude_of_large_values() {
        let v = krawtchouk_value(400, 200, 0).unwrap();
        let exact = by_sum(400, 200, 0);
        let KrawtchoukValue::NonZero { log2_abs, .. } = v else {
            panic!()
        };
        assert!((log2_abs - log2_big(&exact)).abs() < 1e-12);
        assert!((log2_abs - 395.351_422_156_915).abs() < 1e-9);
    }
}
