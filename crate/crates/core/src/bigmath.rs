//! Arbitrary-precision helpers shared by the other modules.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::f64::consts::LN_2;

/// `n!` as an exact integer.
pub fn factorial(n: usize) -> BigUint {
    (2..=n as u64).fold(BigUint::one(), |acc, k| acc * k)
}

/// `0!, 1!, ..., n!`.
pub fn factorial_table(n: usize) -> Vec<BigUint> {
    let mut table = Vec::with_capacity(n + 1);
    let mut acc = BigUint::one();
    table.push(acc.clone());
    for k in 1..=n as u64 {
        acc *= k;
        table.push(acc.clone());
    }
    table
}

/// Natural logarithm of a nonnegative big integer.
///
/// Uses the exact bit length plus the leading 64 bits, so the result keeps
/// full double precision regardless of magnitude. `ln 0` is `-inf`.
pub fn ln_biguint(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return (x.to_u64().unwrap() as f64).ln();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().unwrap();
    (top as f64).ln() + shift as f64 * LN_2
}

/// Natural logarithm of a positive rational. Returns NaN for negative input.
pub fn ln_rational(x: &BigRational) -> f64 {
    if x.is_negative() {
        return f64::NAN;
    }
    let num = x.numer().magnitude();
    let den = x.denom().magnitude();
    ln_biguint(num) - ln_biguint(den)
}

/// Real value of an exact rational, through logarithms so huge numerators and
/// denominators never overflow.
pub fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let magnitude = ln_rational(&x.abs()).exp();
    if x.is_negative() {
        -magnitude
    } else {
        magnitude
    }
}

/// `base^exp` for a rational base and signed exponent.
pub fn rational_pow(base: &BigRational, exp: i64) -> BigRational {
    let mut result = BigRational::one();
    let b = if exp < 0 { base.recip() } else { base.clone() };
    for _ in 0..exp.unsigned_abs() {
        result *= &b;
    }
    result
}

/// Exact integer square root when `x` is a perfect square.
pub fn exact_sqrt(x: &BigUint) -> Option<BigUint> {
    let r = x.sqrt();
    (&r * &r == *x).then_some(r)
}

pub fn to_bigint(x: &BigUint) -> BigInt {
    BigInt::from(x.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_factorials() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(5), BigUint::from(120u32));
        let table = factorial_table(20);
        assert_eq!(table[20], BigUint::from(2_432_902_008_176_640_000u64));
        assert_eq!(table.len(), 21);
    }

    #[test]
    fn ln_matches_float_conversion() {
        // to_f64 on BigUint is correctly rounded; it is an independent route
        // for values below the f64 range.
        for n in [1usize, 2, 10, 21, 50, 100, 150] {
            let f = factorial(n);
            let expected = f.to_f64().unwrap().ln();
            let got = ln_biguint(&f);
            let rel = if expected == 0.0 {
                got.abs()
            } else {
                ((got - expected) / expected).abs()
            };
            assert!(rel < 1e-12, "n = {n}: {got} vs {expected}");
        }
    }

    #[test]
    fn ln_beyond_f64_range() {
        // ln(1000!) via the sum of logs.
        let expected: f64 = (1..=1000).map(|k| (k as f64).ln()).sum();
        let got = ln_biguint(&factorial(1000));
        assert!(((got - expected) / expected).abs() < 1e-12);
    }

    #[test]
    fn ln_zero_is_negative_infinity() {
        assert_eq!(ln_biguint(&BigUint::zero()), f64::NEG_INFINITY);
    }

    #[test]
    fn sqrt_detects_squares() {
        assert_eq!(exact_sqrt(&BigUint::from(81u32)), Some(BigUint::from(9u32)));
        assert_eq!(exact_sqrt(&BigUint::from(27u32)), None);
    }

    #[test]
    fn rational_power() {
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(rational_pow(&half, 3), BigRational::new(1.into(), 8.into()));
        assert_eq!(rational_pow(&half, -2), BigRational::from_integer(4.into()));
    }
}
