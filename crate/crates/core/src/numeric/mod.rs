//! Exact integer and rational primitives, plus exact sign tests for sums of
//! square roots so that closed-form bounds can be integerized without
//! trusting floating point.

mod rational;
mod surd;

pub use rational::Rational;
pub use surd::SurdSum;

use num_traits::{PrimInt, Signed};

use crate::error::{Error, Result};

/// `⌈a / b⌉` for `a >= 0`, `b >= 1`.
pub fn ceil_div<I: PrimInt>(a: I, b: I) -> Result<I> {
    if b.is_zero() {
        return Err(Error::DivisionByZero);
    }
    if a < I::zero() || b < I::zero() {
        return Err(Error::Domain(
            "ceil_div expects a non-negative numerator and positive divisor".into(),
        ));
    }
    let q = a / b;
    Ok(if (a % b).is_zero() { q } else { q + I::one() })
}

/// `⌊√a⌋`, computed with integer Newton iteration.
pub fn isqrt<I: PrimInt>(a: I) -> Result<I> {
    if a < I::zero() {
        return Err(Error::Domain("square root of a negative integer".into()));
    }
    if a < I::from(2).unwrap() {
        return Ok(a);
    }
    // Start above the root: 2^ceil(bits/2) > sqrt(a).
    let bits = I::zero().count_zeros() - a.leading_zeros();
    let mut x = I::one() << (bits.div_ceil(2) as usize);
    loop {
        let y = (x + a / x) >> 1;
        if y >= x {
            return Ok(x);
        }
        x = y;
    }
}

/// Smallest integer not below `x`.
pub fn rat_ceil<I: PrimInt + Signed + num_integer::Integer>(x: Rational<I>) -> I {
    x.ceil()
}

/// Formats `m / 10^digits` as a fixed-point decimal string.
pub(crate) fn fixed_point(m: i128, digits: u32) -> String {
    if digits == 0 {
        return m.to_string();
    }
    let scale = 10i128.pow(digits);
    let sign = if m < 0 { "-" } else { "" };
    let a = m.unsigned_abs();
    let s = scale as u128;
    format!("{sign}{}.{:0width$}", a / s, a % s, width = digits as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Roots;
    use proptest::prelude::*;

    #[test]
    fn ceil_div_examples() {
        assert_eq!(ceil_div(6u64, 6).unwrap(), 1);
        assert_eq!(ceil_div(7u64, 6).unwrap(), 2);
        assert_eq!(ceil_div(0i64, 5).unwrap(), 0);
        // conic-bundle threshold at n = 3: 3 * ceil(6/4) = 6
        assert_eq!(3 * ceil_div(3u64 + 3, 4).unwrap(), 6);
        assert_eq!(ceil_div(3u64, 0), Err(Error::DivisionByZero));
        assert!(ceil_div(-3i64, 2).is_err());
    }

    #[test]
    fn isqrt_examples() {
        assert_eq!(isqrt(0u64).unwrap(), 0);
        assert_eq!(isqrt(1u64).unwrap(), 1);
        assert_eq!(isqrt(625u64).unwrap(), 25);
        assert_eq!(isqrt(626u64).unwrap(), 25);
        assert_eq!(isqrt(u64::MAX).unwrap(), u32::MAX as u64);
        assert_eq!(isqrt(i128::MAX).unwrap(), i128::MAX.sqrt());
        assert!(matches!(isqrt(-1i32), Err(Error::Domain(_))));
    }

    #[test]
    fn rat_ceil_examples() {
        assert_eq!(rat_ceil(Rational::new(3i64, 2).unwrap()), 2);
        assert_eq!(rat_ceil(Rational::new(2i64, 1).unwrap()), 2);
        assert_eq!(rat_ceil(Rational::new(-1i64, 2).unwrap()), 0);
        assert_eq!(rat_ceil(Rational::new(-3i64, 2).unwrap()), -1);
    }

    #[test]
    fn fixed_point_formatting() {
        assert_eq!(fixed_point(1_357_022, 6), "1.357022");
        assert_eq!(fixed_point(-472_954, 6), "-0.472954");
        assert_eq!(fixed_point(5, 3), "0.005");
        assert_eq!(fixed_point(7, 0), "7");
    }

    proptest! {
        #[test]
        fn ceil_div_matches_floor_formula(a in 0u64..1_000_000_000, b in 1u64..100_000) {
            prop_assert_eq!(ceil_div(a, b).unwrap(), a.div_ceil(b));
        }

        #[test]
        fn isqrt_brackets_root(a in 0u64..u64::MAX) {
            let r = isqrt(a).unwrap() as u128;
            prop_assert!(r * r <= a as u128);
            prop_assert!((r + 1) * (r + 1) > a as u128);
            prop_assert_eq!(r as u64, a.sqrt());
        }

        #[test]
        fn isqrt_round_trip(r in 1u64..4_000_000_000) {
            prop_assert_eq!(isqrt(r * r).unwrap(), r);
            prop_assert_eq!(isqrt(r * r - 1).unwrap(), r - 1);
        }
    }
}
