use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{Float, NumCast, One, Signed, ToPrimitive, Zero};

/// A real number of the form `(a + Σ cᵢ·√rᵢ) / den` with at most two radical
/// terms, integer coefficients and non-negative radicands.
///
/// Comparisons against rationals are decided exactly by repeated squaring, so
/// ceilings and down-rounded decimals never depend on floating-point error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SurdSum {
    rational: BigInt,
    terms: Vec<(BigInt, BigInt)>,
    den: BigInt,
}

impl SurdSum {
    /// Panics if `den <= 0`, a radicand is negative, or more than two radical
    /// terms are given.
    pub fn new(rational: i128, terms: &[(i128, i128)], den: i128) -> Self {
        assert!(den > 0, "surd denominator must be positive");
        assert!(terms.len() <= 2, "at most two radical terms are supported");
        assert!(terms.iter().all(|&(_, r)| r >= 0), "negative radicand");
        SurdSum {
            rational: BigInt::from(rational),
            terms: terms
                .iter()
                .map(|&(c, r)| (BigInt::from(c), BigInt::from(r)))
                .collect(),
            den: BigInt::from(den),
        }
    }

    pub fn to_float<F: Float>(&self) -> F {
        let cast = |x: &BigInt| -> F { NumCast::from(x.to_f64().unwrap_or(f64::NAN)).unwrap() };
        let mut acc = cast(&self.rational);
        for (c, r) in &self.terms {
            acc = acc + cast(c) * cast(r).sqrt();
        }
        acc / cast(&self.den)
    }

    pub fn to_f64(&self) -> f64 {
        self.to_float::<f64>()
    }

    /// Exact comparison of `self` with `num / den` (`den > 0`).
    pub fn cmp_ratio(&self, num: &BigInt, den: &BigInt) -> Ordering {
        // sign(den·(a + Σ) − num·self.den)
        let a = den * &self.rational - num * &self.den;
        let terms: Vec<(BigInt, BigInt)> = self
            .terms
            .iter()
            .map(|(c, r)| (den * c, r.clone()))
            .collect();
        match terms.as_slice() {
            [] => a.sign_ordering(),
            [(b, p)] => sign1(&a, b, p),
            [(b, p), (c, q)] => sign2(&a, b, p, c, q),
            _ => unreachable!(),
        }
    }

    pub fn cmp_integer(&self, k: i128) -> Ordering {
        self.cmp_ratio(&BigInt::from(k), &BigInt::one())
    }

    /// Smallest integer `k` with `self <= k`.
    pub fn ceil(&self) -> i128 {
        let mut k = estimate(self.to_f64().ceil());
        while self.cmp_integer(k) == Ordering::Greater {
            k += 1;
        }
        while self.cmp_integer(k - 1) != Ordering::Greater {
            k -= 1;
        }
        k
    }

    /// Largest `m` with `m / scale <= self`.
    pub fn floor_scaled(&self, scale: i128) -> i128 {
        assert!(scale > 0);
        let s = BigInt::from(scale);
        let le = |m: i128| self.cmp_ratio(&BigInt::from(m), &s) != Ordering::Less;
        let mut m = estimate((self.to_f64() * scale as f64).floor());
        while !le(m) {
            m -= 1;
        }
        while le(m + 1) {
            m += 1;
        }
        m
    }

    /// Decimal string with `digits` fractional digits, rounded down.
    pub fn to_decimal_floor(&self, digits: u32) -> String {
        super::fixed_point(self.floor_scaled(10i128.pow(digits)), digits)
    }
}

fn estimate(x: f64) -> i128 {
    if x.is_finite() {
        x as i128
    } else {
        0
    }
}

trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

fn radical_sign(c: &BigInt, r: &BigInt) -> Ordering {
    if r.is_zero() {
        Ordering::Equal
    } else {
        c.sign_ordering()
    }
}

/// sign(a + b·√p)
fn sign1(a: &BigInt, b: &BigInt, p: &BigInt) -> Ordering {
    let sa = a.sign_ordering();
    let sb = radical_sign(b, p);
    if sb == Ordering::Equal || sa == sb {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    match (a * a).cmp(&(b * b * p)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// sign(a + b·√p + c·√q)
fn sign2(a: &BigInt, b: &BigInt, p: &BigInt, c: &BigInt, q: &BigInt) -> Ordering {
    let su = sign1(a, b, p);
    let sv = radical_sign(c, q);
    if sv == Ordering::Equal || su == sv {
        return su;
    }
    if su == Ordering::Equal {
        return sv;
    }
    // compare |u| with |v| via u² − v² = (a² + b²p − c²q) + 2ab·√p
    let rest = a * a + b * b * p - c * c * q;
    let two_ab = BigInt::from(2) * a * b;
    match sign1(&rest, &two_ab, p) {
        Ordering::Greater => su,
        Ordering::Less => sv,
        Ordering::Equal => Ordering::Equal,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn perfect_squares_are_exact() {
        // (−6 + √144)/6 = 1
        let cy = SurdSum::new(-6, &[(1, 144)], 6);
        assert_eq!(cy.cmp_integer(1), Ordering::Equal);
        assert_eq!(cy.ceil(), 1);
        assert_eq!(cy.to_decimal_floor(6), "1.000000");
    }

    #[test]
    fn irrational_values() {
        // √450/9 − 1 = (−9 + √450)/9
        let v = SurdSum::new(-9, &[(1, 450)], 9);
        assert!((v.to_f64() - (450f64.sqrt() / 9.0 - 1.0)).abs() < 1e-15);
        assert_eq!(v.ceil(), 2);
        assert_eq!(v.to_decimal_floor(6), "1.357022");
        let neg = SurdSum::new(-9, &[(1, 22)], 9);
        assert_eq!(neg.ceil(), 0);
        assert_eq!(neg.to_decimal_floor(3), "-0.479");
    }

    #[test]
    fn two_radicals() {
        // √8 + √18 = 5√2
        let v = SurdSum::new(0, &[(1, 8), (1, 18)], 1);
        assert_eq!(v.cmp_ratio(&BigInt::from(0), &BigInt::from(1)), Ordering::Greater);
        // compare with 7.0710678 (5√2 ≈ 7.0710678118)
        assert_eq!(v.cmp_ratio(&BigInt::from(70710678), &BigInt::from(10_000_000)), Ordering::Greater);
        assert_eq!(v.cmp_ratio(&BigInt::from(70710679), &BigInt::from(10_000_000)), Ordering::Less);
        // √8 − √2 − √2 = 0
        let z = SurdSum::new(0, &[(1, 8), (-2, 2)], 1);
        assert_eq!(z.cmp_integer(0), Ordering::Equal);
    }

    proptest! {
        #[test]
        fn sign_agrees_with_float_when_well_separated(
            a in -1000i128..1000, b in -50i128..50, p in 0i128..1000,
            c in -50i128..50, q in 0i128..1000, k in -200i128..200,
        ) {
            let s = SurdSum::new(a, &[(b, p), (c, q)], 7);
            let x = s.to_f64() - k as f64;
            if x.abs() > 1e-9 {
                let expect = if x > 0.0 { Ordering::Greater } else { Ordering::Less };
                prop_assert_eq!(s.cmp_integer(k), expect);
            }
        }

        #[test]
        fn ceil_and_floor_bracket(a in -1000i128..1000, b in -50i128..50, p in 0i128..5000) {
            let s = SurdSum::new(a, &[(b, p)], 3);
            let c = s.ceil();
            prop_assert!(s.cmp_integer(c) != Ordering::Greater);
            prop_assert_eq!(s.cmp_integer(c - 1), Ordering::Greater);
            let m = s.floor_scaled(1000);
            prop_assert!(s.cmp_ratio(&BigInt::from(m), &BigInt::from(1000)) != Ordering::Less);
            prop_assert_eq!(s.cmp_ratio(&BigInt::from(m + 1), &BigInt::from(1000)), Ordering::Less);
        }
    }
}
