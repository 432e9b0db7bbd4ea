use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{Float, NumCast, PrimInt, Signed};

use crate::error::{Error, Result};

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Arithmetic is exact as long as the intermediate products fit in `I`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational<I> {
    num: I,
    den: I,
}

impl<I: PrimInt + Signed + Integer> Rational<I> {
    pub fn new(num: I, den: I) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_integer(n: I) -> Self {
        Rational { num: n, den: I::one() }
    }

    pub fn zero() -> Self {
        Self::from_integer(I::zero())
    }

    fn reduced(num: I, den: I) -> Self {
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_zero() { (num, den) } else { (num / g, den / g) };
        if den < I::zero() {
            num = -num;
            den = -den;
        }
        if num.is_zero() {
            den = I::one();
        }
        Rational { num, den }
    }

    pub fn numer(&self) -> I {
        self.num
    }

    pub fn denom(&self) -> I {
        self.den
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn ceil(&self) -> I {
        self.num.div_ceil(&self.den)
    }

    pub fn floor(&self) -> I {
        self.num.div_floor(&self.den)
    }

    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if rhs.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduced(self.num * rhs.den, self.den * rhs.num))
    }

    pub fn to_float<F: Float>(&self) -> F {
        let num: F = NumCast::from(self.num).unwrap_or_else(F::nan);
        let den: F = NumCast::from(self.den).unwrap_or_else(F::nan);
        num / den
    }

    pub fn min(self, other: Self) -> Self {
        if other < self {
            other
        } else {
            self
        }
    }
}

impl<I: PrimInt + Signed + Integer> From<I> for Rational<I> {
    fn from(n: I) -> Self {
        Self::from_integer(n)
    }
}

impl<I: PrimInt + Signed + Integer> Ord for Rational<I> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num * other.den).cmp(&(other.num * self.den))
    }
}

impl<I: PrimInt + Signed + Integer> PartialOrd for Rational<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: PrimInt + Signed + Integer> Add for Rational<I> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let l = self.den.lcm(&rhs.den);
        Self::reduced(self.num * (l / self.den) + rhs.num * (l / rhs.den), l)
    }
}

impl<I: PrimInt + Signed + Integer> Sub for Rational<I> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<I: PrimInt + Signed + Integer> Neg for Rational<I> {
    type Output = Self;
    fn neg(self) -> Self {
        Rational { num: -self.num, den: self.den }
    }
}

impl<I: PrimInt + Signed + Integer> Mul for Rational<I> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // cross-cancel first to keep products small
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let g1 = if g1.is_zero() { I::one() } else { g1 };
        let g2 = if g2.is_zero() { I::one() } else { g2 };
        Self::reduced(
            (self.num / g1) * (rhs.num / g2),
            (self.den / g2) * (rhs.den / g1),
        )
    }
}

impl<I: PrimInt + Signed + Integer> Div for Rational<I> {
    type Output = Self;
    /// Panics on division by zero; see [`Rational::checked_div`].
    fn div(self, rhs: Self) -> Self {
        self.checked_div(rhs).expect("rational division by zero")
    }
}

impl<I: PrimInt + Signed + Integer + fmt::Display> fmt::Display for Rational<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl<I: PrimInt + Signed + Integer + FromStr> FromStr for Rational<I> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parse = |t: &str| {
            t.trim()
                .parse::<I>()
                .map_err(|_| Error::InvalidArgument(format!("not a rational: {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Rational::new(parse(n)?, parse(d)?),
            None => Ok(Rational::from_integer(parse(s)?)),
        }
    }
}
