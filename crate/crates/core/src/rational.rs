//! Exact rationals over `i64` with checked arithmetic.
//!
//! Intermediate products are formed in `i128` and reduced before being
//! narrowed back, so a result is only rejected when its lowest-terms form
//! does not fit.

use std::cmp::Ordering;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub const fn integer(n: i64) -> Self {
        Rational { num: n, den: 1 }
    }

    /// Builds `num / den` in lowest terms. Returns `None` when `den == 0`.
    pub fn new(num: i64, den: i64) -> Option<Result<Self>> {
        if den == 0 {
            return None;
        }
        Some(Self::reduce(num as i128, den as i128))
    }

    fn reduce(num: i128, den: i128) -> Result<Self> {
        debug_assert!(den != 0);
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g, den / g);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let num = i64::try_from(num).map_err(|_| Error::overflow())?;
        let den = i64::try_from(den).map_err(|_| Error::overflow())?;
        Ok(Rational { num, den })
    }

    pub fn numer(&self) -> i64 {
        self.num
    }

    pub fn denom(&self) -> i64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn is_one(&self) -> bool {
        self.num == 1 && self.den == 1
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }

    pub fn is_negative(&self) -> bool {
        self.num < 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (rhs.num as i128, rhs.den as i128);
        Self::reduce(a * d + c * b, b * d)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        let (a, b) = (self.num as i128, self.den as i128);
        let (c, d) = (rhs.num as i128, rhs.den as i128);
        Self::reduce(a * d - c * b, b * d)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        Self::reduce(
            self.num as i128 * rhs.num as i128,
            self.den as i128 * rhs.den as i128,
        )
    }

    /// `None` on division by zero.
    pub fn checked_div(self, rhs: Self) -> Option<Result<Self>> {
        if rhs.is_zero() {
            return None;
        }
        Some(Self::reduce(
            self.num as i128 * rhs.den as i128,
            self.den as i128 * rhs.num as i128,
        ))
    }

    pub fn checked_neg(self) -> Result<Self> {
        Self::reduce(-(self.num as i128), self.den as i128)
    }

    pub fn abs(self) -> Result<Self> {
        if self.is_negative() {
            self.checked_neg()
        } else {
            Ok(self)
        }
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::ZERO
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n)
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}
