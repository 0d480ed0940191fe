//! Half-integers stored in doubled form.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use super::{ExactError, Rational};

/// A value in `½ℤ`, stored as twice its value so that comparisons and
/// dominance checks are integer operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const HALF: HalfInt = HalfInt { doubled: 1 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };
    pub const THREE_HALVES: HalfInt = HalfInt { doubled: 3 };

    pub const fn from_doubled(doubled: i64) -> Self {
        Self { doubled }
    }

    pub const fn from_integer(v: i64) -> Self {
        Self { doubled: 2 * v }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub fn abs(self) -> Self {
        Self { doubled: self.doubled.abs() }
    }

    pub fn to_rational(self) -> Rational {
        Rational::ratio(self.doubled, 2)
    }

    pub fn try_from_rational(r: &Rational) -> Result<Self, ExactError> {
        let twice = r * &Rational::from_integer(2);
        let v = twice
            .to_integer()
            .ok_or_else(|| ExactError::NotHalfInteger(r.to_string()))?;
        i64::try_from(v)
            .map(Self::from_doubled)
            .map_err(|_| ExactError::NotHalfInteger(r.to_string()))
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled + rhs.doubled }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt { doubled: self.doubled - rhs.doubled }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt { doubled: -self.doubled }
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

impl FromStr for HalfInt {
    type Err = ExactError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HalfInt::try_from_rational(&s.parse::<Rational>()?)
    }
}
