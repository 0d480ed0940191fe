//! Gaussian rationals `a + b·i` with `a, b` rational.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use super::{ExactError, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ComplexRational {
    pub re: Rational,
    pub im: Rational,
}

impl ComplexRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(Rational::one())
    }

    pub fn i() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn from_integer(v: i64) -> Self {
        Self::real(Rational::from_integer(v))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|z|²`, always a nonnegative rational.
    pub fn norm_sqr(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self::new(&self.re * k, &self.im * k)
    }

    pub fn recip(&self) -> Result<Self, ExactError> {
        let n = self.norm_sqr().recip()?;
        Ok(self.conj().scale(&n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ExactError> {
        Ok(self * &rhs.recip()?)
    }
}

impl From<Rational> for ComplexRational {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl<'a> Add<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: &'a ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a> Sub<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: &'a ComplexRational) -> ComplexRational {
        ComplexRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a> Mul<&'a ComplexRational> for &'a ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: &'a ComplexRational) -> ComplexRational {
        // most matrix entries in this crate are purely real or purely imaginary
        match (self.im.is_zero(), rhs.im.is_zero()) {
            (true, true) => ComplexRational::real(&self.re * &rhs.re),
            (true, false) => ComplexRational::new(&self.re * &rhs.re, &self.re * &rhs.im),
            (false, true) => ComplexRational::new(&self.re * &rhs.re, &self.im * &rhs.re),
            (false, false) => ComplexRational::new(
                &self.re * &rhs.re - &self.im * &rhs.im,
                &self.re * &rhs.im + &self.im * &rhs.re,
            ),
        }
    }
}

impl Neg for &ComplexRational {
    type Output = ComplexRational;
    fn neg(self) -> ComplexRational {
        ComplexRational::new(-&self.re, -&self.im)
    }
}

impl Add for ComplexRational {
    type Output = ComplexRational;
    fn add(self, rhs: ComplexRational) -> ComplexRational {
        &self + &rhs
    }
}

impl Sub for ComplexRational {
    type Output = ComplexRational;
    fn sub(self, rhs: ComplexRational) -> ComplexRational {
        &self - &rhs
    }
}

impl Mul for ComplexRational {
    type Output = ComplexRational;
    fn mul(self, rhs: ComplexRational) -> ComplexRational {
        &self * &rhs
    }
}

impl AddAssign<&ComplexRational> for ComplexRational {
    fn add_assign(&mut self, rhs: &ComplexRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl fmt::Display for ComplexRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => write!(f, "{}i", self.im),
            (false, false) if self.im.is_negative() => {
                write!(f, "{}-{}i", self.re, -&self.im)
            }
            (false, false) => write!(f, "{}+{}i", self.re, self.im),
        }
    }
}
