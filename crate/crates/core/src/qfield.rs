//! Exact arithmetic in the real quadratic field ℚ(√5).

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{Float, One, Zero};

use crate::literal::{self, ParseError};
use crate::scalar::{OrderedField, Overflow, PentagonScalar, RationalScalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum QfieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("value overflows a binary float")]
    Overflow,
}

impl From<Overflow> for QfieldError {
    fn from(_: Overflow) -> Self {
        QfieldError::Overflow
    }
}

/// The value `a + b·√5` with rational `a`, `b`.
///
/// Both components are canonical rationals, so equality and hashing are
/// componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadSqrt5<R> {
    a: R,
    b: R,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl<R: RationalScalar> QuadSqrt5<R> {
    pub fn new(a: R, b: R) -> Self {
        Self { a, b }
    }

    pub fn rational(a: R) -> Self {
        Self { a, b: R::zero() }
    }

    pub fn sqrt5() -> Self {
        Self {
            a: R::zero(),
            b: R::one(),
        }
    }

    /// `(√5 − 1)/2 = 2cos72°`.
    pub fn phi_prime() -> Self {
        Self {
            a: R::from_ratio(-1, 2),
            b: R::from_ratio(1, 2),
        }
    }

    pub fn rational_part(&self) -> &R {
        &self.a
    }

    pub fn sqrt5_part(&self) -> &R {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a − b√5`.
    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// `a² − 5b²`, the product with the conjugate.
    pub fn norm(&self) -> R {
        self.a.clone() * self.a.clone() - R::from_int(5) * self.b.clone() * self.b.clone()
    }

    pub fn apply(&self, other: &Self, op: FieldOp) -> Result<Self, QfieldError> {
        Ok(match op {
            FieldOp::Add => self.clone() + other.clone(),
            FieldOp::Sub => self.clone() - other.clone(),
            FieldOp::Mul => self.clone() * other.clone(),
            FieldOp::Div => self.checked_div(other)?,
        })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, QfieldError> {
        let n = other.norm();
        if n.is_zero() {
            return Err(QfieldError::DivisionByZero);
        }
        let num = self.clone() * other.conjugate();
        Ok(Self {
            a: num.a / n.clone(),
            b: num.b / n,
        })
    }

    pub fn recip(&self) -> Result<Self, QfieldError> {
        Self::one().checked_div(self)
    }

    /// Sign of the real number `a + b√5`.
    ///
    /// When `a` and `b` weakly agree in sign that sign wins; otherwise the
    /// larger of `a²` and `5b²` decides.
    pub fn signum(&self) -> i8 {
        let sa = self.a.sign();
        let sb = self.b.sign();
        if sa * sb >= 0 {
            return if sa != 0 { sa } else { sb };
        }
        let a2 = self.a.clone() * self.a.clone();
        let b2 = R::from_int(5) * self.b.clone() * self.b.clone();
        if sa > 0 {
            (a2 - b2).sign()
        } else {
            (b2 - a2).sign()
        }
    }

    /// Nearest-float evaluation.
    ///
    /// Opposite-signed components are evaluated as `(a² − 5b²)/(a − b√5)`
    /// so no cancellation happens in floating point.
    pub fn to_f64(&self) -> Result<f64, QfieldError> {
        let sqrt5 = 5f64.sqrt();
        let finite = |v: Option<f64>| v.filter(|x| x.is_finite()).ok_or(QfieldError::Overflow);
        let value = if self.a.sign() * self.b.sign() >= 0 {
            finite(self.a.to_f64())? + finite(self.b.to_f64())? * sqrt5
        } else {
            let n = finite(self.norm().to_f64())?;
            let d = finite(self.a.to_f64())? - finite(self.b.to_f64())? * sqrt5;
            n / d
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(QfieldError::Overflow)
        }
    }
}

impl<R: RationalScalar> Zero for QuadSqrt5<R> {
    fn zero() -> Self {
        Self::rational(R::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl<R: RationalScalar> One for QuadSqrt5<R> {
    fn one() -> Self {
        Self::rational(R::one())
    }
}

impl<R: RationalScalar> Add for QuadSqrt5<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl<R: RationalScalar> Sub for QuadSqrt5<R> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl<R: RationalScalar> Mul for QuadSqrt5<R> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let five = R::from_int(5);
        Self {
            a: self.a.clone() * rhs.a.clone() + five * self.b.clone() * rhs.b.clone(),
            b: self.a * rhs.b + self.b * rhs.a,
        }
    }
}

impl<R: RationalScalar> Div for QuadSqrt5<R> {
    type Output = Self;

    /// Panics on a zero divisor; use `checked_div` to get an error instead.
    fn div(self, rhs: Self) -> Self {
        self.checked_div(&rhs).expect("division by zero in ℚ(√5)")
    }
}

impl<R: RationalScalar> Neg for QuadSqrt5<R> {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl<R: RationalScalar> Ord for QuadSqrt5<R> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.clone() - other.clone()).signum().cmp(&0)
    }
}

impl<R: RationalScalar> PartialOrd for QuadSqrt5<R> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<R: RationalScalar> OrderedField for QuadSqrt5<R> {
    fn sign(&self) -> i8 {
        self.signum()
    }

    fn from_int(value: i64) -> Self {
        Self::rational(R::from_int(value))
    }
}

impl<R: RationalScalar> PentagonScalar for QuadSqrt5<R> {
    fn phi_prime() -> Self {
        QuadSqrt5::phi_prime()
    }

    fn to_real<F: Float>(&self) -> Result<F, Overflow> {
        let v = self.to_f64().map_err(|_| Overflow)?;
        F::from(v).filter(|x| x.is_finite()).ok_or(Overflow)
    }
}

impl<R: RationalScalar> fmt::Display for QuadSqrt5<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*s5", self.b)
        } else if self.b.sign() > 0 {
            write!(f, "{}+{}*s5", self.a, self.b)
        } else {
            write!(f, "{}-{}*s5", self.a, -self.b.clone())
        }
    }
}

impl<R: RationalScalar> FromStr for QuadSqrt5<R> {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        literal::parse_complete(s, literal::Cursor::qs5)
    }
}
