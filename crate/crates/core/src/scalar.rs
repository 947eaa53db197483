//! Scalar abstractions shared by the exact models and the float layer.
//!
//! The incidence models only need an ordered field: exact rationals,
//! exact `a + b√5`, or a binary float when a quick approximate model is
//! wanted. The pentagon models additionally need the constant
//! `2cos72° = (√5 − 1)/2` and an embedding into the reals.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Float, FromPrimitive, One, Signed, ToPrimitive, Zero};

/// An ordered field with an exact sign test.
pub trait OrderedField:
    Clone
    + PartialEq
    + PartialOrd
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Returns -1, 0 or +1.
    fn sign(&self) -> i8;

    fn from_int(value: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn is_positive_value(&self) -> bool {
        self.sign() > 0
    }

    fn is_negative_value(&self) -> bool {
        self.sign() < 0
    }
}

/// Exact rationals usable as the coordinate field of `QuadSqrt5`.
pub trait RationalScalar: OrderedField + Ord + Hash + FromStr + ToPrimitive {}

impl<I> OrderedField for Ratio<I>
where
    I: Clone + Integer + Signed + FromPrimitive + Debug + Display,
{
    fn sign(&self) -> i8 {
        if self.is_zero() {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn from_int(value: i64) -> Self {
        Ratio::from_integer(I::from_i64(value).expect("integer out of range for scalar"))
    }
}

impl<I> RationalScalar for Ratio<I>
where
    I: Clone + Integer + Signed + FromPrimitive + Debug + Display + Hash + FromStr,
    Ratio<I>: ToPrimitive,
{
}

macro_rules! float_field {
    ($t:ty) => {
        impl OrderedField for $t {
            fn sign(&self) -> i8 {
                if *self > 0.0 {
                    1
                } else if *self < 0.0 {
                    -1
                } else {
                    0
                }
            }

            fn from_int(value: i64) -> Self {
                value as $t
            }
        }
    };
}

float_field!(f32);
float_field!(f64);

/// Raised when an exact value does not fit the target float type.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("value overflows the target float type")]
pub struct Overflow;

/// An ordered field containing `2cos72°`, the coefficient of the height
/// recurrence over the regular pentagon.
pub trait PentagonScalar: OrderedField {
    /// `2cos72° = (√5 − 1)/2`.
    fn phi_prime() -> Self;

    fn to_real<F: Float>(&self) -> Result<F, Overflow>;
}

impl PentagonScalar for f64 {
    fn phi_prime() -> Self {
        (5f64.sqrt() - 1.0) / 2.0
    }

    fn to_real<F: Float>(&self) -> Result<F, Overflow> {
        F::from(*self).filter(|v| v.is_finite()).ok_or(Overflow)
    }
}

impl PentagonScalar for f32 {
    fn phi_prime() -> Self {
        (5f32.sqrt() - 1.0) / 2.0
    }

    fn to_real<F: Float>(&self) -> Result<F, Overflow> {
        F::from(*self).filter(|v| v.is_finite()).ok_or(Overflow)
    }
}
