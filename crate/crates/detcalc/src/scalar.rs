use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::Rational;

/// Commutative ring element with exact (possibly partial) division.
///
/// Fields report `IS_FIELD = true` and divide by anything nonzero. Integral
/// domains such as polynomial rings only divide when the quotient is exact,
/// which is all that fraction-free elimination needs.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    const IS_FIELD: bool;
    /// Elimination with division is cheaper than fraction-free elimination.
    const PREFER_GAUSS: bool = false;

    /// Exact quotient, or `None` if `rhs` is zero or does not divide `self`.
    fn exact_div(&self, rhs: &Self) -> Option<Self>;

    fn from_i64(n: i64) -> Self;
}

impl Scalar for Rational {
    const IS_FIELD: bool = true;

    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            None
        } else {
            Some(self / rhs)
        }
    }

    fn from_i64(n: i64) -> Self {
        Rational::from_integer(n.into())
    }
}
