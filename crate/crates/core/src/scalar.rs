//! Coefficient rings.
//!
//! Everything in [`crate::poly`] is generic over a [`Scalar`]. The library
//! itself works over [`crate::Rational`]; [`num_bigint::BigInt`] and the
//! machine integers also satisfy the bound and are used where exact division
//! is never needed (Hankel minors, for instance).

use std::fmt::Debug;
use std::ops::{AddAssign, Mul, Neg, Sub};

use num_traits::{FromPrimitive, One, Zero};

/// A commutative ring with a total-enough order for sign checks.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + PartialOrd
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn mul_ref(&self, other: &Self) -> Self;
    fn add_assign_ref(&mut self, other: &Self);

    fn from_i64_exact(v: i64) -> Self {
        Self::from_i64(v).expect("integer is representable in the coefficient ring")
    }

    fn is_negative(&self) -> bool {
        *self < Self::zero()
    }
}

impl<T> Scalar for T
where
    T: Clone
        + Debug
        + PartialEq
        + PartialOrd
        + Zero
        + One
        + Neg<Output = T>
        + Sub<Output = T>
        + FromPrimitive
        + Send
        + Sync
        + 'static
        + for<'a> AddAssign<&'a T>,
    for<'a, 'b> &'a T: Mul<&'b T, Output = T>,
{
    #[inline]
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }

    #[inline]
    fn add_assign_ref(&mut self, other: &Self) {
        *self += other;
    }
}

/// A [`Scalar`] with exact division by nonzero elements.
pub trait FieldScalar: Scalar + std::ops::Div<Output = Self> {}

impl<T> FieldScalar for T where T: Scalar + std::ops::Div<Output = T> {}
