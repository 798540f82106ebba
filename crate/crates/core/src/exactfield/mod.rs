//! Exact scalars: rationals, the multiquadratic field generated over ℚ by the
//! square roots of all positive integers, and complex numbers over it.
//!
//! Every element of the real field is stored as `Σ q_n·√n` with `n` running over
//! square-free positive integers. The family `{√n : n square-free}` is linearly
//! independent over ℚ, so this representation is canonical and equality is a
//! plain comparison of term lists.

mod complex;
mod real;
mod sqrt;
pub mod text;

pub use complex::ComplexScalar;
pub use real::FieldScalar;
pub use sqrt::{adjoin_sqrt, sqrt_in_field, square_free_part};

use num_rational::BigRational;
use std::fmt::{Debug, Display};
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

pub type Rational = BigRational;

/// Exact commutative field used by the generic linear algebra and polynomial code.
pub trait Field:
    Sized
    + Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool {
        *self == Self::one()
    }
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: Rational) -> Self;
    /// The value as a rational number, if it is one.
    fn to_rational(&self) -> Option<Rational>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    fn mul_ref(&self, other: &Self) -> Self {
        let mut t = self.clone();
        t *= other;
        t
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut t = self.clone();
        t += other;
        t
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut t = self.clone();
        t -= other;
        t
    }

    fn div_ref(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.mul_ref(&i))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("square root of a non-positive value {0}")]
    NotPositive(String),
    #[error("square root requested of a non-rational element {0}")]
    NotRational(String),
    #[error("radicand {0} exceeds the supported range")]
    RadicandTooLarge(String),
    #[error("cannot parse scalar `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("expected a real scalar, got {0}")]
    NotReal(String),
}
