use super::{Field, FieldScalar, Rational};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// `re + ı·im` with both parts in the real multiquadratic field.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ComplexScalar {
    pub re: FieldScalar,
    pub im: FieldScalar,
}

impl ComplexScalar {
    pub fn new(re: FieldScalar, im: FieldScalar) -> Self {
        ComplexScalar { re, im }
    }

    pub fn real(re: FieldScalar) -> Self {
        ComplexScalar { re, im: FieldScalar::default() }
    }

    pub fn imag_unit() -> Self {
        ComplexScalar { re: FieldScalar::default(), im: FieldScalar::from_integer(1) }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(FieldScalar::from_integer(n))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::real(FieldScalar::from_ratio(p, q))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        ComplexScalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `|z|² = re² + im²`.
    pub fn norm_sqr(&self) -> FieldScalar {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn mul_i(&self) -> Self {
        ComplexScalar { re: -self.im.clone(), im: self.re.clone() }
    }

    pub fn scale_real(&self, r: &FieldScalar) -> Self {
        ComplexScalar { re: &self.re * r, im: &self.im * r }
    }
}

impl Field for ComplexScalar {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_integer(1)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn is_one(&self) -> bool {
        self.im.is_zero() && Field::is_one(&self.re)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm_sqr().inverse()?;
        Some(ComplexScalar { re: &self.re * &n, im: -(&self.im * &n) })
    }
    fn from_rational(q: Rational) -> Self {
        Self::real(FieldScalar::from_rational(q))
    }
    fn to_rational(&self) -> Option<Rational> {
        if self.im.is_zero() { self.re.to_rational() } else { None }
    }
}

impl From<FieldScalar> for ComplexScalar {
    fn from(re: FieldScalar) -> Self {
        ComplexScalar::real(re)
    }
}

impl From<i64> for ComplexScalar {
    fn from(n: i64) -> Self {
        ComplexScalar::from_integer(n)
    }
}

impl fmt::Debug for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ComplexScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_complex(self))
    }
}

impl<'a> AddAssign<&'a ComplexScalar> for ComplexScalar {
    fn add_assign(&mut self, rhs: &'a ComplexScalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl<'a> SubAssign<&'a ComplexScalar> for ComplexScalar {
    fn sub_assign(&mut self, rhs: &'a ComplexScalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl<'a> Mul<&'a ComplexScalar> for &'a ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: &'a ComplexScalar) -> ComplexScalar {
        if self.im.is_zero() && rhs.im.is_zero() {
            return ComplexScalar::real(&self.re * &rhs.re);
        }
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        ComplexScalar { re, im }
    }
}

impl<'a> MulAssign<&'a ComplexScalar> for ComplexScalar {
    fn mul_assign(&mut self, rhs: &'a ComplexScalar) {
        *self = &*self * rhs;
    }
}

impl<'a> Add<&'a ComplexScalar> for &'a ComplexScalar {
    type Output = ComplexScalar;
    fn add(self, rhs: &'a ComplexScalar) -> ComplexScalar {
        let mut t = self.clone();
        t += rhs;
        t
    }
}

impl<'a> Sub<&'a ComplexScalar> for &'a ComplexScalar {
    type Output = ComplexScalar;
    fn sub(self, rhs: &'a ComplexScalar) -> ComplexScalar {
        let mut t = self.clone();
        t -= rhs;
        t
    }
}

impl Add for ComplexScalar {
    type Output = ComplexScalar;
    fn add(mut self, rhs: ComplexScalar) -> ComplexScalar {
        self += &rhs;
        self
    }
}

impl Sub for ComplexScalar {
    type Output = ComplexScalar;
    fn sub(mut self, rhs: ComplexScalar) -> ComplexScalar {
        self -= &rhs;
        self
    }
}

impl Mul for ComplexScalar {
    type Output = ComplexScalar;
    fn mul(self, rhs: ComplexScalar) -> ComplexScalar {
        &self * &rhs
    }
}

impl Neg for ComplexScalar {
    type Output = ComplexScalar;
    fn neg(self) -> ComplexScalar {
        ComplexScalar { re: -self.re, im: -self.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: i64, im: i64) -> ComplexScalar {
        ComplexScalar::new(re.into(), im.into())
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(c(1, 2).conj(), c(1, -2));
        let r2 = ComplexScalar::real(FieldScalar::radical(Rational::from_integer(1.into()), 2));
        assert_eq!(r2.conj(), r2);
        // (3+ı)(2−ı) = 7 − ı, conj = 7 + ı = (3−ı)(2+ı)
        let lhs = (c(3, 1) * c(2, -1)).conj();
        let rhs = c(3, 1).conj() * c(2, -1).conj();
        assert_eq!(lhs, c(7, 1));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverse_round_trip() {
        let z = c(3, -4);
        let w = z.inv().unwrap();
        assert_eq!(w, ComplexScalar::new(FieldScalar::from_ratio(3, 25), FieldScalar::from_ratio(4, 25)));
        assert!((&z * &w).is_one());
    }
}
