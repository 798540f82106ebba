use super::{Field, Rational};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// Element `Σ q_n·√n` of the real multiquadratic field.
///
/// Terms are kept sorted by radicand, radicands are square-free and no stored
/// coefficient is zero. Zero is the empty list.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FieldScalar {
    terms: Vec<(u64, Rational)>,
}

impl FieldScalar {
    pub fn from_rational(q: Rational) -> Self {
        if q.is_zero() {
            Self::default()
        } else {
            FieldScalar { terms: vec![(1, q)] }
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_ratio(p: i64, q: i64) -> Self {
        Self::from_rational(Rational::new(p.into(), q.into()))
    }

    /// `coeff·√radicand`; `radicand` must be square-free.
    pub fn radical(coeff: Rational, radicand: u64) -> Self {
        debug_assert!(is_square_free(radicand), "radicand {radicand} not square-free");
        if coeff.is_zero() {
            return Self::default();
        }
        FieldScalar { terms: vec![(radicand, coeff)] }
    }

    /// Builds from arbitrary `(radicand, coefficient)` pairs with square-free radicands.
    pub fn from_terms<I: IntoIterator<Item = (u64, Rational)>>(terms: I) -> Self {
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (k, q) in terms {
            debug_assert!(is_square_free(k));
            *acc.entry(k).or_insert_with(Rational::zero) += q;
        }
        Self::from_map(acc)
    }

    fn from_map(acc: BTreeMap<u64, Rational>) -> Self {
        FieldScalar {
            terms: acc.into_iter().filter(|(_, q)| !q.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(u64, Rational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 1)
    }

    /// The rational value, if the element lies in ℚ.
    pub fn to_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(1, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// Coefficient of `√radicand`.
    pub fn coefficient(&self, radicand: u64) -> Rational {
        self.terms
            .iter()
            .find(|(k, _)| *k == radicand)
            .map(|(_, q)| q.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::default();
        }
        FieldScalar {
            terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    /// Exact sign, decided by refining rational enclosures of the radicals.
    pub fn signum(&self) -> Ordering {
        if let Some(q) = self.to_rational() {
            return q.cmp(&Rational::zero());
        }
        let mut prec = 32u32;
        loop {
            let (lo, hi) = self.enclosure(prec);
            if lo > Rational::zero() {
                return Ordering::Greater;
            }
            if hi < Rational::zero() {
                return Ordering::Less;
            }
            prec *= 2;
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn abs(&self) -> Self {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Rational interval `[lo, hi]` containing the value, of width `O(2^-prec)`.
    pub fn enclosure(&self, prec: u32) -> (Rational, Rational) {
        let mut lo = Rational::zero();
        let mut hi = Rational::zero();
        let denom = BigInt::one() << prec;
        for (k, q) in &self.terms {
            if *k == 1 {
                lo += q;
                hi += q;
                continue;
            }
            let scaled = BigUint::from(*k) << (2 * prec);
            let s = BigInt::from(scaled.sqrt());
            let r_lo = Rational::new(s.clone(), denom.clone());
            let r_hi = Rational::new(s + 1, denom.clone());
            if q.is_positive() {
                lo += q * &r_lo;
                hi += q * &r_hi;
            } else {
                lo += q * &r_hi;
                hi += q * &r_lo;
            }
        }
        (lo, hi)
    }

    /// Approximate value, for display and diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        let (lo, hi) = self.enclosure(60);
        ((lo + hi) / Rational::from_integer(2.into()))
            .to_f64()
            .unwrap_or(f64::NAN)
    }

    /// Smallest prime dividing some radicand of the element, if any radical is present.
    fn some_prime(&self) -> Option<u64> {
        self.terms
            .iter()
            .filter(|(k, _)| *k != 1)
            .map(|(k, _)| smallest_prime_factor(*k))
            .min()
    }

    /// Splits as `a + b·√p` where neither `a` nor `b` involves `p`.
    pub(crate) fn split_at_prime(&self, p: u64) -> (FieldScalar, FieldScalar) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (k, q) in &self.terms {
            if k % p == 0 {
                b.push((k / p, q.clone()));
            } else {
                a.push((*k, q.clone()));
            }
        }
        (FieldScalar::from_terms(a), FieldScalar::from_terms(b))
    }

    /// Image under the automorphism `√p ↦ -√p`.
    pub(crate) fn conjugate_at_prime(&self, p: u64) -> FieldScalar {
        FieldScalar {
            terms: self
                .terms
                .iter()
                .map(|(k, q)| if k % p == 0 { (*k, -q) } else { (*k, q.clone()) })
                .collect(),
        }
    }

    /// Primes occurring in the radicands.
    pub fn primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = self
            .terms
            .iter()
            .flat_map(|(k, _)| prime_factors(*k))
            .collect();
        ps.sort_unstable();
        ps.dedup();
        ps
    }

    pub fn inverse(&self) -> Option<FieldScalar> {
        if self.is_zero() {
            return None;
        }
        if let Some(q) = self.to_rational() {
            return Some(FieldScalar::from_rational(q.recip()));
        }
        // x · σ_p(x) no longer involves p; recurse on the norm.
        let p = self.some_prime().expect("irrational element has a prime");
        let conj = self.conjugate_at_prime(p);
        let norm = self * &conj;
        let norm_inv = norm.inverse().expect("norm of a nonzero element is nonzero");
        Some(conj * norm_inv)
    }
}

impl Field for FieldScalar {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::from_integer(1)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        matches!(self.terms.as_slice(), [(1, q)] if q.is_one())
    }
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
    fn from_rational(q: Rational) -> Self {
        FieldScalar::from_rational(q)
    }
    fn to_rational(&self) -> Option<Rational> {
        FieldScalar::to_rational(self)
    }
}

pub(crate) fn is_square_free(n: u64) -> bool {
    if n == 0 {
        return false;
    }
    let mut m = n;
    let mut p = 2u64;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return false;
            }
        }
        p += 1;
    }
    true
}

pub(crate) fn smallest_prime_factor(n: u64) -> u64 {
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            return p;
        }
        p += 1;
    }
    n
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// `√a·√b = g·√(ab/g²)` with `g = gcd(a, b)`.
fn radical_product(a: u64, b: u64) -> (u64, u64) {
    let g = a.gcd(&b);
    let k = (a / g)
        .checked_mul(b / g)
        .unwrap_or_else(|| panic!("radicand product {a}·{b} overflows u64"));
    (k, g)
}

impl fmt::Debug for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::text::format_real(self))
    }
}

impl PartialOrd for FieldScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order.
impl Ord for FieldScalar {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl<'a> AddAssign<&'a FieldScalar> for FieldScalar {
    fn add_assign(&mut self, rhs: &'a FieldScalar) {
        if rhs.terms.is_empty() {
            return;
        }
        if self.terms.is_empty() {
            *self = rhs.clone();
            return;
        }
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &rhs.terms;
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                out.push(b[j].clone());
                j += 1;
            } else {
                let s = &a[i].1 + &b[j].1;
                if !s.is_zero() {
                    out.push((a[i].0, s));
                }
                i += 1;
                j += 1;
            }
        }
        self.terms = out;
    }
}

impl<'a> SubAssign<&'a FieldScalar> for FieldScalar {
    fn sub_assign(&mut self, rhs: &'a FieldScalar) {
        let neg = -rhs.clone();
        *self += &neg;
    }
}

impl<'a> MulAssign<&'a FieldScalar> for FieldScalar {
    fn mul_assign(&mut self, rhs: &'a FieldScalar) {
        *self = &*self * rhs;
    }
}

impl<'a> Mul<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: &'a FieldScalar) -> FieldScalar {
        if self.is_zero() || rhs.is_zero() {
            return FieldScalar::default();
        }
        if let ([(1, p)], [(1, q)]) = (self.terms.as_slice(), rhs.terms.as_slice()) {
            return FieldScalar::from_rational(p * q);
        }
        let mut acc: BTreeMap<u64, Rational> = BTreeMap::new();
        for (ka, qa) in &self.terms {
            for (kb, qb) in &rhs.terms {
                let (k, g) = radical_product(*ka, *kb);
                let c = qa * qb * Rational::from_integer(g.into());
                *acc.entry(k).or_insert_with(Rational::zero) += c;
            }
        }
        FieldScalar::from_map(acc)
    }
}

impl<'a> Add<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn add(self, rhs: &'a FieldScalar) -> FieldScalar {
        let mut t = self.clone();
        t += rhs;
        t
    }
}

impl<'a> Sub<&'a FieldScalar> for &'a FieldScalar {
    type Output = FieldScalar;
    fn sub(self, rhs: &'a FieldScalar) -> FieldScalar {
        let mut t = self.clone();
        t -= rhs;
        t
    }
}

impl Add for FieldScalar {
    type Output = FieldScalar;
    fn add(mut self, rhs: FieldScalar) -> FieldScalar {
        self += &rhs;
        self
    }
}

impl Sub for FieldScalar {
    type Output = FieldScalar;
    fn sub(mut self, rhs: FieldScalar) -> FieldScalar {
        self -= &rhs;
        self
    }
}

impl Mul for FieldScalar {
    type Output = FieldScalar;
    fn mul(self, rhs: FieldScalar) -> FieldScalar {
        &self * &rhs
    }
}

impl Neg for FieldScalar {
    type Output = FieldScalar;
    fn neg(mut self) -> FieldScalar {
        for (_, q) in self.terms.iter_mut() {
            *q = -q.clone();
        }
        self
    }
}

impl From<i64> for FieldScalar {
    fn from(n: i64) -> Self {
        FieldScalar::from_integer(n)
    }
}

impl From<Rational> for FieldScalar {
    fn from(q: Rational) -> Self {
        FieldScalar::from_rational(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt(n: u64) -> FieldScalar {
        FieldScalar::radical(Rational::one(), n)
    }

    #[test]
    fn radicals_multiply_to_square_free_products() {
        assert_eq!(&sqrt(2) * &sqrt(3), sqrt(6));
        assert_eq!(&sqrt(2) * &sqrt(2), FieldScalar::from_integer(2));
        assert_eq!(&sqrt(6) * &sqrt(10), FieldScalar::radical(Rational::from_integer(2.into()), 15));
    }

    #[test]
    fn inverse_of_nested_element() {
        let x = FieldScalar::from_integer(1) + sqrt(2) + sqrt(3);
        let inv = x.inverse().unwrap();
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn sign_of_near_cancellation() {
        // √2 + √3 - √10 ≈ -0.0165
        let x = sqrt(2) + sqrt(3) - sqrt(10);
        assert_eq!(x.signum(), Ordering::Less);
        let y = FieldScalar::from_ratio(99, 70) - sqrt(2);
        assert_eq!(y.signum(), Ordering::Greater);
    }

    #[test]
    fn zero_is_empty() {
        let x = sqrt(5) - sqrt(5);
        assert!(x.terms().is_empty());
        assert!(x.is_zero());
    }
}
