use super::{FieldError, FieldScalar, Rational};
use num_bigint::BigUint;
use num_traits::{One, Signed, ToPrimitive, Zero};

const TRIAL_LIMIT: u64 = 1_000_000;
const MAX_DENEST_DEPTH: u32 = 8;

/// Writes `n = s²·r` with `r` square-free. Trial division up to 10⁶ suffices
/// for every cofactor below 10¹⁸ (such a cofactor has at most two prime factors).
pub fn square_free_part(n: &BigUint) -> Result<(BigUint, u64), FieldError> {
    if n.is_zero() {
        return Ok((BigUint::zero(), 1));
    }
    let mut m = n.clone();
    let mut s = BigUint::one();
    let mut r = 1u64;
    let mut p = 2u64;
    while p <= TRIAL_LIMIT {
        let pb = BigUint::from(p);
        if &pb * &pb > m {
            break;
        }
        let mut e = 0;
        while (&m % &pb).is_zero() {
            m /= &pb;
            e += 1;
        }
        for _ in 0..e / 2 {
            s *= &pb;
        }
        if e % 2 == 1 {
            r *= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if !m.is_one() {
        let root = m.sqrt();
        if &root * &root == m {
            s *= root;
        } else {
            let small = m
                .to_u64()
                .filter(|v| *v < 1_000_000_000_000_000_000)
                .ok_or_else(|| FieldError::RadicandTooLarge(n.to_string()))?;
            r = r
                .checked_mul(small)
                .ok_or_else(|| FieldError::RadicandTooLarge(n.to_string()))?;
        }
    }
    Ok((s, r))
}

/// Positive square root of a positive rational, extending the field by a
/// square-free radical when needed. Perfect squares stay rational.
pub fn adjoin_sqrt(f: &FieldScalar) -> Result<FieldScalar, FieldError> {
    let q = f
        .to_rational()
        .ok_or_else(|| FieldError::NotRational(f.to_string()))?;
    if !q.is_positive() {
        return Err(FieldError::NotPositive(f.to_string()));
    }
    // √(p/q) = √(p·q)/q
    let num = q.numer().magnitude() * q.denom().magnitude();
    let (s, r) = square_free_part(&num)?;
    let coeff = Rational::new(s.into(), q.denom().clone());
    Ok(FieldScalar::radical(coeff, r))
}

/// Non-negative square root inside the field, or `None` when the element is
/// negative or its root is not a multiquadratic number.
pub fn sqrt_in_field(x: &FieldScalar) -> Result<Option<FieldScalar>, FieldError> {
    denest(x, 0)
}

fn denest(x: &FieldScalar, depth: u32) -> Result<Option<FieldScalar>, FieldError> {
    if x.is_zero() {
        return Ok(Some(FieldScalar::default()));
    }
    if x.is_negative() {
        return Ok(None);
    }
    if x.is_rational() {
        return adjoin_sqrt(x).map(Some);
    }
    if depth >= MAX_DENEST_DEPTH {
        return Ok(None);
    }
    let p = *x.primes().last().expect("irrational element has a prime");
    let (a, b) = x.split_at_prime(p);
    let pf = FieldScalar::from_integer(p as i64);
    // (c + d√p)² = x  ⇔  c² + p·d² = a, 2cd = b
    let norm = &a * &a - &(&pf * &b) * &b;
    let n = match denest(&norm, depth + 1)? {
        Some(n) => n,
        None => return Ok(None),
    };
    let half = FieldScalar::from_ratio(1, 2);
    let sqrt_p = FieldScalar::radical(Rational::one(), p);
    for cand in [&a + &n, &a - &n] {
        let c_sq = &cand * &half;
        if !c_sq.is_positive() {
            continue;
        }
        let Some(c) = denest(&c_sq, depth + 1)? else { continue };
        let two_c_inv = (&c * &FieldScalar::from_integer(2)).inverse().expect("c > 0");
        let d = &b * &two_c_inv;
        let y = c + &d * &sqrt_p;
        if &y * &y == *x {
            return Ok(Some(y.abs()));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(p: i64) -> FieldScalar {
        FieldScalar::from_integer(p)
    }

    #[test]
    fn perfect_square_stays_rational() {
        assert_eq!(adjoin_sqrt(&rat(4)).unwrap(), rat(2));
        assert_eq!(adjoin_sqrt(&FieldScalar::from_ratio(9, 4)).unwrap(), FieldScalar::from_ratio(3, 2));
    }

    #[test]
    fn sqrt_two_squares_to_two() {
        let r = adjoin_sqrt(&rat(2)).unwrap();
        assert_eq!(r, FieldScalar::radical(Rational::one(), 2));
        assert_eq!(&r * &r, rat(2));
    }

    #[test]
    fn sqrt_eight_is_two_sqrt_two() {
        // oracle: (2√2)² = 8 computed independently with big rationals
        let r = adjoin_sqrt(&rat(8)).unwrap();
        let two = Rational::from_integer(2.into());
        assert_eq!(r, FieldScalar::radical(two.clone(), 2));
        let coeff_sq = &two * &two * Rational::from_integer(2.into());
        assert_eq!(coeff_sq, Rational::from_integer(8.into()));
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(adjoin_sqrt(&rat(-3)), Err(FieldError::NotPositive(_))));
        assert!(matches!(adjoin_sqrt(&rat(0)), Err(FieldError::NotPositive(_))));
        let irr = FieldScalar::radical(Rational::one(), 2);
        assert!(matches!(adjoin_sqrt(&irr), Err(FieldError::NotRational(_))));
    }

    #[test]
    fn denests_known_squares() {
        // 3 + 2√2 = (1 + √2)²
        let s2 = FieldScalar::radical(Rational::one(), 2);
        let x = rat(3) + &rat(2) * &s2;
        assert_eq!(sqrt_in_field(&x).unwrap(), Some(rat(1) + s2.clone()));
        // 2 + √3 = ((√6 + √2)/2)²
        let s3 = FieldScalar::radical(Rational::one(), 3);
        let y = rat(2) + s3;
        let r = sqrt_in_field(&y).unwrap().unwrap();
        assert_eq!(&r * &r, y);
        // 1 + √2 is not a square in the field
        assert_eq!(sqrt_in_field(&(rat(1) + s2)).unwrap(), None);
    }

    #[test]
    fn square_free_decomposition() {
        let (s, r) = square_free_part(&BigUint::from(72u32)).unwrap();
        assert_eq!((s, r), (BigUint::from(6u32), 2));
    }
}
