//! Dense univariate polynomials, coefficients stored lowest degree first.

use super::PolyError;
use crate::exactfield::{sqrt_in_field, Field, FieldScalar, Rational};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub fn trim<C: Field>(p: &mut Vec<C>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub fn degree<C: Field>(p: &[C]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval<C: Field>(p: &[C], x: &C) -> C {
    let mut acc = C::zero();
    for c in p.iter().rev() {
        acc *= x;
        acc += c;
    }
    acc
}

pub fn derivative<C: Field>(p: &[C]) -> Vec<C> {
    p.iter().enumerate().skip(1).map(|(k, c)| c.mul_ref(&C::from_int(k as i64))).collect()
}

pub fn monic<C: Field>(p: &[C]) -> Vec<C> {
    let mut p = p.to_vec();
    trim(&mut p);
    if let Some(lc) = p.last().and_then(|c| c.inv()) {
        for c in p.iter_mut() {
            *c *= &lc;
        }
    }
    p
}

/// Quotient and remainder; `b` must be nonzero.
pub fn divrem<C: Field>(a: &[C], b: &[C]) -> (Vec<C>, Vec<C>) {
    let db = degree(b).expect("nonzero divisor");
    let lc_inv = b[db].inv().expect("nonzero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![C::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = r[dr].mul_ref(&lc_inv);
        for (k, c) in b.iter().enumerate().take(db + 1) {
            r[dr - db + k] -= &c.mul_ref(&f);
        }
        q[dr - db] = f;
        trim(&mut r);
    }
    (q, r)
}

/// Monic gcd.
pub fn gcd<C: Field>(a: &[C], b: &[C]) -> Vec<C> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let (_, r) = divrem(&a, &b);
        a = b;
        b = r;
    }
    monic(&a)
}

pub fn square_free<C: Field>(p: &[C]) -> Vec<C> {
    let g = gcd(p, &derivative(p));
    if degree(&g).unwrap_or(0) == 0 {
        return monic(p);
    }
    monic(&divrem(p, &g).0)
}

/// Multiplicity of `x` as a root of `p` (`p` nonzero).
pub fn root_multiplicity<C: Field>(p: &[C], x: &C) -> usize {
    let lin = vec![-x.clone(), C::one()];
    let mut p = p.to_vec();
    trim(&mut p);
    let mut k = 0;
    while !p.is_empty() && eval(&p, x).is_zero() {
        p = divrem(&p, &lin).0;
        k += 1;
    }
    k
}

pub fn format_univariate<C: Field>(p: &[C], var: &str) -> String {
    let n = p.len();
    let mut terms: Vec<(usize, C)> = Vec::new();
    for k in (0..n).rev() {
        if !p[k].is_zero() {
            terms.push((k, p[k].clone()));
        }
    }
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (k, c)) in terms.iter().enumerate() {
        let cs = c.to_string();
        let body = cs.strip_prefix('-').unwrap_or(&cs);
        let compound = body.contains(['+', '-']);
        let (neg, coeff) = if compound { (false, format!("({cs})")) } else { (cs.starts_with('-'), body.to_string()) };
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let term = if mono.is_empty() {
            coeff
        } else if coeff == "1" {
            mono
        } else {
            format!("{coeff}*{mono}")
        };
        out.push_str(match (i, neg) {
            (0, false) => "",
            (0, true) => "-",
            (_, false) => " + ",
            (_, true) => " - ",
        });
        out.push_str(&term);
    }
    out
}

/// Real roots of `p` in the field, in increasing order. Fails when a factor
/// of degree at least three without rational roots remains, or when a
/// quadratic needs a square root outside the field.
pub fn real_roots(p: &[FieldScalar]) -> Result<Vec<FieldScalar>, PolyError> {
    let mut p = square_free(p);
    let mut roots = Vec::new();
    if degree(&p).unwrap_or(0) >= 3 {
        for r in rational_roots(&p)? {
            p = divrem(&p, &[-r.clone(), FieldScalar::one()]).0;
            roots.push(r);
        }
    }
    match degree(&p).unwrap_or(0) {
        0 => {}
        1 => roots.push(-p[0].mul_ref(&p[1].inv().expect("nonzero"))),
        2 => {
            let (a, b, c) = (&p[2], &p[1], &p[0]);
            let disc = b.mul_ref(b).sub_ref(&FieldScalar::from_integer(4).mul_ref(a).mul_ref(c));
            if !disc.is_negative() {
                let s = sqrt_in_field(&disc)
                    .map_err(PolyError::Field)?
                    .ok_or_else(|| PolyError::UnsupportedExtension(format!("square root of {disc}")))?;
                let inv2a = (a.mul_ref(&FieldScalar::from_integer(2))).inv().expect("nonzero");
                let r1 = (-b.clone() - s.clone()).mul_ref(&inv2a);
                let r2 = (-b.clone() + s).mul_ref(&inv2a);
                roots.push(r1);
                if !disc.is_zero() {
                    roots.push(r2);
                }
            }
        }
        _ => {
            return Err(PolyError::UnsupportedExtension(format!(
                "irreducible factor {}",
                format_univariate(&p, "t")
            )))
        }
    }
    roots.sort_by_key(|r| r.clone());
    roots.dedup();
    Ok(roots)
}

/// Rational roots of a polynomial with rational coefficients (empty if some coefficient is irrational).
fn rational_roots(p: &[FieldScalar]) -> Result<Vec<FieldScalar>, PolyError> {
    let Some(q): Option<Vec<Rational>> = p.iter().map(|c| c.to_rational()).collect() else {
        return Ok(Vec::new());
    };
    let lcm = q.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = q.iter().map(|c| (c * Rational::from_integer(lcm.clone())).to_integer()).collect();
    let mut out = Vec::new();
    let mut lo = 0;
    while ints[lo].is_zero() {
        lo += 1;
    }
    if lo > 0 {
        out.push(FieldScalar::zero());
    }
    let a0 = ints[lo].abs();
    let an = ints.last().expect("nonempty").abs();
    let (Some(num), Some(den)) = (divisors(&a0), divisors(&an)) else {
        return Err(PolyError::UnsupportedExtension("coefficients too large for a rational root search".into()));
    };
    for d in &den {
        for n in &num {
            for s in [1i64, -1] {
                let r = Rational::new(BigInt::from(s) * BigInt::from(*n), BigInt::from(*d));
                if r.denom() != &BigInt::from(*d) {
                    continue;
                }
                let x = FieldScalar::from_rational(r);
                if eval(p, &x).is_zero() && !out.contains(&x) {
                    out.push(x);
                }
            }
        }
    }
    Ok(out)
}

fn divisors(n: &BigInt) -> Option<Vec<u64>> {
    let n = n.to_u64()?;
    if n > 1_000_000_000_000 {
        return None;
    }
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<FieldScalar> {
        v.iter().map(|&c| FieldScalar::from_integer(c)).collect()
    }

    #[test]
    fn roots_of_small_polynomials() {
        // x^2 - 2
        let r = real_roots(&ints(&[-2, 0, 1])).unwrap();
        assert_eq!(r.len(), 2);
        assert_eq!(r[1].mul_ref(&r[1]), FieldScalar::from_integer(2));
        assert!(r[0].is_negative());
        // (x-1)(x+2)(x-3) = x^3 - 2x^2 - 5x + 6
        let r = real_roots(&ints(&[6, -5, -2, 1])).unwrap();
        assert_eq!(r, ints(&[-2, 1, 3]));
        // x^2 + 1 has no real roots
        assert!(real_roots(&ints(&[1, 0, 1])).unwrap().is_empty());
        // x^3 - 2 is not handled
        assert!(matches!(real_roots(&ints(&[-2, 0, 0, 1])), Err(PolyError::UnsupportedExtension(_))));
    }

    #[test]
    fn multiplicities() {
        // (T-1)^2 (T+1)
        let p = ints(&[1, -1, -1, 1]);
        assert_eq!(root_multiplicity(&p, &FieldScalar::one()), 2);
        assert_eq!(root_multiplicity(&p, &FieldScalar::from_integer(-1)), 1);
        assert_eq!(format_univariate(&p, "T"), "T^3 - T^2 - T + 1");
    }
}
