use crate::exactfield::Field;
use std::collections::BTreeMap;

/// Exponent vector. Comparing vectors lexicographically is the lex monomial
/// order in which variable 0 is the largest.
pub type Mono = Vec<u16>;

pub fn mono_divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn mono_lcm(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn mono_mul(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `a / b`, assuming `b | a`.
pub fn mono_div(a: &[u16], b: &[u16]) -> Mono {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn mono_coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn mono_degree(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

/// Multivariate polynomial; terms are kept in a map ordered by the lex order,
/// so the leading term is the last entry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<C> {
    nvars: usize,
    terms: BTreeMap<Mono, C>,
}

impl<C: Field> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = vec![0; nvars];
        m[i] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(m, C::one());
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Mono, C)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in decreasing order.
    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &C)> {
        self.terms.iter().rev()
    }

    pub fn add_term(&mut self, m: Mono, c: C) {
        debug_assert_eq!(m.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn coefficient(&self, m: &[u16]) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading_term(&self) -> Option<(&Mono, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_monomial(&self) -> Option<&Mono> {
        self.terms.keys().next_back()
    }

    pub fn leading_coefficient(&self) -> Option<&C> {
        self.terms.values().next_back()
    }

    /// The constant value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().expect("one term");
                m.iter().all(|&e| e == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_constant(&self) -> bool {
        self.as_constant().is_some()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| mono_degree(m)).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u16 {
        self.terms.keys().map(|m| m[var]).max().unwrap_or(0)
    }

    /// Indices of the variables that occur.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.terms.keys().any(|m| m[v] > 0)).collect()
    }

    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.inv().expect("nonzero")),
        }
    }

    pub fn scale(&self, s: &C) -> Self {
        if s.is_zero() {
            return Self::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul_ref(s))).collect() }
    }

    pub fn neg(&self) -> Self {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.clone();
        p.add_assign(other);
        p
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut p = self.clone();
        for (m, c) in &other.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                p.add_term(mono_mul(m1, m2), c1.mul_ref(c2));
            }
        }
        p
    }

    /// `c·x^m·self`.
    pub fn mul_term(&self, m: &[u16], c: &C) -> Self {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m2, c2)| (mono_mul(m, m2), c2.mul_ref(c))).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut r = Self::one(self.nvars);
        for _ in 0..e {
            r = r.mul(self);
        }
        r
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        let mut p = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), f(c));
        }
        p
    }

    /// Substitutes `value` for variable `var`.
    pub fn substitute(&self, var: usize, value: &C) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let mut m2 = m.clone();
            let e = m2[var];
            m2[var] = 0;
            let mut c2 = c.clone();
            for _ in 0..e {
                c2 *= value;
            }
            p.add_term(m2, c2);
        }
        p
    }

    pub fn eval(&self, values: &[C]) -> C {
        let mut acc = C::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(m) {
                for _ in 0..e {
                    t *= v;
                }
            }
            acc += &t;
        }
        acc
    }

    /// Coefficients `[c_0, c_1, …]` when only `var` occurs.
    pub fn to_univariate(&self, var: usize) -> Option<Vec<C>> {
        let mut out = vec![C::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            if m.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            out[m[var] as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(nvars: usize, var: usize, coeffs: &[C]) -> Self {
        let mut p = Self::zero(nvars);
        for (k, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; nvars];
            m[var] = k as u16;
            p.add_term(m, c.clone());
        }
        p
    }

    /// Normal form modulo `basis` (full reduction). The basis polynomials need
    /// not be monic.
    pub fn reduce(&self, basis: &[Poly<C>]) -> Self {
        let mut p = self.clone();
        let mut r = Self::zero(self.nvars);
        let lts: Vec<(&Mono, C)> = basis
            .iter()
            .filter_map(|g| g.leading_term().map(|(m, c)| (m, c.inv().expect("nonzero"))))
            .collect();
        let live: Vec<&Poly<C>> = basis.iter().filter(|g| !g.is_zero()).collect();
        while let Some((m, c)) = p.terms.pop_last() {
            match lts.iter().position(|(lm, _)| mono_divides(lm, &m)) {
                Some(k) => {
                    let (lm, lc_inv) = &lts[k];
                    let q = mono_div(&m, lm);
                    let f = c.mul_ref(lc_inv);
                    for (m2, c2) in live[k].terms.iter().rev().skip(1) {
                        p.add_term(mono_mul(&q, m2), -c2.mul_ref(&f));
                    }
                }
                None => {
                    r.terms.insert(m, c);
                }
            }
        }
        r
    }

    /// Rebuilds the polynomial over a new variable list; `map[i]` is the new index of variable `i`.
    pub fn remap(&self, new_nvars: usize, map: &[usize]) -> Self {
        let mut p = Self::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut m2 = vec![0; new_nvars];
            for (i, &e) in m.iter().enumerate() {
                m2[map[i]] += e;
            }
            p.add_term(m2, c.clone());
        }
        p
    }
}

/// S-polynomial of two nonzero polynomials.
pub fn s_polynomial<C: Field>(f: &Poly<C>, g: &Poly<C>) -> Poly<C> {
    let (mf, cf) = f.leading_term().expect("nonzero");
    let (mg, cg) = g.leading_term().expect("nonzero");
    let l = mono_lcm(mf, mg);
    let a = f.mul_term(&mono_div(&l, mf), &cf.inv().expect("nonzero"));
    let b = g.mul_term(&mono_div(&l, mg), &cg.inv().expect("nonzero"));
    a.sub(&b)
}
