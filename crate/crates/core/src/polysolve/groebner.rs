use super::poly::{mono_coprime, mono_divides, mono_lcm, s_polynomial, Mono, Poly};
use super::PolyError;
use crate::exactfield::Field;
use crate::linalg::Matrix;

/// Resource limits for the Buchberger loop.
#[derive(Clone, Debug)]
pub struct GroebnerLimits {
    pub max_pairs: usize,
    pub max_basis: usize,
}

impl Default for GroebnerLimits {
    fn default() -> Self {
        GroebnerLimits { max_pairs: 2_000_000, max_basis: 20_000 }
    }
}

/// Reduced lex Gröbner basis with default limits.
pub fn groebner<C: Field>(polys: &[Poly<C>]) -> Result<Vec<Poly<C>>, PolyError> {
    groebner_with_limits(polys, &GroebnerLimits::default())
}

pub fn groebner_with_limits<C: Field>(polys: &[Poly<C>], limits: &GroebnerLimits) -> Result<Vec<Poly<C>>, PolyError> {
    let Some(nvars) = polys.first().map(|p| p.nvars()) else {
        return Ok(Vec::new());
    };
    let input: Vec<Poly<C>> = polys.iter().filter(|p| !p.is_zero()).map(|p| p.monic()).collect();
    if input.iter().any(|p| p.is_constant()) {
        return Ok(vec![Poly::one(nvars)]);
    }
    let start = match linear_preprocess(&input, nvars) {
        Some(s) => s,
        None => return Ok(vec![Poly::one(nvars)]),
    };

    let mut st = State { polys: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    for f in start {
        st.update(f);
    }
    let mut processed = 0usize;
    while !st.pairs.is_empty() {
        processed += 1;
        if processed > limits.max_pairs {
            return Err(PolyError::ResourceLimit(format!("more than {} critical pairs", limits.max_pairs)));
        }
        // normal selection: smallest lcm first
        let k = (0..st.pairs.len()).min_by(|&a, &b| st.pairs[a].lcm.cmp(&st.pairs[b].lcm)).expect("nonempty");
        let pair = st.pairs.swap_remove(k);
        let s = s_polynomial(&st.polys[pair.i], &st.polys[pair.j]);
        let basis: Vec<Poly<C>> = st.active.iter().map(|&a| st.polys[a].clone()).collect();
        let h = s.reduce(&basis);
        if h.is_zero() {
            continue;
        }
        if h.is_constant() {
            return Ok(vec![Poly::one(nvars)]);
        }
        st.update(h.monic());
        if st.active.len() > limits.max_basis {
            return Err(PolyError::ResourceLimit(format!("basis exceeds {} elements", limits.max_basis)));
        }
    }
    let basis: Vec<Poly<C>> = st.active.iter().map(|&a| st.polys[a].clone()).collect();
    Ok(interreduce(basis))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Mono,
}

struct State<C> {
    polys: Vec<Poly<C>>,
    active: Vec<usize>,
    pairs: Vec<Pair>,
}

impl<C: Field> State<C> {
    fn lm(&self, i: usize) -> &Mono {
        self.polys[i].leading_monomial().expect("nonzero")
    }

    /// Gebauer–Möller update with the new polynomial `h`.
    fn update(&mut self, h: Poly<C>) {
        let hi = self.polys.len();
        self.polys.push(h);
        let lh = self.lm(hi).clone();

        let mut cands: Vec<Pair> = self
            .active
            .iter()
            .map(|&g| Pair { i: g, j: hi, lcm: mono_lcm(self.lm(g), &lh) })
            .collect();
        // chain criterion among the new pairs
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = cands.pop() {
            let coprime = mono_coprime(self.lm(p.i), &lh);
            let dominated = cands.iter().chain(kept.iter()).any(|q| mono_divides(&q.lcm, &p.lcm));
            if coprime || !dominated {
                kept.push(p);
            }
        }
        // among pairs with equal lcm keep one, then drop coprime ones (product criterion)
        let mut new_pairs: Vec<Pair> = Vec::new();
        kept.sort_by(|a, b| a.lcm.cmp(&b.lcm).then(a.i.cmp(&b.i)));
        let mut k = 0;
        while k < kept.len() {
            let mut e = k;
            while e < kept.len() && kept[e].lcm == kept[k].lcm {
                e += 1;
            }
            let group = &kept[k..e];
            if !group.iter().any(|p| mono_coprime(self.lm(p.i), &lh)) {
                new_pairs.push(Pair { i: group[0].i, j: hi, lcm: group[0].lcm.clone() });
            }
            k = e;
        }
        // old pairs made redundant by h
        let old = std::mem::take(&mut self.pairs);
        for p in old {
            let l1 = mono_lcm(self.lm(p.i), &lh);
            let l2 = mono_lcm(self.lm(p.j), &lh);
            let redundant = mono_divides(&lh, &p.lcm) && l1 != p.lcm && l2 != p.lcm;
            if !redundant {
                self.pairs.push(p);
            }
        }
        self.pairs.extend(new_pairs);
        let polys = &self.polys;
        self.active.retain(|&g| !mono_divides(&lh, polys[g].leading_monomial().expect("nonzero")));
        self.active.push(hi);
    }
}

/// Brings the linear members into reduced echelon form and reduces the other
/// members by them.
fn linear_preprocess<C: Field>(input: &[Poly<C>], nvars: usize) -> Option<Vec<Poly<C>>> {
    let (linear, rest): (Vec<&Poly<C>>, Vec<&Poly<C>>) = input.iter().partition(|p| p.total_degree() <= 1);
    if linear.is_empty() {
        return Some(input.to_vec());
    }
    let unit = |v: usize| {
        let mut m = vec![0u16; nvars];
        m[v] = 1;
        m
    };
    let rows: Vec<Vec<C>> = linear
        .iter()
        .map(|p| {
            let mut row: Vec<C> = (0..nvars).map(|v| p.coefficient(&unit(v))).collect();
            row.push(p.coefficient(&vec![0; nvars]));
            row
        })
        .collect();
    let (r, pivots) = Matrix::from_rows(rows).rref();
    if pivots.contains(&nvars) {
        return None;
    }
    let lin: Vec<Poly<C>> = (0..pivots.len())
        .map(|k| {
            let mut p = Poly::zero(nvars);
            for v in 0..nvars {
                p.add_term(unit(v), r[(k, v)].clone());
            }
            p.add_term(vec![0; nvars], r[(k, nvars)].clone());
            p
        })
        .collect();
    let mut out = lin.clone();
    for p in rest {
        let q = p.reduce(&lin);
        if q.is_zero() {
            continue;
        }
        if q.is_constant() {
            return None;
        }
        out.push(q.monic());
    }
    Some(out)
}

/// Minimal, tail-reduced, monic basis sorted by leading monomial, largest first.
pub fn interreduce<C: Field>(mut basis: Vec<Poly<C>>) -> Vec<Poly<C>> {
    basis.retain(|p| !p.is_zero());
    basis.sort_by(|a, b| a.leading_monomial().cmp(&b.leading_monomial()));
    let mut minimal: Vec<Poly<C>> = Vec::new();
    for p in basis {
        let lm = p.leading_monomial().expect("nonzero");
        if !minimal.iter().any(|q| mono_divides(q.leading_monomial().expect("nonzero"), lm)) {
            minimal.push(p.monic());
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Poly<C>> =
            minimal.iter().enumerate().filter(|(j, _)| *j != k).map(|(_, q)| q.clone()).collect();
        let (lm, lc) = minimal[k].leading_term().map(|(m, c)| (m.clone(), c.clone())).expect("nonzero");
        let mut tail = minimal[k].clone();
        tail.add_term(lm.clone(), -lc.clone());
        let mut r = tail.reduce(&others);
        r.add_term(lm, lc);
        out.push(r.monic());
    }
    out.sort_by(|a, b| b.leading_monomial().cmp(&a.leading_monomial()));
    out
}

/// Whether `f` lies in the ideal of the Gröbner basis `gb`.
pub fn ideal_contains<C: Field>(gb: &[Poly<C>], f: &Poly<C>) -> bool {
    f.reduce(gb).is_zero()
}

/// Whether two generating sets span the same ideal.
pub fn ideal_equal<C: Field>(a: &[Poly<C>], b: &[Poly<C>]) -> Result<bool, PolyError> {
    let ga = groebner(a)?;
    let gb = groebner(b)?;
    Ok(a.iter().all(|f| ideal_contains(&gb, f)) && b.iter().all(|f| ideal_contains(&ga, f)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldScalar;
    use crate::polysolve::text::{format_poly, parse_poly};

    fn vars(n: &[&str]) -> Vec<String> {
        n.iter().map(|s| s.to_string()).collect()
    }

    fn gb(src: &[&str], v: &[String]) -> Vec<String> {
        let ps: Vec<Poly<FieldScalar>> = src.iter().map(|s| parse_poly(s, v).unwrap()).collect();
        groebner(&ps).unwrap().iter().map(|p| format_poly(p, v)).collect()
    }

    #[test]
    fn collapses_to_linear() {
        let v = vars(&["x"]);
        assert_eq!(gb(&["x^2 - 1", "x - 1"], &v), vec!["x - 1"]);
        assert_eq!(gb(&["x^2 + 1", "x"], &v), vec!["1"]);
    }

    #[test]
    fn textbook_lex_example() {
        let v = vars(&["x", "y"]);
        let out = gb(&["x^2 + y^2 - 1", "x*y - 1/4"], &v);
        assert_eq!(out.len(), 2);
        assert_eq!(out[1], "y^4 - y^2 + 1/16");
        assert_eq!(out[0], "x + 4*y^3 - 4*y");
    }

    #[test]
    fn order_independent() {
        let v = vars(&["x", "y", "z"]);
        let a = gb(&["x*y - z", "y*z - x", "x*z - y", "x^2 - 1"], &v);
        let b = gb(&["x^2 - 1", "x*z - y", "y*z - x", "x*y - z"], &v);
        assert_eq!(a, b);
    }

    #[test]
    fn ideal_equality() {
        let v = vars(&["x", "y"]);
        let a: Vec<_> = ["x - y", "y^2 - 1"].iter().map(|s| parse_poly(s, &v).unwrap()).collect();
        let b: Vec<_> = ["x^2 - 1", "x - y", "x*y - 1"].iter().map(|s| parse_poly(s, &v).unwrap()).collect();
        let c: Vec<_> = ["x - y", "y - 1"].iter().map(|s| parse_poly(s, &v).unwrap()).collect();
        assert!(ideal_equal(&a, &b).unwrap());
        assert!(!ideal_equal(&a, &c).unwrap());
    }
}
