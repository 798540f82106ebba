use super::poly::Poly;
use crate::exactfield::Field;

/// Characteristic polynomial `det(T·I - M)` of a square matrix of polynomials,
/// with every intermediate product reduced modulo the Gröbner basis `gb`.
/// Returns the coefficients of `T^n, T^(n-1), …, T^0`. Division-free
/// (Berkowitz), so it works over the quotient ring.
pub fn charpoly_mod_ideal<C: Field>(m: &[Vec<Poly<C>>], gb: &[Poly<C>], nvars: usize) -> Vec<Poly<C>> {
    let n = m.len();
    let red = |p: Poly<C>| if gb.is_empty() { p } else { p.reduce(gb) };
    let entry = |i: usize, j: usize| red(m[i][j].clone());
    if n == 0 {
        return vec![Poly::one(nvars)];
    }
    let mut p: Vec<Poly<C>> = vec![Poly::one(nvars), entry(0, 0).neg()];
    for r in 1..n {
        // A_{r+1} = [[A_r, S], [R, a]]
        let a = entry(r, r);
        let s: Vec<Poly<C>> = (0..r).map(|i| entry(i, r)).collect();
        let row: Vec<Poly<C>> = (0..r).map(|j| entry(r, j)).collect();
        // column of the Toeplitz matrix: 1, -a, -R S, -R A S, …, -R A^{r-1} S
        let mut col = vec![Poly::one(nvars), a.neg()];
        let mut v = s;
        for k in 0..r {
            let mut dot = Poly::zero(nvars);
            for (x, y) in row.iter().zip(&v) {
                if !x.is_zero() && !y.is_zero() {
                    dot.add_assign(&x.mul(y));
                }
            }
            col.push(red(dot).neg());
            if k + 1 < r {
                v = (0..r)
                    .map(|i| {
                        let mut acc = Poly::zero(nvars);
                        for (j, vj) in v.iter().enumerate() {
                            let e = &m[i][j];
                            if !e.is_zero() && !vj.is_zero() {
                                acc.add_assign(&e.mul(vj));
                            }
                        }
                        red(acc)
                    })
                    .collect();
            }
        }
        // new p = T · old p with T lower-triangular Toeplitz of size (r+2)×(r+1)
        let mut q = vec![Poly::zero(nvars); r + 2];
        for (i, qi) in q.iter_mut().enumerate() {
            let mut acc = Poly::zero(nvars);
            for (j, pj) in p.iter().enumerate().take(i + 1) {
                let c = &col[i - j];
                if !c.is_zero() && !pj.is_zero() {
                    acc.add_assign(&c.mul(pj));
                }
            }
            *qi = red(acc);
        }
        p = q;
    }
    p
}

/// The coefficients as scalars when none depends on the variables.
pub fn constant_coefficients<C: Field>(coeffs: &[Poly<C>]) -> Option<Vec<C>> {
    coeffs.iter().map(|c| c.as_constant()).collect()
}
