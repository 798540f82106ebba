use super::balance::dedupe;
use super::{EmbedError, Embedding};
use crate::exactfield::{ComplexScalar, Field, FieldScalar};
use crate::intertwine::{end_rho_phi_basis, Representation};
use crate::linalg::Matrix;
use crate::polysolve::{default_variables, Poly};
use crate::realform::{check_automorphism, tau, CMatrix, Involution, RealFormError};

/// Real and imaginary parts of a polynomial in real variables.
pub fn split_complex(p: &Poly<ComplexScalar>) -> (Poly<FieldScalar>, Poly<FieldScalar>) {
    let n = p.nvars();
    let re = Poly::from_terms(n, p.terms().map(|(m, c)| (m.clone(), c.re.clone())));
    let im = Poly::from_terms(n, p.terms().map(|(m, c)| (m.clone(), c.im.clone())));
    (re, im)
}

/// The polynomial conditions on `A = Σ (x_i + ı y_i) A_i` for `A` to be an
/// involution `θ̃` with `θ̃ε = εθ` and `θ̃τ̃ = τ̃θ̃`.
#[derive(Debug, Clone)]
pub struct InvolutionSystem {
    /// Basis `A_1, …, A_s` of `End_{ρ,φ}`.
    pub basis: Vec<CMatrix>,
    pub a0: CMatrix,
    /// `x1..xs, y1..ys`.
    pub variables: Vec<String>,
    /// From `A² = I` and `A·ad(a_j)·A = ad(A a_j)`.
    pub q1: Vec<Poly<FieldScalar>>,
    /// From `τ̃A(a_j) = Aτ̃(a_j)`.
    pub q2: Vec<Poly<FieldScalar>>,
    extension: CMatrix,
    theta: CMatrix,
}

pub fn involution_system(emb: &Embedding, theta: &Involution) -> Result<InvolutionSystem, EmbedError> {
    let (src, t) = (&emb.source, &emb.target);
    let n = t.dim();
    if theta.matrix.rows() != src.dim() {
        return Err(RealFormError::Dimension { rows: theta.matrix.rows(), cols: theta.matrix.cols(), dim: src.dim() }.into());
    }
    theta.check_tau(src)?;
    let e = emb.extension_matrix();
    let cg = src.default_canonical_generators::<ComplexScalar>();
    let rep = |f: &dyn Fn(&Vec<ComplexScalar>) -> Vec<ComplexScalar>| {
        let ad = |v: &Vec<ComplexScalar>| t.adjoint_matrix(&f(v));
        Representation {
            g: cg.g.iter().map(ad).collect(),
            x: cg.x.iter().map(ad).collect(),
            y: cg.y.iter().map(ad).collect(),
        }
    };
    let rho = rep(&|v| e.mul_vec(&theta.apply(v)));
    let phi = rep(&|v| e.mul_vec(v));
    let (ib, a0) = end_rho_phi_basis(&rho, &phi)?;
    let et = e.mul(&theta.matrix);
    let basis: Vec<CMatrix> = ib.maps.into_iter().map(|a| normalize_on_image(a, &e, &et)).collect();
    let s = basis.len();
    let nv = 2 * s;
    let ii = ComplexScalar::imag_unit();
    let z: Vec<Poly<ComplexScalar>> = (0..s).map(|i| Poly::var(nv, i).add(&Poly::var(nv, s + i).scale(&ii))).collect();
    let zz: Vec<Vec<Poly<ComplexScalar>>> = (0..s).map(|i| (0..s).map(|k| z[i].mul(&z[k])).collect()).collect();

    // quadratic form Σ_{i≤k} q[i][k] z_i z_k + Σ_i lin[i] z_i + c, for each entry
    let quad = |sym: &dyn Fn(usize, usize) -> CMatrix, lin: &dyn Fn(usize) -> CMatrix, constant: &CMatrix| {
        let pairs: Vec<(usize, usize, CMatrix)> =
            (0..s).flat_map(|i| (i..s).map(move |k| (i, k))).map(|(i, k)| (i, k, sym(i, k))).collect();
        let lins: Vec<CMatrix> = (0..s).map(lin).collect();
        let mut out = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut p = Poly::constant(nv, constant[(r, c)].clone());
                for (i, k, m) in &pairs {
                    if !m[(r, c)].is_zero() {
                        p.add_assign(&zz[*i][*k].scale(&m[(r, c)]));
                    }
                }
                for (i, m) in lins.iter().enumerate() {
                    if !m[(r, c)].is_zero() {
                        p.add_assign(&z[i].scale(&m[(r, c)]));
                    }
                }
                out.push(p);
            }
        }
        out
    };

    let mut p_all: Vec<Poly<ComplexScalar>> = Vec::new();
    // A² − I
    let zero = Matrix::zeros(n, n);
    let minus_id = Matrix::identity(n).scale(&ComplexScalar::from_integer(-1));
    p_all.extend(quad(
        &|i, k| {
            if i == k {
                basis[i].mul(&basis[i])
            } else {
                basis[i].mul(&basis[k]).add(&basis[k].mul(&basis[i]))
            }
        },
        &|_| zero.clone(),
        &minus_id,
    ));
    // A ad(a_j) A − ad(A a_j)
    for j in 0..n {
        let adj = t.adjoint_matrix(&t.basis_vector::<ComplexScalar>(j));
        let left: Vec<CMatrix> = basis.iter().map(|a| a.mul(&adj)).collect();
        let neg_one = ComplexScalar::from_integer(-1);
        p_all.extend(quad(
            &|i, k| {
                if i == k {
                    left[i].mul(&basis[i])
                } else {
                    left[i].mul(&basis[k]).add(&left[k].mul(&basis[i]))
                }
            },
            &|i| t.adjoint_matrix(&basis[i].column(j)).scale(&neg_one),
            &zero,
        ));
    }
    let q1 = dedupe(p_all.iter().flat_map(|p| {
        let (a, b) = split_complex(p);
        [a, b]
    }));

    // τ̃(A a_j) = A τ̃(a_j): Σ_i (x_i − ı y_i) τ̃(A_i a_j) − (x_i + ı y_i) A_i τ̃(a_j) = 0
    let mut q2_all = Vec::new();
    for j in 0..n {
        let tj = tau(t, &t.basis_vector::<ComplexScalar>(j));
        let mut eqs = vec![Poly::<ComplexScalar>::zero(nv); n];
        for (i, a) in basis.iter().enumerate() {
            let u = tau(t, &a.column(j));
            let w = a.mul_vec(&tj);
            for r in 0..n {
                let cx = &u[r] - &w[r];
                let cy = -(&u[r] + &w[r]).mul_i();
                eqs[r].add_assign(&Poly::var(nv, i).scale(&cx));
                eqs[r].add_assign(&Poly::var(nv, s + i).scale(&cy));
            }
        }
        q2_all.extend(eqs);
    }
    let q2 = dedupe(q2_all.iter().flat_map(|p| {
        let (a, b) = split_complex(p);
        [a, b]
    }));

    Ok(InvolutionSystem {
        basis,
        a0,
        variables: default_variables(s),
        q1,
        q2,
        extension: e,
        theta: theta.matrix.clone(),
    })
}

/// Rescales `a` so that `a·ε = ε·θ` when `a·ε` is a nonzero multiple of `ε·θ`.
fn normalize_on_image(a: CMatrix, e: &CMatrix, et: &CMatrix) -> CMatrix {
    let ae = a.mul(e);
    let pivot = (0..et.rows()).flat_map(|r| (0..et.cols()).map(move |c| (r, c))).find(|&(r, c)| !et[(r, c)].is_zero());
    let Some((r, c)) = pivot else { return a };
    if ae[(r, c)].is_zero() {
        return a;
    }
    let ratio = ae[(r, c)].div_ref(&et[(r, c)]).expect("nonzero pivot");
    if et.scale(&ratio) != ae {
        return a;
    }
    a.scale(&ratio.inv().expect("nonzero ratio"))
}

impl InvolutionSystem {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn polynomials(&self) -> Vec<Poly<FieldScalar>> {
        self.q1.iter().chain(&self.q2).cloned().collect()
    }

    /// `Σ (x_i + ı y_i) A_i` at a point given in the order `x1..xs, y1..ys`.
    pub fn matrix_at(&self, point: &[FieldScalar]) -> CMatrix {
        let s = self.dim();
        let n = self.basis.first().map_or(0, |m| m.rows());
        let mut out = Matrix::zeros(n, n);
        for (i, a) in self.basis.iter().enumerate() {
            let z = ComplexScalar::new(point[i].clone(), point[s + i].clone());
            out.add_scaled(&z, a);
        }
        out
    }

    /// Entries of `A` as polynomials in `x1..xs, y1..ys`.
    pub fn symbolic_matrix(&self) -> Vec<Vec<Poly<ComplexScalar>>> {
        let s = self.dim();
        let nv = 2 * s;
        let n = self.basis.first().map_or(0, |m| m.rows());
        let ii = ComplexScalar::imag_unit();
        let mut out = vec![vec![Poly::zero(nv); n]; n];
        for (i, a) in self.basis.iter().enumerate() {
            let z = Poly::var(nv, i).add(&Poly::var(nv, s + i).scale(&ii));
            for (r, row) in out.iter_mut().enumerate() {
                for (c, entry) in row.iter_mut().enumerate() {
                    if !a[(r, c)].is_zero() {
                        entry.add_assign(&z.scale(&a[(r, c)]));
                    }
                }
            }
        }
        out
    }

    /// Builds `θ̃` at a solution and checks every defining property exactly:
    /// `θ̃² = I`, the automorphism property, `θ̃τ̃ = τ̃θ̃` and `θ̃ε = εθ`.
    pub fn involution_at(&self, emb: &Embedding, point: &[FieldScalar]) -> Result<Involution, EmbedError> {
        let m = self.matrix_at(point);
        let th = Involution::new_tau_compatible(&emb.target, m)?;
        check_automorphism(&emb.target, &th.matrix)?;
        let lhs = th.matrix.mul(&self.extension);
        let rhs = self.extension.mul(&self.theta);
        if lhs != rhs {
            return Err(EmbedError::Contract("θ̃ε differs from εθ".into()));
        }
        Ok(th)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedpipe::tests::regular_a2_in_a3;
    use crate::liealg::build_by_name;
    use crate::realform::{identity_involution, split_involution};

    #[test]
    fn identity_embedding_admits_identity() {
        let a = build_by_name("A2").unwrap();
        let emb = Embedding::new(a.clone(), a.clone(), a.default_canonical_generators()).unwrap();
        let sys = involution_system(&emb, &identity_involution(&a)).unwrap();
        assert_eq!(sys.dim(), 1);
        // A_1 is a multiple of the identity; find the point giving exactly I
        let c = sys.basis[0][(0, 0)].clone();
        let inv = c.inv().unwrap();
        let point = vec![inv.re.clone(), inv.im.clone()];
        assert!(sys.matrix_at(&point).is_identity());
        for p in sys.polynomials() {
            assert!(p.eval(&point).is_zero());
        }
        assert!(sys.involution_at(&emb, &point).is_ok());
    }

    #[test]
    fn regular_a2_in_a3_has_four_dimensional_commutant() {
        let emb = regular_a2_in_a3();
        let sys = involution_system(&emb, &split_involution(&emb.source)).unwrap();
        assert_eq!(sys.dim(), 4);
        assert_eq!(sys.variables, vec!["x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"]);
        assert!(!sys.q1.is_empty() && !sys.q2.is_empty());
        assert!(sys.q2.iter().all(|p| p.total_degree() <= 1));
    }
}
