//! Compact forms, involutions, Cartan decompositions and a small classification
//! table for the resulting real forms.

use crate::exactfield::{ComplexScalar, Field, FieldScalar};
use crate::liealg::LieAlgebraTable;
use crate::linalg::Matrix;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use thiserror::Error;

pub type CMatrix = Matrix<ComplexScalar>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RealFormError {
    #[error("matrix is {rows}x{cols}, algebra has dimension {dim}")]
    Dimension { rows: usize, cols: usize, dim: usize },
    #[error("matrix does not square to the identity")]
    NotInvolution,
    #[error("not an automorphism: bracket of basis elements {0} and {1} is not preserved")]
    NotAutomorphism(usize, usize),
    #[error("does not commute with the compact conjugation on basis element {0}")]
    NotTauCompatible(usize),
    #[error("restriction to the compact form has a non-real entry at ({0}, {1})")]
    NotRealOnCompact(usize, usize),
    #[error("Killing form has the wrong sign on the {0} part")]
    KillingSign(&'static str),
    #[error("report dimensions {dim_k}+{dim_p} do not match algebra dimension {dim}")]
    InconsistentReport { dim_k: usize, dim_p: usize, dim: usize },
}

/// Basis of the compact form: `ı h_i`, then for each positive root
/// `x_α − x_{−α}` and `ı(x_α + x_{−α})`.
#[derive(Debug, Clone)]
pub struct CompactFormBasis {
    pub vectors: Vec<Vec<ComplexScalar>>,
    rank: usize,
    n_positive: usize,
}

pub fn compact_form(alg: &LieAlgebraTable) -> CompactFormBasis {
    let n = alg.dim();
    let l = alg.rank();
    let rs = alg.root_system();
    let i = ComplexScalar::imag_unit();
    let one = ComplexScalar::one();
    let mut vectors = Vec::with_capacity(n);
    for k in 0..l {
        let mut v = vec![ComplexScalar::zero(); n];
        v[k] = i.clone();
        vectors.push(v);
    }
    for a in 0..rs.num_positive() {
        let (p, m) = (alg.root_vector_index(a), alg.root_vector_index(rs.negative_of(a)));
        let mut u1 = vec![ComplexScalar::zero(); n];
        u1[p] = one.clone();
        u1[m] = -one.clone();
        let mut u2 = vec![ComplexScalar::zero(); n];
        u2[p] = i.clone();
        u2[m] = i.clone();
        vectors.push(u1);
        vectors.push(u2);
    }
    CompactFormBasis { vectors, rank: l, n_positive: rs.num_positive() }
}

impl CompactFormBasis {
    pub fn dim(&self) -> usize {
        self.vectors.len()
    }

    /// Coordinates of `v` in the compact basis.
    pub fn coordinates(&self, v: &[ComplexScalar]) -> Vec<ComplexScalar> {
        let l = self.rank;
        let np = self.n_positive;
        let half = ComplexScalar::from_ratio(1, 2);
        let mut c = Vec::with_capacity(v.len());
        // ı h_i: coefficient −ı·v_i
        for k in 0..l {
            c.push(-v[k].mul_i());
        }
        // a x_α + b x_{−α} = (a−b)/2 · u1 − ı(a+b)/2 · u2
        for a in 0..np {
            let (p, m) = (&v[l + a], &v[l + np + a]);
            c.push(&(p - m) * &half);
            c.push(-(&(p + m) * &half).mul_i());
        }
        c
    }

    pub fn combine(&self, coords: &[ComplexScalar]) -> Vec<ComplexScalar> {
        let n = self.dim();
        let mut v = vec![ComplexScalar::zero(); n];
        for (c, u) in coords.iter().zip(&self.vectors) {
            if c.is_zero() {
                continue;
            }
            for (a, b) in v.iter_mut().zip(u) {
                if !b.is_zero() {
                    *a += &c.mul_ref(b);
                }
            }
        }
        v
    }

    /// Matrix of a linear map (given on the Chevalley basis) in the compact basis.
    pub fn matrix_in_basis(&self, m: &CMatrix) -> CMatrix {
        let cols: Vec<Vec<ComplexScalar>> =
            self.vectors.iter().map(|u| self.coordinates(&m.mul_vec(u))).collect();
        Matrix::from_columns(&cols, self.dim())
    }
}

/// `τ(Σ α_i u_i) = Σ ᾱ_i u_i`.
pub fn compact_conjugation_apply(cf: &CompactFormBasis, v: &[ComplexScalar]) -> Vec<ComplexScalar> {
    let c: Vec<ComplexScalar> = cf.coordinates(v).iter().map(|z| z.conj()).collect();
    cf.combine(&c)
}

/// Closed form of the same conjugation: `τ(h_i) = −h_i`, `τ(x_α) = −x_{−α}`, antilinear.
pub fn tau(alg: &LieAlgebraTable, v: &[ComplexScalar]) -> Vec<ComplexScalar> {
    let l = alg.rank();
    let rs = alg.root_system();
    let mut out = vec![ComplexScalar::zero(); v.len()];
    for (k, z) in v.iter().enumerate() {
        if z.is_zero() {
            continue;
        }
        let target = match alg.root_of_basis(k) {
            None => k,
            Some(r) => l + rs.negative_of(r),
        };
        out[target] = -z.conj();
    }
    out
}

/// Involutive automorphism given by its matrix on the Chevalley basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Involution {
    pub matrix: CMatrix,
}

impl Involution {
    /// Validates order two and the automorphism property on all basis pairs.
    pub fn new(alg: &LieAlgebraTable, matrix: CMatrix) -> Result<Self, RealFormError> {
        let n = alg.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(RealFormError::Dimension { rows: matrix.rows(), cols: matrix.cols(), dim: n });
        }
        if !matrix.mul(&matrix).is_identity() {
            return Err(RealFormError::NotInvolution);
        }
        check_automorphism(alg, &matrix)?;
        Ok(Involution { matrix })
    }

    /// Like [`Involution::new`], additionally requiring `θτ = τθ`.
    pub fn new_tau_compatible(alg: &LieAlgebraTable, matrix: CMatrix) -> Result<Self, RealFormError> {
        let th = Self::new(alg, matrix)?;
        th.check_tau(alg)?;
        Ok(th)
    }

    pub fn apply(&self, v: &[ComplexScalar]) -> Vec<ComplexScalar> {
        self.matrix.mul_vec(v)
    }

    pub fn check_tau(&self, alg: &LieAlgebraTable) -> Result<(), RealFormError> {
        for j in 0..alg.dim() {
            let b: Vec<ComplexScalar> = alg.basis_vector(j);
            if tau(alg, &self.apply(&b)) != self.apply(&tau(alg, &b)) {
                return Err(RealFormError::NotTauCompatible(j));
            }
        }
        Ok(())
    }
}

pub fn check_automorphism(alg: &LieAlgebraTable, m: &CMatrix) -> Result<(), RealFormError> {
    let n = alg.dim();
    let cols: Vec<Vec<ComplexScalar>> = (0..n).map(|j| m.column(j)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let mut img = vec![ComplexScalar::zero(); n];
            for &(k, c) in alg.bracket_basis(i, j) {
                let c = ComplexScalar::from_integer(c);
                for (a, b) in img.iter_mut().zip(&cols[k]) {
                    if !b.is_zero() {
                        *a += &b.mul_ref(&c);
                    }
                }
            }
            if alg.bracket(&cols[i], &cols[j]) != img {
                return Err(RealFormError::NotAutomorphism(i, j));
            }
        }
    }
    Ok(())
}

pub fn identity_involution(alg: &LieAlgebraTable) -> Involution {
    Involution { matrix: Matrix::identity(alg.dim()) }
}

/// `x_α ↦ −c(α)·x_{−α}`, `h ↦ −h`, where `c` is the sign character with
/// `c(α_i) = signs[i]`. All signs `+1` gives the split (Chevalley) involution.
pub fn split_involution_with_signs(alg: &LieAlgebraTable, signs: &[i64]) -> Involution {
    let n = alg.dim();
    let l = alg.rank();
    let rs = alg.root_system();
    let mut m = Matrix::zeros(n, n);
    for k in 0..l {
        m[(k, k)] = ComplexScalar::from_integer(-1);
    }
    for r in 0..rs.num_roots() {
        let c = character(rs.root(r), signs);
        m[(l + rs.negative_of(r), l + r)] = ComplexScalar::from_integer(-c);
    }
    Involution { matrix: m }
}

pub fn split_involution(alg: &LieAlgebraTable) -> Involution {
    split_involution_with_signs(alg, &vec![1; alg.rank()])
}

/// Inner involution `x_α ↦ c(α)·x_α`, `h ↦ h`.
pub fn inner_involution(alg: &LieAlgebraTable, signs: &[i64]) -> Involution {
    let n = alg.dim();
    let l = alg.rank();
    let rs = alg.root_system();
    let mut m = Matrix::identity(n);
    for r in 0..rs.num_roots() {
        m[(l + r, l + r)] = ComplexScalar::from_integer(character(rs.root(r), signs));
    }
    Involution { matrix: m }
}

/// Split involution on the simple factors whose index is listed in `split`, identity elsewhere.
pub fn split_on_components(alg: &LieAlgebraTable, split: &[usize]) -> Involution {
    let comps = alg.root_system().components();
    let n = alg.dim();
    let l = alg.rank();
    let rs = alg.root_system();
    let omega = split_involution(alg);
    let mut m = Matrix::identity(n);
    let in_split = |node: usize| split.iter().any(|&c| comps[c].contains(&node));
    for k in 0..l {
        if in_split(k) {
            m[(k, k)] = ComplexScalar::from_integer(-1);
        }
    }
    for r in 0..rs.num_roots() {
        let node = rs.root(r).iter().position(|&c| c != 0).expect("nonzero root");
        if in_split(node) {
            let (j, i) = (l + r, l + rs.negative_of(r));
            m[(j, j)] = ComplexScalar::zero();
            m[(i, j)] = omega.matrix[(i, j)].clone();
        }
    }
    Involution { matrix: m }
}

fn character(root: &[i64], signs: &[i64]) -> i64 {
    root.iter().zip(signs).map(|(&a, &s)| if s < 0 && a.rem_euclid(2) == 1 { -1 } else { 1 }).product()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealFormReport {
    pub dim_k: usize,
    pub dim_p: usize,
    pub killing: [usize; 2],
    pub name: String,
}

/// Cartan decomposition of the real form attached to `θ`.
#[derive(Debug, Clone)]
pub struct CartanDecomposition {
    pub report: RealFormReport,
    /// Bases of `k̃` and `p̃` as vectors on the Chevalley basis.
    pub k: Vec<Vec<ComplexScalar>>,
    pub p: Vec<Vec<ComplexScalar>>,
}

pub fn real_form_from_involution(
    alg: &LieAlgebraTable,
    cf: &CompactFormBasis,
    theta: &Involution,
) -> Result<CartanDecomposition, RealFormError> {
    theta.check_tau(alg)?;
    let n = alg.dim();
    let tu = cf.matrix_in_basis(&theta.matrix);
    let mut real = Matrix::<FieldScalar>::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let z = &tu[(i, j)];
            if !z.im.is_zero() {
                return Err(RealFormError::NotRealOnCompact(i, j));
            }
            real[(i, j)] = z.re.clone();
        }
    }
    let id = Matrix::<FieldScalar>::identity(n);
    let plus = real.sub(&id).kernel();
    let minus = real.add(&id).kernel();
    let lift = |v: &Vec<FieldScalar>| -> Vec<ComplexScalar> {
        cf.combine(&v.iter().cloned().map(ComplexScalar::real).collect::<Vec<_>>())
    };
    let k: Vec<Vec<ComplexScalar>> = plus.iter().map(lift).collect();
    let p: Vec<Vec<ComplexScalar>> = minus.iter().map(|v| lift(v).iter().map(|z| z.mul_i()).collect()).collect();

    let kappa = alg.killing_matrix();
    let (kn, kz, kp) = signature(gram(alg, &kappa, &k));
    if kz != 0 || kp != 0 {
        return Err(RealFormError::KillingSign("k"));
    }
    let (pn, pz, pp) = signature(gram(alg, &kappa, &p));
    if pz != 0 || pn != 0 {
        return Err(RealFormError::KillingSign("p"));
    }
    let mut report = RealFormReport {
        dim_k: k.len(),
        dim_p: p.len(),
        killing: [kn + pn, kp + pp],
        name: String::new(),
    };
    report.name = classify_real_form(&alg.type_name(), &report)?;
    Ok(CartanDecomposition { report, k, p })
}

/// Real Gram matrix of the Killing form on the given vectors.
pub fn gram(alg: &LieAlgebraTable, kappa: &[Vec<i64>], vs: &[Vec<ComplexScalar>]) -> Matrix<FieldScalar> {
    let m = vs.len();
    let mut g = Matrix::zeros(m, m);
    for a in 0..m {
        for b in a..m {
            let z = alg.killing_form(kappa, &vs[a], &vs[b]);
            assert!(z.im.is_zero(), "Killing form of real-form vectors must be real");
            g[(a, b)] = z.re.clone();
            g[(b, a)] = z.re;
        }
    }
    g
}

/// `(negative, zero, positive)` counts of a real symmetric matrix, by congruence.
pub fn signature(mut m: Matrix<FieldScalar>) -> (usize, usize, usize) {
    let n = m.rows();
    let (mut neg, mut pos) = (0, 0);
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !m[(i, i)].is_zero());
        let pivot = match pivot {
            Some(p) => p,
            None => {
                // all diagonal entries vanish: add a row/column with a nonzero coupling
                let pair = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !m[(i, j)].is_zero());
                let Some((i, j)) = pair else { break };
                for k in 0..n {
                    let v = &m[(i, k)] + &m[(j, k)];
                    m[(i, k)] = v;
                }
                for k in 0..n {
                    let v = &m[(k, i)] + &m[(k, j)];
                    m[(k, i)] = v;
                }
                i
            }
        };
        let d = m[(pivot, pivot)].clone();
        match d.signum() {
            Ordering::Less => neg += 1,
            Ordering::Greater => pos += 1,
            Ordering::Equal => unreachable!("pivot is nonzero"),
        }
        let inv = d.inverse().expect("nonzero");
        active.retain(|&i| i != pivot);
        for &i in &active {
            if m[(i, pivot)].is_zero() {
                continue;
            }
            let f = &m[(i, pivot)] * &inv;
            for &j in &active {
                let t = &f * &m[(pivot, j)];
                m[(i, j)] -= &t;
            }
            m[(i, pivot)] = FieldScalar::default();
        }
        for &j in &active {
            m[(pivot, j)] = FieldScalar::default();
        }
    }
    (neg, n - neg - pos, pos)
}

pub fn algebra_dimension(type_name: &str) -> Option<usize> {
    let mut total = 0;
    for part in type_name.split('+') {
        let t = part.chars().next()?;
        let n: usize = part[1..].parse().ok()?;
        total += match t {
            'A' => n * (n + 2),
            'B' | 'C' => n * (2 * n + 1),
            'D' => n * (2 * n - 1),
            'G' if n == 2 => 14,
            'F' if n == 4 => 52,
            'E' if n == 6 => 78,
            'E' if n == 7 => 133,
            'E' if n == 8 => 248,
            _ => return None,
        };
    }
    Some(total)
}

/// Name of the real form with the given `dim k̃`, or `"unclassified"`.
pub fn classify_real_form(type_name: &str, report: &RealFormReport) -> Result<String, RealFormError> {
    let dim = report.dim_k + report.dim_p;
    if let Some(expected) = algebra_dimension(type_name) {
        if expected != dim {
            return Err(RealFormError::InconsistentReport { dim_k: report.dim_k, dim_p: report.dim_p, dim: expected });
        }
    }
    let name = REAL_FORMS
        .iter()
        .find(|(t, k, _)| *t == type_name && *k == report.dim_k)
        .map(|(_, _, n)| *n)
        .unwrap_or("unclassified");
    Ok(name.to_string())
}

/// `(type, dim k, name)`; within each type the dimension of `k` determines the form.
const REAL_FORMS: &[(&str, usize, &str)] = &[
    ("A1", 3, "su(2)"),
    ("A1", 1, "sl(2,R)"),
    ("A2", 8, "su(3)"),
    ("A2", 4, "su(2,1)"),
    ("A2", 3, "sl(3,R)"),
    ("A3", 15, "su(4)"),
    ("A3", 9, "su(3,1)"),
    ("A3", 7, "su(2,2)"),
    ("A3", 6, "sl(4,R)"),
    ("A3", 10, "su*(4)"),
    ("B2", 10, "so(5)"),
    ("B2", 6, "so(4,1)"),
    ("B2", 4, "so(3,2)"),
    ("B3", 21, "so(7)"),
    ("B3", 15, "so(6,1)"),
    ("B3", 11, "so(5,2)"),
    ("B3", 9, "so(4,3)"),
    ("B4", 36, "so(9)"),
    ("B4", 28, "so(8,1)"),
    ("B4", 22, "so(7,2)"),
    ("B4", 18, "so(6,3)"),
    ("B4", 16, "so(5,4)"),
    ("C3", 21, "sp(3)"),
    ("C3", 13, "sp(1,2)"),
    ("C3", 9, "sp(3,R)"),
    ("D4", 28, "so(8)"),
    ("D4", 21, "so(7,1)"),
    ("D4", 16, "so(6,2)"),
    ("D4", 13, "so(5,3)"),
    ("D4", 12, "so(4,4)"),
    ("G2", 14, "compact G2"),
    ("G2", 6, "G (split G2)"),
    ("F4", 52, "compact F4"),
    ("F4", 36, "FII"),
    ("F4", 24, "FI"),
    ("E6", 78, "compact E6"),
    ("E6", 52, "EIV"),
    ("E6", 46, "EIII"),
    ("E6", 38, "EII"),
    ("E6", 36, "EI"),
    ("E7", 133, "compact E7"),
    ("E7", 79, "EVII"),
    ("E7", 69, "EVI"),
    ("E7", 63, "EV"),
    ("E8", 248, "compact E8"),
    ("E8", 136, "EIX"),
    ("E8", 120, "EVIII"),
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::build_by_name;

    fn report_for(name: &str, theta: impl Fn(&LieAlgebraTable) -> Involution) -> RealFormReport {
        let alg = build_by_name(name).unwrap();
        let cf = compact_form(&alg);
        let th = theta(&alg);
        Involution::new_tau_compatible(&alg, th.matrix.clone()).unwrap();
        real_form_from_involution(&alg, &cf, &th).unwrap().report
    }

    #[test]
    fn identity_gives_compact_form() {
        let r = report_for("A3", identity_involution);
        assert_eq!((r.dim_k, r.dim_p, r.killing), (15, 0, [15, 0]));
        assert_eq!(r.name, "su(4)");
    }

    #[test]
    fn split_sl2() {
        let r = report_for("A1", split_involution);
        assert_eq!((r.dim_k, r.dim_p, r.name.as_str()), (1, 2, "sl(2,R)"));
    }

    #[test]
    fn split_forms_have_k_of_dimension_positive_roots() {
        for (name, expect) in [("A2", "sl(3,R)"), ("A3", "sl(4,R)"), ("B2", "so(3,2)"), ("G2", "G (split G2)"), ("C3", "sp(3,R)")] {
            let r = report_for(name, split_involution);
            assert_eq!(r.name, expect);
        }
    }

    #[test]
    fn inner_involutions_of_a3() {
        assert_eq!(report_for("A3", |a| inner_involution(a, &[-1, 1, 1])).name, "su(3,1)");
        assert_eq!(report_for("A3", |a| inner_involution(a, &[1, -1, 1])).name, "su(2,2)");
    }

    #[test]
    fn conjugation_closed_form_matches_basis_definition() {
        let alg = build_by_name("B2").unwrap();
        let cf = compact_form(&alg);
        let v: Vec<ComplexScalar> = (0..alg.dim() as i64)
            .map(|k| ComplexScalar::new(FieldScalar::from_integer(k - 3), FieldScalar::from_ratio(k, 2)))
            .collect();
        let t = compact_conjugation_apply(&cf, &v);
        assert_eq!(t, tau(&alg, &v));
        assert_eq!(compact_conjugation_apply(&cf, &t), v);
        for u in &cf.vectors {
            assert_eq!(&compact_conjugation_apply(&cf, u), u);
            let iu: Vec<ComplexScalar> = u.iter().map(|z| z.mul_i()).collect();
            let minus: Vec<ComplexScalar> = iu.iter().map(|z| -z.clone()).collect();
            assert_eq!(compact_conjugation_apply(&cf, &iu), minus);
        }
    }

    #[test]
    fn compact_brackets_are_real() {
        let alg = build_by_name("G2").unwrap();
        let cf = compact_form(&alg);
        for a in &cf.vectors {
            for b in &cf.vectors {
                assert!(cf.coordinates(&alg.bracket(a, b)).iter().all(|z| z.is_real()));
            }
        }
    }

    #[test]
    fn rejects_bad_matrices() {
        let alg = build_by_name("A1").unwrap();
        let mut m = Matrix::identity(3);
        m[(1, 1)] = ComplexScalar::from_integer(-1);
        assert_eq!(Involution::new(&alg, m).unwrap_err(), RealFormError::NotAutomorphism(1, 2));
        let mut m = Matrix::identity(3);
        m[(1, 1)] = ComplexScalar::imag_unit();
        m[(2, 2)] = -ComplexScalar::imag_unit();
        assert_eq!(Involution::new(&alg, m).unwrap_err(), RealFormError::NotInvolution);
        // x ↦ 2y, y ↦ x/2 is an involutive automorphism not preserving the compact form
        let mut m: CMatrix = Matrix::zeros(3, 3);
        m[(0, 0)] = ComplexScalar::from_integer(-1);
        m[(2, 1)] = ComplexScalar::from_integer(2);
        m[(1, 2)] = ComplexScalar::from_ratio(1, 2);
        let err = Involution::new_tau_compatible(&alg, m).unwrap_err();
        assert_eq!(err, RealFormError::NotTauCompatible(1));
    }

    #[test]
    fn classification_lookup() {
        let rep = |k, p| RealFormReport { dim_k: k, dim_p: p, killing: [k, p], name: String::new() };
        assert_eq!(classify_real_form("A3", &rep(6, 9)).unwrap(), "sl(4,R)");
        assert_eq!(classify_real_form("G2", &rep(6, 8)).unwrap(), "G (split G2)");
        assert_eq!(classify_real_form("A1", &rep(1, 2)).unwrap(), "sl(2,R)");
        assert_eq!(classify_real_form("A1+G2", &rep(7, 10)).unwrap(), "unclassified");
        assert!(classify_real_form("A3", &rep(6, 8)).is_err());
    }

    #[test]
    fn signature_of_indefinite_forms() {
        let m = |rows: &[&[i64]]| {
            Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| FieldScalar::from_integer(x)).collect()).collect())
        };
        assert_eq!(signature(m(&[&[0, 1], &[1, 0]])), (1, 0, 1));
        assert_eq!(signature(m(&[&[1, 2], &[2, 1]])), (1, 0, 1));
        assert_eq!(signature(m(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -3]])), (1, 1, 1));
    }
}
