//! Weight decompositions of modules given by a canonical generating set, and
//! bases of the intertwiner spaces `End_ρ(V)` and `End_{ρ,φ}(V)`.

use crate::exactfield::Field;
use crate::linalg::{EchelonBasis, Matrix};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IntertwineError {
    #[error("generator matrices must all be {0}x{0} and come in equal numbers")]
    Shape(usize),
    #[error("g_{generator} is not diagonalizable with integer eigenvalues ({missing} dimensions unaccounted for)")]
    NonIntegralWeight { generator: usize, missing: usize },
    #[error("representations are inequivalent: weight {weight:?} has multiplicity {rho} vs {phi}")]
    Inequivalent { weight: Vec<i64>, rho: usize, phi: usize },
    #[error("highest weight submodules do not span the module (not completely reducible input)")]
    NotDirectSum,
    #[error("internal check failed: {0}")]
    Verification(String),
}

/// Matrices of `ρ(g_i)`, `ρ(x_i)`, `ρ(y_i)` for a canonical generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation<F> {
    pub g: Vec<Matrix<F>>,
    pub x: Vec<Matrix<F>>,
    pub y: Vec<Matrix<F>>,
}

impl<F: Field> Representation<F> {
    pub fn dim(&self) -> usize {
        self.g.first().map_or(0, |m| m.rows())
    }

    pub fn rank(&self) -> usize {
        self.g.len()
    }

    fn validate(&self) -> Result<(), IntertwineError> {
        let n = self.dim();
        let l = self.rank();
        if self.x.len() != l || self.y.len() != l {
            return Err(IntertwineError::Shape(n));
        }
        if self.generators().any(|m| m.rows() != n || m.cols() != n) {
            return Err(IntertwineError::Shape(n));
        }
        Ok(())
    }

    pub fn generators(&self) -> impl Iterator<Item = &Matrix<F>> {
        self.g.iter().chain(&self.x).chain(&self.y)
    }

    /// Conjugate representation `P ρ P⁻¹`.
    pub fn conjugate(&self, p: &Matrix<F>) -> Self {
        let pinv = p.inverse().expect("conjugating matrix must be invertible");
        let c = |m: &Matrix<F>| p.mul(m).mul(&pinv);
        Representation {
            g: self.g.iter().map(c).collect(),
            x: self.x.iter().map(c).collect(),
            y: self.y.iter().map(c).collect(),
        }
    }

    /// Block-diagonal direct sum.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let bd = |a: &Matrix<F>, b: &Matrix<F>| {
            let (n, m) = (a.rows(), b.rows());
            let mut out = Matrix::zeros(n + m, n + m);
            for i in 0..n {
                for j in 0..n {
                    out[(i, j)] = a[(i, j)].clone();
                }
            }
            for i in 0..m {
                for j in 0..m {
                    out[(n + i, n + j)] = b[(i, j)].clone();
                }
            }
            out
        };
        let zip = |a: &[Matrix<F>], b: &[Matrix<F>]| a.iter().zip(b).map(|(p, q)| bd(p, q)).collect();
        Representation { g: zip(&self.g, &other.g), x: zip(&self.x, &other.x), y: zip(&self.y, &other.y) }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HighestWeight<F> {
    pub weight: Vec<i64>,
    /// Row-reduced basis of the highest weight vectors of this weight.
    pub vectors: Vec<Vec<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDecomposition<F> {
    /// Weight spaces, weights in decreasing lexicographic order.
    pub spaces: Vec<(Vec<i64>, Vec<Vec<F>>)>,
    /// Highest weights in decreasing lexicographic order.
    pub highest: Vec<HighestWeight<F>>,
}

impl<F: Field> WeightDecomposition<F> {
    pub fn multiplicities(&self) -> Vec<usize> {
        self.highest.iter().map(|h| h.vectors.len()).collect()
    }

    /// `Σ m_j²`.
    pub fn end_dimension(&self) -> usize {
        self.multiplicities().iter().map(|m| m * m).sum()
    }

    pub fn weight_multiplicities(&self) -> BTreeMap<Vec<i64>, usize> {
        self.spaces.iter().map(|(w, b)| (w.clone(), b.len())).collect()
    }
}

pub fn weight_decompose<F: Field>(rep: &Representation<F>) -> Result<WeightDecomposition<F>, IntertwineError> {
    rep.validate()?;
    let n = rep.dim();
    let l = rep.rank();
    // each entry: (partial weight, basis of the simultaneous eigenspace as columns)
    let mut parts: Vec<(Vec<i64>, Vec<Vec<F>>)> = vec![(Vec::new(), identity_columns(n))];
    for (gi, g) in rep.g.iter().enumerate() {
        let mut next = Vec::new();
        for (w, basis) in parts {
            for (c, sub) in split_eigenspaces(g, &basis, n).map_err(|missing| IntertwineError::NonIntegralWeight {
                generator: gi + 1,
                missing,
            })? {
                let mut w2 = w.clone();
                w2.push(c);
                next.push((w2, sub));
            }
        }
        parts = next;
    }
    parts.sort_by(|a, b| b.0.cmp(&a.0));

    let mut highest = Vec::new();
    for (w, basis) in &parts {
        let k = basis.len();
        let mut stacked = Matrix::zeros(n * l, k);
        for (i, x) in rep.x.iter().enumerate() {
            for (j, b) in basis.iter().enumerate() {
                for (r, val) in x.mul_vec(b).into_iter().enumerate() {
                    stacked[(i * n + r, j)] = val;
                }
            }
        }
        let coeffs = stacked.kernel();
        if coeffs.is_empty() {
            continue;
        }
        let mut eb = EchelonBasis::new(n);
        for c in &coeffs {
            eb.insert(&combine(basis, c, n));
        }
        highest.push(HighestWeight { weight: w.clone(), vectors: eb.rows().to_vec() });
    }
    Ok(WeightDecomposition { spaces: parts, highest })
}

fn identity_columns<F: Field>(n: usize) -> Vec<Vec<F>> {
    (0..n)
        .map(|i| {
            let mut v = vec![F::zero(); n];
            v[i] = F::one();
            v
        })
        .collect()
}

fn combine<F: Field>(basis: &[Vec<F>], coeffs: &[F], n: usize) -> Vec<F> {
    let mut v = vec![F::zero(); n];
    for (b, c) in basis.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (a, x) in v.iter_mut().zip(b) {
            if !x.is_zero() {
                *a += &x.mul_ref(c);
            }
        }
    }
    v
}

/// Integer eigenspaces of `g` restricted to the invariant subspace spanned by `basis`.
/// Returns the number of unaccounted dimensions on failure.
fn split_eigenspaces<F: Field>(
    g: &Matrix<F>,
    basis: &[Vec<F>],
    n: usize,
) -> Result<Vec<(i64, Vec<Vec<F>>)>, usize> {
    let k = basis.len();
    let bmat = Matrix::from_columns(basis, n);
    // restricted operator M with g·B = B·M, read off on k independent rows of B
    let rows = bmat.transpose().rref().1;
    let sel = |m: &Matrix<F>| Matrix::from_rows(rows.iter().map(|&r| m.row(r).to_vec()).collect());
    let b_sel_inv = sel(&bmat).inverse().ok_or(k)?;
    let m = b_sel_inv.mul(&sel(&g.mul(&bmat)));

    let mut out = Vec::new();
    let mut found = 0;
    if (0..k).all(|i| (0..k).all(|j| i == j || m[(i, j)].is_zero())) {
        let mut by_value: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for i in 0..k {
            let c = integer_value(&m[(i, i)]).ok_or(k)?;
            by_value.entry(c).or_default().push(i);
        }
        for (c, idx) in by_value.into_iter().rev() {
            out.push((c, idx.iter().map(|&i| basis[i].clone()).collect()));
        }
        return Ok(out);
    }
    // eigenvalues of ρ(g_i) in a k-dimensional sl2-module lie in [−(k−1), k−1]
    let bound = n as i64;
    for c in (-bound..=bound).rev() {
        let shifted = m.sub(&Matrix::identity(k).scale(&F::from_int(c)));
        let ker = shifted.kernel();
        if ker.is_empty() {
            continue;
        }
        found += ker.len();
        out.push((c, ker.iter().map(|v| combine(basis, v, n)).collect()));
        if found == k {
            break;
        }
    }
    if found != k {
        return Err(k - found);
    }
    Ok(out)
}

fn integer_value<F: Field>(x: &F) -> Option<i64> {
    x.to_rational().filter(|q| q.is_integer()).and_then(|q| i64::try_from(q.to_integer()).ok())
}

/// For each highest weight, the chosen index sequences `(i_1,…,i_k)` (0-based generators).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialSchedule {
    pub sequences: Vec<Vec<Vec<usize>>>,
}

/// Breadth-first schedule: length `k+1` candidates are `(i, s)` for kept sequences `s`
/// of length `k`, tried in lexicographic order and kept when linearly independent.
pub fn build_monomial_schedule<F: Field>(wd: &WeightDecomposition<F>, rep: &Representation<F>) -> MonomialSchedule {
    let n = rep.dim();
    let l = rep.rank();
    let mut sequences = Vec::new();
    for hw in &wd.highest {
        let v = &hw.vectors[0];
        let mut eb = EchelonBasis::new(n);
        eb.insert(v);
        let mut kept: Vec<Vec<usize>> = vec![vec![]];
        let mut frontier: Vec<(Vec<usize>, Vec<F>)> = vec![(vec![], v.clone())];
        while !frontier.is_empty() {
            let mut cands: Vec<(Vec<usize>, Vec<F>)> = Vec::new();
            for (s, img) in &frontier {
                for i in 0..l {
                    let mut seq = vec![i];
                    seq.extend(s);
                    cands.push((seq, rep.y[i].mul_vec(img)));
                }
            }
            cands.sort_by(|a, b| a.0.cmp(&b.0));
            frontier = Vec::new();
            for (seq, img) in cands {
                if eb.insert(&img) {
                    kept.push(seq.clone());
                    frontier.push((seq, img));
                }
            }
        }
        sequences.push(kept);
    }
    MonomialSchedule { sequences }
}

fn apply_sequence<F: Field>(rep: &Representation<F>, seq: &[usize], v: &[F]) -> Vec<F> {
    let mut w = v.to_vec();
    for &i in seq.iter().rev() {
        w = rep.y[i].mul_vec(&w);
    }
    w
}

/// Columns `ρ(y_seq) v_{j,s}` for all `j`, `s`, `seq`, grouped as `[j][s][seq]`.
fn adapted_basis<F: Field>(
    rep: &Representation<F>,
    wd: &WeightDecomposition<F>,
    ms: &MonomialSchedule,
) -> Vec<Vec<Vec<Vec<F>>>> {
    wd.highest
        .iter()
        .zip(&ms.sequences)
        .map(|(hw, seqs)| {
            hw.vectors.iter().map(|v| seqs.iter().map(|s| apply_sequence(rep, s, v)).collect()).collect()
        })
        .collect()
}

/// A basis of an intertwiner space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntertwinerBasis<F> {
    pub maps: Vec<Matrix<F>>,
}

/// The maps `A_j^{s,t}` sending `ρ(y_seq)v_{j,s}` to `ρ(y_seq)v_{j,t}` and all other
/// adapted basis vectors to zero.
pub fn end_rho_basis<F: Field>(
    rep: &Representation<F>,
    wd: &WeightDecomposition<F>,
    ms: &MonomialSchedule,
) -> Result<IntertwinerBasis<F>, IntertwineError> {
    let n = rep.dim();
    let groups = adapted_basis(rep, wd, ms);
    let cols: Vec<Vec<F>> = groups.iter().flatten().flatten().cloned().collect();
    if cols.len() != n {
        return Err(IntertwineError::NotDirectSum);
    }
    let bmat = Matrix::from_columns(&cols, n);
    let binv = bmat.inverse().ok_or(IntertwineError::NotDirectSum)?;
    let mut offsets = Vec::new();
    let mut pos = 0;
    for g in &groups {
        let mut o = Vec::new();
        for s in g {
            o.push(pos);
            pos += s.len();
        }
        offsets.push(o);
    }
    let mut maps = Vec::new();
    for (j, g) in groups.iter().enumerate() {
        let len = g[0].len();
        for s in 0..g.len() {
            for t in 0..g.len() {
                // columns of B·E: the image of basis vector (j,s,k) is column (j,t,k) of B
                let mut be = Matrix::zeros(n, n);
                for k in 0..len {
                    let (src, dst) = (offsets[j][s] + k, offsets[j][t] + k);
                    for r in 0..n {
                        be[(r, src)] = bmat[(r, dst)].clone();
                    }
                }
                maps.push(be.mul(&binv));
            }
        }
    }
    let basis = IntertwinerBasis { maps };
    verify_intertwiners(&basis, rep, rep)?;
    Ok(basis)
}

/// Checks `M·ρ(z) = φ(z)·M` for every map and generator.
pub fn verify_intertwiners<F: Field>(
    basis: &IntertwinerBasis<F>,
    rho: &Representation<F>,
    phi: &Representation<F>,
) -> Result<(), IntertwineError> {
    for (k, m) in basis.maps.iter().enumerate() {
        for (a, b) in rho.generators().zip(phi.generators()) {
            if m.mul(a) != b.mul(m) {
                return Err(IntertwineError::Verification(format!("map {k} does not intertwine")));
            }
        }
    }
    Ok(())
}

/// Basis `{A₀·A}` of `End_{ρ,φ}(V)`, with `A₀ : ρ(y_seq)v_{j,l} ↦ φ(y_seq)w_{j,l}`.
pub fn end_rho_phi_basis<F: Field>(
    rho: &Representation<F>,
    phi: &Representation<F>,
) -> Result<(IntertwinerBasis<F>, Matrix<F>), IntertwineError> {
    let wr = weight_decompose(rho)?;
    let wp = weight_decompose(phi)?;
    let (mr, mp) = (wr.weight_multiplicities(), wp.weight_multiplicities());
    let weights: std::collections::BTreeSet<&Vec<i64>> = mr.keys().chain(mp.keys()).collect();
    for w in weights.into_iter().rev() {
        let (a, b) = (mr.get(w).copied().unwrap_or(0), mp.get(w).copied().unwrap_or(0));
        if a != b {
            return Err(IntertwineError::Inequivalent { weight: w.clone(), rho: a, phi: b });
        }
    }
    let ms = build_monomial_schedule(&wr, rho);
    let end = end_rho_basis(rho, &wr, &ms)?;
    let n = rho.dim();
    let src: Vec<Vec<F>> = adapted_basis(rho, &wr, &ms).into_iter().flatten().flatten().collect();
    let dst: Vec<Vec<F>> = adapted_basis(phi, &wp, &ms).into_iter().flatten().flatten().collect();
    let binv = Matrix::from_columns(&src, n).inverse().ok_or(IntertwineError::NotDirectSum)?;
    let a0 = Matrix::from_columns(&dst, n).mul(&binv);
    if a0.determinant().is_zero() {
        return Err(IntertwineError::Verification("A0 is singular".into()));
    }
    let maps = end.maps.iter().map(|a| a0.mul(a)).collect();
    let basis = IntertwinerBasis { maps };
    verify_intertwiners(&basis, rho, phi)?;
    Ok((basis, a0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldScalar;
    use crate::liealg::{build_by_name, LieAlgebraTable};

    fn adjoint_rep(alg: &LieAlgebraTable) -> Representation<FieldScalar> {
        let cg = alg.default_canonical_generators::<FieldScalar>();
        Representation {
            g: cg.g.iter().map(|v| alg.adjoint_matrix(v)).collect(),
            x: cg.x.iter().map(|v| alg.adjoint_matrix(v)).collect(),
            y: cg.y.iter().map(|v| alg.adjoint_matrix(v)).collect(),
        }
    }

    #[test]
    fn adjoint_sl2() {
        let rep = adjoint_rep(&build_by_name("A1").unwrap());
        let wd = weight_decompose(&rep).unwrap();
        let ws: Vec<Vec<i64>> = wd.spaces.iter().map(|s| s.0.clone()).collect();
        assert_eq!(ws, vec![vec![2], vec![0], vec![-2]]);
        assert_eq!(wd.highest.len(), 1);
        assert_eq!(wd.highest[0].weight, vec![2]);
        let ms = build_monomial_schedule(&wd, &rep);
        assert_eq!(ms.sequences, vec![vec![vec![], vec![0], vec![0, 0]]]);
        let end = end_rho_basis(&rep, &wd, &ms).unwrap();
        assert_eq!(end.maps.len(), 1);
        assert!(end.maps[0].is_identity());
    }

    #[test]
    fn adjoint_a2_has_one_highest_weight() {
        let rep = adjoint_rep(&build_by_name("A2").unwrap());
        let wd = weight_decompose(&rep).unwrap();
        assert_eq!(wd.multiplicities(), vec![1]);
        assert_eq!(wd.highest[0].weight, vec![1, 1]);
        let zero = wd.spaces.iter().find(|s| s.0 == vec![0, 0]).unwrap();
        assert_eq!(zero.1.len(), 2);
    }

    #[test]
    fn doubled_module_gives_matrix_units() {
        let rep = adjoint_rep(&build_by_name("A1").unwrap());
        let two = rep.direct_sum(&rep);
        let wd = weight_decompose(&two).unwrap();
        assert_eq!(wd.multiplicities(), vec![2]);
        let ms = build_monomial_schedule(&wd, &two);
        let end = end_rho_basis(&two, &wd, &ms).unwrap();
        assert_eq!(end.maps.len(), 4);
        // A^{s,t} A^{t,u} = A^{s,u} (composition: first s→t, then t→u)
        let a = |s: usize, t: usize| &end.maps[2 * s + t];
        assert_eq!(a(1, 0).mul(a(0, 1)), *a(0, 0));
        assert!(a(0, 1).mul(a(0, 1)).is_zero());
        assert!(a(0, 0).add(a(1, 1)).is_identity());
    }

    #[test]
    fn conjugated_representation() {
        let rep = adjoint_rep(&build_by_name("A2").unwrap());
        let n = rep.dim();
        let mut p = Matrix::<FieldScalar>::identity(n);
        for i in 0..n - 1 {
            p[(i, i + 1)] = FieldScalar::from_integer((i % 3) as i64 - 1);
        }
        let phi = rep.conjugate(&p);
        let (basis, a0) = end_rho_phi_basis(&rep, &phi).unwrap();
        assert_eq!(basis.maps.len(), 1);
        // End_{ρ,φ} = P·End_ρ, one-dimensional, spanned by P
        let q = a0.mul(&p.inverse().unwrap());
        let c = q[(0, 0)].clone();
        assert!(q.sub(&Matrix::identity(n).scale(&c)).is_zero());
    }

    #[test]
    fn inequivalent_modules_rejected() {
        let rep = adjoint_rep(&build_by_name("A1").unwrap());
        let mut phi = rep.clone();
        phi.g[0] = phi.g[0].scale(&FieldScalar::from_integer(0));
        phi.x[0] = phi.x[0].scale(&FieldScalar::from_integer(0));
        phi.y[0] = phi.y[0].scale(&FieldScalar::from_integer(0));
        assert!(matches!(end_rho_phi_basis(&rep, &phi), Err(IntertwineError::Inequivalent { .. })));
    }
}
