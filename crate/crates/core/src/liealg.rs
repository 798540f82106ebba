//! Chevalley bases and multiplication tables of complex semisimple Lie algebras.
//!
//! Basis order: `h_1, …, h_ℓ`, then `x_α` for the roots in [`RootSystem`] order
//! (positive roots, then their negatives). Structure constants of a Chevalley
//! basis are integers, so the table stores `i64`; vectors on top of it may live
//! over any [`Field`].

use crate::exactfield::{text, Field, FieldError};
use crate::linalg::{EchelonBasis, Matrix};
use crate::rootsys::{RootSystem, RootSystemError};
use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

const SAMPLED_TRIPLES: usize = 1000;
const JACOBI_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error(transparent)]
    RootSystem(#[from] RootSystemError),
    #[error("structure constant sign inconsistency: {0}")]
    SignInconsistency(String),
    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})")]
    Jacobi(usize, usize, usize),
    #[error("malformed table: {0}")]
    Malformed(String),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Sparse bracket `[b_i, b_j] = Σ c_k b_k`.
pub type SparseVec = Vec<(usize, i64)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebraTable {
    rs: RootSystem,
    labels: Vec<String>,
    table: Vec<Vec<SparseVec>>,
}

impl LieAlgebraTable {
    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn type_name(&self) -> String {
        self.rs.type_name()
    }

    /// Basis index of `x_α` for the root with index `root`.
    pub fn root_vector_index(&self, root: usize) -> usize {
        self.rank() + root
    }

    /// Root index of a basis element, `None` for Cartan elements.
    pub fn root_of_basis(&self, b: usize) -> Option<usize> {
        b.checked_sub(self.rank())
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[(usize, i64)] {
        &self.table[i][j]
    }

    /// Coefficient `N_{α,β}` in `[x_α, x_β] = N_{α,β} x_{α+β}`, when `α+β` is a root.
    pub fn structure_constant(&self, a: usize, b: usize) -> Option<i64> {
        let s = self.rs.add(a, b)?;
        let target = self.root_vector_index(s);
        self.table[self.root_vector_index(a)][self.root_vector_index(b)]
            .iter()
            .find(|(k, _)| *k == target)
            .map(|(_, c)| *c)
    }

    pub fn basis_vector<F: Field>(&self, i: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        v[i] = F::one();
        v
    }

    pub fn bracket<F: Field>(&self, v: &[F], w: &[F]) -> Vec<F> {
        let n = self.dim();
        let mut out = vec![F::zero(); n];
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in w.iter().enumerate() {
                if b.is_zero() || self.table[i][j].is_empty() {
                    continue;
                }
                let ab = a.mul_ref(b);
                for &(k, c) in &self.table[i][j] {
                    out[k] += &ab.mul_ref(&F::from_int(c));
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ [v, y]`.
    pub fn adjoint_matrix<F: Field>(&self, v: &[F]) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..n {
                for &(k, c) in &self.table[i][j] {
                    m[(k, j)] += &a.mul_ref(&F::from_int(c));
                }
            }
        }
        m
    }

    /// Killing form on the basis, `κ(b_i, b_j) = tr(ad b_i ∘ ad b_j)`.
    pub fn killing_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.dim();
        let mut out = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in i..n {
                let mut t = 0;
                for k in 0..n {
                    for &(m, c1) in &self.table[j][k] {
                        for &(kk, c2) in &self.table[i][m] {
                            if kk == k {
                                t += c1 * c2;
                            }
                        }
                    }
                }
                out[i][j] = t;
                out[j][i] = t;
            }
        }
        out
    }

    pub fn killing_form<F: Field>(&self, kappa: &[Vec<i64>], v: &[F], w: &[F]) -> F {
        let mut acc = F::zero();
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in w.iter().enumerate() {
                if !b.is_zero() && kappa[i][j] != 0 {
                    acc += &a.mul_ref(b).mul_ref(&F::from_int(kappa[i][j]));
                }
            }
        }
        acc
    }

    /// Checks the Jacobi identity on all basis triples, or on a fixed pseudo-random sample.
    pub fn check_jacobi(&self, full: bool) -> Result<(), LieError> {
        let n = self.dim();
        if full {
            for i in 0..n {
                for j in i + 1..n {
                    for k in j + 1..n {
                        if !self.jacobi_holds(i, j, k) {
                            return Err(LieError::Jacobi(i, j, k));
                        }
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(JACOBI_SEED);
            for _ in 0..SAMPLED_TRIPLES {
                let (i, j, k) = (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n));
                if !self.jacobi_holds(i, j, k) {
                    return Err(LieError::Jacobi(i, j, k));
                }
            }
        }
        Ok(())
    }

    fn jacobi_holds(&self, i: usize, j: usize, k: usize) -> bool {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
            for &(m, c1) in &self.table[a][b] {
                for &(r, c2) in &self.table[m][c] {
                    *acc.entry(r).or_insert(0) += c1 * c2;
                }
            }
        }
        acc.values().all(|&v| v == 0)
    }

    /// `[g_i, g_j]=0`, `[g_i,x_j]=⟨α_j,α_i^∨⟩x_j`, `[g_i,y_j]=−⟨α_j,α_i^∨⟩y_j`, `[x_i,y_j]=δ_ij g_i`
    /// for generator images in this algebra, with pairings taken from `cartan`.
    pub fn verify_canonical<F: Field>(
        &self,
        cartan: &[Vec<i64>],
        cg: &CanonicalGenerators<F>,
    ) -> Result<(), RelationViolation> {
        let l = cartan.len();
        let n = self.dim();
        if cg.g.len() != l || cg.x.len() != l || cg.y.len() != l {
            return Err(RelationViolation(format!("expected {l} generators of each kind")));
        }
        if cg.g.iter().chain(&cg.x).chain(&cg.y).any(|v| v.len() != n) {
            return Err(RelationViolation(format!("generator vectors must have {n} coordinates")));
        }
        let zero = vec![F::zero(); n];
        let scaled = |v: &[F], c: i64| -> Vec<F> { v.iter().map(|a| a.mul_ref(&F::from_int(c))).collect() };
        for i in 0..l {
            for j in 0..l {
                if self.bracket(&cg.g[i], &cg.g[j]) != zero {
                    return Err(RelationViolation(format!("[g{},g{}] != 0", i + 1, j + 1)));
                }
            }
        }
        for i in 0..l {
            for j in 0..l {
                let c = cartan[j][i];
                if self.bracket(&cg.g[i], &cg.x[j]) != scaled(&cg.x[j], c) {
                    return Err(RelationViolation(format!("[g{},x{}] != {}*x{}", i + 1, j + 1, c, j + 1)));
                }
                if self.bracket(&cg.g[i], &cg.y[j]) != scaled(&cg.y[j], -c) {
                    return Err(RelationViolation(format!("[g{},y{}] != {}*y{}", i + 1, j + 1, -c, j + 1)));
                }
            }
        }
        for i in 0..l {
            for j in 0..l {
                let expect = if i == j { cg.g[i].clone() } else { zero.clone() };
                if self.bracket(&cg.x[i], &cg.y[j]) != expect {
                    let rhs = if i == j { format!("g{}", i + 1) } else { "0".into() };
                    return Err(RelationViolation(format!("[x{},y{}] != {}", i + 1, j + 1, rhs)));
                }
            }
        }
        Ok(())
    }

    /// `g_i = h_i`, `x_i = x_{α_i}`, `y_i = x_{−α_i}`.
    pub fn default_canonical_generators<F: Field>(&self) -> CanonicalGenerators<F> {
        let l = self.rank();
        CanonicalGenerators {
            g: (0..l).map(|i| self.basis_vector(i)).collect(),
            x: (0..l).map(|i| self.basis_vector(self.root_vector_index(i))).collect(),
            y: (0..l).map(|i| self.basis_vector(self.root_vector_index(self.rs.negative_of(i)))).collect(),
        }
    }

    /// Echelonized basis of the subalgebra generated by `vectors`.
    pub fn subalgebra_closure<F: Field>(&self, vectors: &[Vec<F>]) -> EchelonBasis<F> {
        let mut basis = EchelonBasis::new(self.dim());
        let mut elems: Vec<Vec<F>> = Vec::new();
        let mut queue: Vec<Vec<F>> = vectors.to_vec();
        while let Some(v) = queue.pop() {
            if !basis.insert(&v) {
                continue;
            }
            for e in &elems {
                queue.push(self.bracket(e, &v));
            }
            elems.push(v);
        }
        basis
    }

    pub fn to_json(&self) -> TableJson {
        let mut table = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if !self.table[i][j].is_empty() {
                    let entries = self.table[i][j].iter().map(|&(k, c)| (k, c.to_string())).collect();
                    table.push((i, j, entries));
                }
            }
        }
        TableJson {
            type_name: self.type_name(),
            cartan: self.rs.cartan_matrix().clone(),
            dim: self.dim(),
            labels: self.labels.clone(),
            table,
        }
    }

    /// Rebuilds a table from its JSON form; the structure constants must be integers.
    pub fn from_json(js: &TableJson) -> Result<Self, LieError> {
        let rs = RootSystem::new(js.cartan.clone())?;
        let labels = basis_labels(&rs);
        if js.dim != labels.len() || js.labels != labels {
            return Err(LieError::Malformed("labels or dimension do not match the Cartan matrix".into()));
        }
        let n = labels.len();
        let mut table = vec![vec![SparseVec::new(); n]; n];
        for (i, j, entries) in &js.table {
            if *i >= n || *j >= n || i >= j {
                return Err(LieError::Malformed(format!("bad index pair ({i}, {j})")));
            }
            let mut v = SparseVec::new();
            for (k, c) in entries {
                let q = text::parse_real(c)?
                    .to_rational()
                    .filter(|q| q.is_integer())
                    .ok_or_else(|| LieError::Malformed(format!("non-integer coefficient {c}")))?;
                let c: i64 = q.to_integer().try_into().map_err(|_| LieError::Malformed(c.clone()))?;
                v.push((*k, c));
            }
            v.sort_unstable();
            table[*j][*i] = v.iter().map(|&(k, c)| (k, -c)).collect();
            table[*i][*j] = v;
        }
        Ok(LieAlgebraTable { rs, labels, table })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationViolation(pub String);

impl std::fmt::Display for RelationViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonical generating set `(g_i, x_i, y_i)` as coefficient vectors in some table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalGenerators<F> {
    pub g: Vec<Vec<F>>,
    pub x: Vec<Vec<F>>,
    pub y: Vec<Vec<F>>,
}

/// Serialized multiplication table. Only pairs `i < j` with nonzero bracket are listed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    #[serde(rename = "type")]
    pub type_name: String,
    pub cartan: Vec<Vec<i64>>,
    pub dim: usize,
    pub labels: Vec<String>,
    pub table: Vec<(usize, usize, Vec<(usize, String)>)>,
}

fn basis_labels(rs: &RootSystem) -> Vec<String> {
    let mut labels: Vec<String> = (1..=rs.rank()).map(|i| format!("h{i}")).collect();
    for r in rs.roots() {
        let parts: Vec<String> = r.iter().map(|c| c.to_string()).collect();
        labels.push(format!("x({})", parts.join(",")));
    }
    labels
}

/// Chevalley basis of the algebra with root system `rs`.
///
/// Signs: `N_{γ,δ} = +(r+1)` on every extraspecial pair `(γ, δ)` (γ the simple root
/// of smallest index with `ξ − γ ∈ Φ`), all other constants forced by the standard
/// identities, and `N_{−α,−β} = −N_{α,β}`. The Jacobi identity is then verified:
/// on every triple when `full_jacobi` is set or the rank is at most 4, otherwise
/// on a fixed sample of 1000 triples.
pub fn build_chevalley(rs: &RootSystem, full_jacobi: bool) -> Result<LieAlgebraTable, LieError> {
    let n_consts = structure_constants(rs)?;
    let l = rs.rank();
    let nr = rs.num_roots();
    let n = l + nr;
    let mut table = vec![vec![SparseVec::new(); n]; n];
    for a in 0..nr {
        let ia = l + a;
        for i in 0..l {
            let c = rs.pairing(a, i);
            if c != 0 {
                table[i][ia] = vec![(ia, c)];
                table[ia][i] = vec![(ia, -c)];
            }
        }
        // [x_α, x_{−α}] = h_α = Σ_i a_i d_i / d_α · h_i
        let neg = rs.negative_of(a);
        let d_alpha = rs.norm(a) / 2;
        let h: SparseVec = rs
            .root(a)
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, c)| (i, c * rs.half_norms()[i] / d_alpha))
            .collect();
        table[ia][l + neg] = h;
        for b in 0..nr {
            if let Some(s) = rs.add(a, b) {
                table[ia][l + b] = vec![(l + s, n_consts[&(a, b)])];
            }
        }
    }
    let alg = LieAlgebraTable { rs: rs.clone(), labels: basis_labels(rs), table };
    alg.check_jacobi(full_jacobi || l <= 4)?;
    Ok(alg)
}

pub fn build_by_name(name: &str) -> Result<LieAlgebraTable, LieError> {
    build_chevalley(&RootSystem::from_name(name)?, false)
}

/// `N_{α,β}` for every ordered root pair with `α+β ∈ Φ`.
fn structure_constants(rs: &RootSystem) -> Result<BTreeMap<(usize, usize), i64>, LieError> {
    let np = rs.num_positive();
    let l = rs.rank();
    let mut pos: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    let sq = |v: &[i64]| rs.inner(v, v);
    let sub = |a: usize, b: usize| -> Vec<i64> { rs.root(a).iter().zip(rs.root(b)).map(|(x, y)| x - y).collect() };

    for xi in l..np {
        let (gamma, delta) = (0..l)
            .find_map(|i| rs.index_of(&sub(xi, i)).filter(|&d| rs.is_positive(d)).map(|d| (i, d)))
            .ok_or_else(|| LieError::SignInconsistency(format!("root {xi} has no extraspecial pair")))?;
        let r = rs.root_string_r(delta, gamma).expect("distinct roots");
        pos.insert((gamma, delta), r + 1);
        pos.insert((delta, gamma), -(r + 1));
        let xi_sq = sq(rs.root(xi));
        for a in 0..np {
            let Some(b) = rs.index_of(&sub(xi, a)) else { continue };
            if !rs.is_positive(b) || pos.contains_key(&(a, b)) {
                continue;
            }
            // relation among α, β, −γ, −δ
            let ng = rs.negative_of(gamma);
            let nd = rs.negative_of(delta);
            let mut total = Ratio::from_integer(0i64);
            if let (Some(bg), Some(_)) = (rs.add(b, ng), rs.add(a, nd)) {
                let t = lookup(rs, &pos, b, ng)? * lookup(rs, &pos, a, nd)?;
                total += Ratio::new(t, sq(rs.root(bg)));
            }
            if let (Some(ag), Some(_)) = (rs.add(a, ng), rs.add(b, nd)) {
                let t = lookup(rs, &pos, ng, a)? * lookup(rs, &pos, b, nd)?;
                total += Ratio::new(t, sq(rs.root(ag)));
            }
            let val = total * Ratio::new(xi_sq, r + 1);
            if !val.is_integer() {
                return Err(LieError::SignInconsistency(format!("N for roots {a},{b} is {val}")));
            }
            let v = val.to_integer();
            let expect = rs.root_string_r(b, a).expect("distinct") + 1;
            if v.abs() != expect {
                return Err(LieError::SignInconsistency(format!("|N_({a},{b})| = {} but r+1 = {expect}", v.abs())));
            }
            pos.insert((a, b), v);
        }
    }
    let nr = rs.num_roots();
    let mut all = BTreeMap::new();
    for a in 0..nr {
        for b in 0..nr {
            if rs.add(a, b).is_some() {
                all.insert((a, b), lookup(rs, &pos, a, b)?);
            }
        }
    }
    Ok(all)
}

/// `N_{a,b}` for arbitrary roots, reduced to pairs of positive roots already in `pos`.
fn lookup(rs: &RootSystem, pos: &BTreeMap<(usize, usize), i64>, a: usize, b: usize) -> Result<i64, LieError> {
    let missing = || LieError::SignInconsistency(format!("N_({a},{b}) requested before it was fixed"));
    let (pa, pb) = (rs.is_positive(a), rs.is_positive(b));
    if pa && pb {
        return pos.get(&(a, b)).copied().ok_or_else(missing);
    }
    if !pa && !pb {
        return Ok(-lookup(rs, pos, rs.negative_of(a), rs.negative_of(b))?);
    }
    // a + b + c = 0 with N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
    let s = rs.add(a, b).ok_or_else(missing)?;
    let c = rs.negative_of(s);
    let (na, nb, nc) = (rs.norm(a), rs.norm(b), rs.norm(c));
    let v = if rs.is_positive(c) == pa {
        Ratio::new(nc * lookup(rs, pos, c, a)?, nb)
    } else {
        Ratio::new(nc * lookup(rs, pos, b, c)?, na)
    };
    if !v.is_integer() {
        return Err(LieError::SignInconsistency(format!("N_({a},{b}) = {v}")));
    }
    Ok(v.to_integer())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::FieldScalar;

    fn f(n: i64) -> FieldScalar {
        FieldScalar::from_integer(n)
    }

    #[test]
    fn sl2_table() {
        let a1 = build_by_name("A1").unwrap();
        assert_eq!(a1.dim(), 3);
        assert_eq!(a1.bracket_basis(0, 1), &[(1, 2)]);
        assert_eq!(a1.bracket_basis(0, 2), &[(2, -2)]);
        assert_eq!(a1.bracket_basis(1, 2), &[(0, 1)]);
    }

    #[test]
    fn dimensions() {
        for (name, dim) in [("A3", 15), ("B2", 10), ("G2", 14), ("C3", 21), ("F4", 52), ("A1+G2", 17)] {
            assert_eq!(build_by_name(name).unwrap().dim(), dim, "{name}");
        }
    }

    #[test]
    fn structure_constants_are_plus_minus_r_plus_one() {
        for name in ["A3", "B3", "C3", "G2", "F4"] {
            let alg = build_by_name(name).unwrap();
            let rs = alg.root_system();
            for a in 0..rs.num_roots() {
                for b in 0..rs.num_roots() {
                    if let Some(n) = alg.structure_constant(a, b) {
                        let r = rs.root_string_r(b, a).unwrap();
                        assert_eq!(n.abs(), r + 1, "{name}");
                        assert_eq!(alg.structure_constant(b, a), Some(-n));
                    }
                }
            }
        }
    }

    #[test]
    fn g2_constants_bounded_by_three() {
        let alg = build_by_name("G2").unwrap();
        let rs = alg.root_system();
        let mut seen = std::collections::BTreeSet::new();
        for a in 0..rs.num_roots() {
            for b in 0..rs.num_roots() {
                if let Some(n) = alg.structure_constant(a, b) {
                    seen.insert(n.abs());
                }
            }
        }
        assert_eq!(seen.into_iter().collect::<Vec<_>>(), vec![1, 2, 3]);
    }

    #[test]
    fn coroot_of_simple_root_is_h_i() {
        let alg = build_by_name("B3").unwrap();
        for i in 0..3 {
            let xi = alg.root_vector_index(i);
            let yi = alg.root_vector_index(alg.root_system().negative_of(i));
            assert_eq!(alg.bracket_basis(xi, yi), &[(i, 1)]);
        }
    }

    #[test]
    fn default_generators_verify() {
        let alg = build_by_name("A2").unwrap();
        let cg: CanonicalGenerators<FieldScalar> = alg.default_canonical_generators();
        let cartan = alg.root_system().cartan_matrix().clone();
        assert!(alg.verify_canonical(&cartan, &cg).is_ok());
        let mut bad = cg.clone();
        bad.x[0] = bad.x[0].iter().map(|v| v * &f(2)).collect();
        let err = alg.verify_canonical(&cartan, &bad).unwrap_err();
        assert_eq!(err.0, "[x1,y1] != g1");
    }

    #[test]
    fn adjoint_is_a_representation() {
        let alg = build_by_name("B2").unwrap();
        let v: Vec<FieldScalar> = (0..alg.dim() as i64).map(|i| f(i % 3 - 1)).collect();
        let w: Vec<FieldScalar> = (0..alg.dim() as i64).map(|i| f((i * 7) % 5 - 2)).collect();
        let lhs = alg.adjoint_matrix(&alg.bracket(&v, &w));
        let (av, aw) = (alg.adjoint_matrix(&v), alg.adjoint_matrix(&w));
        assert_eq!(lhs, av.mul(&aw).sub(&aw.mul(&av)));
    }

    #[test]
    fn adjoint_of_h_in_sl2() {
        let alg = build_by_name("A1").unwrap();
        let h: Vec<FieldScalar> = alg.basis_vector(0);
        let m = alg.adjoint_matrix(&h);
        assert_eq!((m[(0, 0)].clone(), m[(1, 1)].clone(), m[(2, 2)].clone()), (f(0), f(2), f(-2)));
    }

    #[test]
    fn killing_matrix_matches_traces() {
        let alg = build_by_name("G2").unwrap();
        let k = alg.killing_matrix();
        for (i, j) in [(0, 0), (0, 1), (2, 8), (3, 9), (5, 11)] {
            let ai = alg.adjoint_matrix(&alg.basis_vector::<FieldScalar>(i));
            let aj = alg.adjoint_matrix(&alg.basis_vector::<FieldScalar>(j));
            assert_eq!(ai.mul(&aj).trace(), f(k[i][j]));
        }
    }

    #[test]
    fn closures() {
        let alg = build_by_name("A3").unwrap();
        let rs = alg.root_system();
        let x = |r: usize| alg.basis_vector::<FieldScalar>(alg.root_vector_index(r));
        let sl2 = alg.subalgebra_closure(&[x(0), x(rs.negative_of(0))]);
        assert_eq!(sl2.len(), 3);
        let a2 = alg.subalgebra_closure(&[x(0), x(rs.negative_of(0)), x(1), x(rs.negative_of(1))]);
        assert_eq!(a2.len(), 8);
        let all: Vec<Vec<FieldScalar>> = (0..alg.dim()).map(|i| alg.basis_vector(i)).collect();
        assert_eq!(alg.subalgebra_closure(&all).len(), 15);
    }

    #[test]
    fn json_round_trip() {
        let alg = build_by_name("G2").unwrap();
        let js = serde_json::to_string(&alg.to_json()).unwrap();
        let back: TableJson = serde_json::from_str(&js).unwrap();
        assert_eq!(LieAlgebraTable::from_json(&back).unwrap(), alg);
    }
}
