use super::system::split_complex;
use super::{EmbedError, Embedding};
use crate::exactfield::{sqrt_in_field, ComplexScalar, Field, FieldScalar};
use crate::liealg::{CanonicalGenerators, LieAlgebraTable};
use crate::linalg::Matrix;
use crate::polysolve::{groebner, solve, Poly, SolutionSet};
use crate::realform::{check_automorphism, CMatrix};

/// One term `a·y_β` of `ε(x_α)` with the matching coefficient `b` of `y_{−β}` in `ε(x_{−α})`.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchEntry {
    /// Index of `β` among the target roots.
    pub beta: usize,
    pub a: ComplexScalar,
    pub b: ComplexScalar,
}

impl BranchEntry {
    /// `μ = b / ā`, undefined when `a = 0`.
    pub fn mu(&self) -> Option<ComplexScalar> {
        self.a.conj().inv().map(|i| self.b.mul_ref(&i))
    }
}

/// Root-vector decomposition of the images of the simple root vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct BranchingData {
    pub entries: Vec<Vec<BranchEntry>>,
}

pub fn branching(emb: &Embedding) -> Result<BranchingData, EmbedError> {
    let t = &emb.target;
    let rs = t.root_system();
    let mut entries = Vec::new();
    for i in 0..emb.source.rank() {
        let (x, y) = (&emb.images.x[i], &emb.images.y[i]);
        let mut row = Vec::new();
        for (k, c) in x.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match t.root_of_basis(k) {
                Some(r) if rs.is_positive(r) => {
                    let b = y[t.root_vector_index(rs.negative_of(r))].clone();
                    row.push(BranchEntry { beta: r, a: c.clone(), b });
                }
                _ => {
                    return Err(EmbedError::Malformed(format!(
                        "image of x{} has a component on {}, not a positive root vector",
                        i + 1,
                        t.labels()[k]
                    )))
                }
            }
        }
        for (k, c) in y.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let ok = t
                .root_of_basis(k)
                .is_some_and(|r| !rs.is_positive(r) && row.iter().any(|e| e.beta == rs.negative_of(r)));
            if !ok {
                return Err(EmbedError::Malformed(format!(
                    "image of y{} has a component on {} outside the negatives of the x{} support",
                    i + 1,
                    t.labels()[k],
                    i + 1
                )));
            }
        }
        entries.push(row);
    }
    Ok(BranchingData { entries })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BalanceCheck {
    pub balanced: bool,
    /// `(simple root index, target root index, μ)` for every pair with `b ≠ ā`.
    pub witnesses: Vec<(usize, usize, Option<ComplexScalar>)>,
}

pub fn is_balanced(emb: &Embedding) -> Result<BalanceCheck, EmbedError> {
    let bd = branching(emb)?;
    let mut witnesses = Vec::new();
    for (i, row) in bd.entries.iter().enumerate() {
        for e in row {
            if e.b != e.a.conj() {
                witnesses.push((i, e.beta, e.mu()));
            }
        }
    }
    Ok(BalanceCheck { balanced: witnesses.is_empty(), witnesses })
}

/// The polynomial system in `s_{α,β}`, `t_{α,β}` whose real solutions give balanced
/// replacements `X_i = Σ (s+ıt) y_β`, `Y_i = Σ (s−ıt) y_{−β}` with the same `ε(h_i)`.
#[derive(Debug, Clone)]
pub struct BalancingSystem {
    pub variables: Vec<String>,
    /// `(simple root index, target root index)` for variable pair `k`
    /// (`s` is variable `k`, `t` is variable `m + k`).
    pub slots: Vec<(usize, usize)>,
    pub polys: Vec<Poly<FieldScalar>>,
}

fn poly_bracket<C: Field>(alg: &LieAlgebraTable, u: &[Poly<C>], v: &[Poly<C>], nvars: usize) -> Vec<Poly<C>> {
    let mut out = vec![Poly::zero(nvars); alg.dim()];
    for (i, a) in u.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in v.iter().enumerate() {
            if b.is_zero() || alg.bracket_basis(i, j).is_empty() {
                continue;
            }
            let ab = a.mul(b);
            for &(k, c) in alg.bracket_basis(i, j) {
                out[k].add_assign(&ab.scale(&C::from_int(c)));
            }
        }
    }
    out
}

pub fn balancing_system(emb: &Embedding) -> Result<BalancingSystem, EmbedError> {
    let bd = branching(emb)?;
    let t = &emb.target;
    let rs = t.root_system();
    let slots: Vec<(usize, usize)> =
        bd.entries.iter().enumerate().flat_map(|(i, row)| row.iter().map(move |e| (i, e.beta))).collect();
    let m = slots.len();
    let nv = 2 * m;
    let mut variables: Vec<String> = slots.iter().map(|(i, b)| format!("s{}_{}", i + 1, b + 1)).collect();
    variables.extend(slots.iter().map(|(i, b)| format!("t{}_{}", i + 1, b + 1)));
    let l = emb.source.rank();
    let n = t.dim();
    let ii = ComplexScalar::imag_unit();
    let cvar = |k: usize, conj: bool| -> Poly<ComplexScalar> {
        let s = Poly::var(nv, k);
        let tt = Poly::var(nv, m + k).scale(&if conj { -ii.clone() } else { ii.clone() });
        s.add(&tt)
    };
    let mut xs = vec![vec![Poly::zero(nv); n]; l];
    let mut ys = vec![vec![Poly::zero(nv); n]; l];
    for (k, &(i, beta)) in slots.iter().enumerate() {
        xs[i][t.root_vector_index(beta)] = cvar(k, false);
        ys[i][t.root_vector_index(rs.negative_of(beta))] = cvar(k, true);
    }
    let gs: Vec<Vec<Poly<ComplexScalar>>> =
        emb.images.g.iter().map(|g| g.iter().map(|c| Poly::constant(nv, c.clone())).collect()).collect();
    let cartan = emb.source.root_system().cartan_matrix();
    let mut eqs: Vec<Poly<ComplexScalar>> = Vec::new();
    for i in 0..l {
        for j in 0..l {
            let c = ComplexScalar::from_integer(cartan[j][i]);
            let gx = poly_bracket(t, &gs[i], &xs[j], nv);
            let gy = poly_bracket(t, &gs[i], &ys[j], nv);
            for k in 0..n {
                eqs.push(gx[k].sub(&xs[j][k].scale(&c)));
                eqs.push(gy[k].add(&ys[j][k].scale(&c)));
            }
            let xy = poly_bracket(t, &xs[i], &ys[j], nv);
            for k in 0..n {
                let rhs = if i == j { gs[i][k].clone() } else { Poly::zero(nv) };
                eqs.push(xy[k].sub(&rhs));
            }
        }
    }
    let polys = dedupe(eqs.iter().flat_map(|e| {
        let (re, im) = split_complex(e);
        [re, im]
    }));
    Ok(BalancingSystem { variables, slots, polys })
}

/// Nonzero, monic, without repeats, in first-seen order.
pub(crate) fn dedupe(polys: impl IntoIterator<Item = Poly<FieldScalar>>) -> Vec<Poly<FieldScalar>> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let p = p.monic();
        let key: Vec<(Vec<u16>, FieldScalar)> = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
        if seen.insert(key) {
            out.push(p);
        }
    }
    out
}

impl BalancingSystem {
    /// The embedding rebuilt from a real solution `(ŝ, t̂)`.
    pub fn rebuild(&self, emb: &Embedding, point: &[FieldScalar]) -> Result<Embedding, EmbedError> {
        let t = &emb.target;
        let rs = t.root_system();
        let m = self.slots.len();
        let n = t.dim();
        let l = emb.source.rank();
        let mut x = vec![vec![ComplexScalar::zero(); n]; l];
        let mut y = vec![vec![ComplexScalar::zero(); n]; l];
        for (k, &(i, beta)) in self.slots.iter().enumerate() {
            let z = ComplexScalar::new(point[k].clone(), point[m + k].clone());
            y[i][t.root_vector_index(rs.negative_of(beta))] = z.conj();
            x[i][t.root_vector_index(beta)] = z;
        }
        Embedding::new(
            emb.source.clone(),
            emb.target.clone(),
            CanonicalGenerators { g: emb.images.g.clone(), x, y },
        )
    }
}

/// Solves the balancing system with all `t = 0` and rebuilds the embedding from
/// the first solution with all `s > 0` (or the first solution if there is none).
pub fn balance_by_system(emb: &Embedding) -> Result<Embedding, EmbedError> {
    let sys = balancing_system(emb)?;
    let m = sys.slots.len();
    let nv = 2 * m;
    let mut polys = sys.polys.clone();
    polys.extend((0..m).map(|k| Poly::var(nv, m + k)));
    let gb = groebner(&polys)?;
    match solve(&gb, nv)? {
        SolutionSet::Finite(pts) => {
            let pick = pts.iter().find(|p| p[..m].iter().all(|s| s.is_positive())).unwrap_or(&pts[0]);
            let out = sys.rebuild(emb, pick)?;
            if !is_balanced(&out)?.balanced {
                return Err(EmbedError::Unbalanceable("rebuilt embedding is not balanced".into()));
            }
            Ok(out)
        }
        SolutionSet::Inconsistent => Err(EmbedError::Unbalanceable("balancing system has no real solution".into())),
        SolutionSet::Parametric { .. } => Err(EmbedError::Unbalanceable(
            "balancing system with t = 0 still has infinitely many solutions".into(),
        )),
    }
}

#[derive(Debug, Clone)]
pub enum RescalingOutcome {
    /// `δ_j` per target simple root, the diagonal automorphism `φ`, and `ε' = φ⁻¹ε`.
    Success { deltas: Vec<FieldScalar>, phi: CMatrix, embedding: Embedding },
    /// The δ-system is inconsistent or not of the pure form `{δ_j² − r_j}`.
    Failure { reason: String, groebner: Vec<String> },
}

/// The rescaling trick with `φ: g_j ↦ g_j, y_β ↦ δ_β y_β, y_{−β} ↦ δ_β⁻¹ y_{−β}`.
pub fn rescaling_trick(emb: &Embedding) -> Result<RescalingOutcome, EmbedError> {
    let bd = branching(emb)?;
    let t = &emb.target;
    let rs = t.root_system();
    let m = t.rank();
    let fail = |reason: String, gb: &[Poly<FieldScalar>]| {
        let vars: Vec<String> = (1..=m).map(|j| format!("d{j}")).collect();
        Ok(RescalingOutcome::Failure {
            reason,
            groebner: gb.iter().map(|p| crate::polysolve::format_poly(p, &vars)).collect(),
        })
    };
    // δ_β² = 1/μ, i.e. Π δ_j^{2e_j} − 1/μ
    let mut polys = Vec::new();
    let mut used = vec![false; m];
    for row in &bd.entries {
        for e in row {
            let Some(mu) = e.mu() else {
                return fail(format!("coefficient a vanishes for target root {}", e.beta + 1), &[]);
            };
            if !mu.im.is_zero() || !mu.re.is_positive() {
                return fail(format!("μ = {mu} is not a positive real number"), &[]);
            }
            let root = rs.root(e.beta);
            let mut mono = vec![0u16; m];
            for (j, &c) in root.iter().enumerate() {
                mono[j] = (2 * c) as u16;
                used[j] |= c != 0;
            }
            let mut p = Poly::zero(m);
            p.add_term(mono, FieldScalar::one());
            p.add_term(vec![0; m], -mu.re.inverse().expect("positive"));
            polys.push(p);
        }
    }
    for (j, u) in used.iter().enumerate() {
        if !u {
            polys.push(Poly::var(m, j).sub(&Poly::one(m)));
        }
    }
    let gb = groebner(&polys)?;
    if gb.iter().any(|g| g.is_constant()) {
        return fail("the δ-system is inconsistent".into(), &gb);
    }
    let mut deltas = vec![FieldScalar::one(); m];
    let mut seen = vec![false; m];
    for g in &gb {
        let vars = g.variables();
        let pure = vars.len() == 1 && g.num_terms() == 2 && g.as_constant().is_none() && {
            let v = vars[0];
            let d = g.degree_in(v);
            (d == 1 || d == 2) && !g.coefficient(&vec![0; m]).is_zero()
        };
        if !pure {
            return fail("Gröbner basis is not of the form {δ_j² − r_j}".into(), &gb);
        }
        let v = vars[0];
        let r = -g.coefficient(&vec![0; m]);
        let d = if g.degree_in(v) == 1 {
            r
        } else {
            if !r.is_positive() {
                return fail(format!("δ{}² = {r} has no positive root", v + 1), &gb);
            }
            match sqrt_in_field(&r)? {
                Some(s) => s,
                None => return fail(format!("√{r} lies outside the field"), &gb),
            }
        };
        deltas[v] = d;
        seen[v] = true;
    }
    if seen.iter().any(|s| !s) {
        return fail("some δ_j is not determined".into(), &gb);
    }
    // δ_β for every root, then φ and φ⁻¹ as diagonal matrices
    let n = t.dim();
    let mut phi = Matrix::identity(n);
    let mut phi_inv = Matrix::identity(n);
    for r in 0..rs.num_roots() {
        let mut d = FieldScalar::one();
        for (j, &c) in rs.root(r).iter().enumerate() {
            let f = if c >= 0 { deltas[j].clone() } else { deltas[j].inverse().expect("nonzero") };
            for _ in 0..c.unsigned_abs() {
                d = d * f.clone();
            }
        }
        let k = t.root_vector_index(r);
        phi_inv[(k, k)] = ComplexScalar::real(d.inverse().expect("nonzero"));
        phi[(k, k)] = ComplexScalar::real(d);
    }
    check_automorphism(t, &phi)?;
    let out = emb.compose(&phi_inv);
    let out = Embedding::new(out.source, out.target, out.images)?;
    if !is_balanced(&out)?.balanced {
        return fail("rescaled embedding is still unbalanced".into(), &gb);
    }
    Ok(RescalingOutcome::Success { deltas, phi, embedding: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedpipe::tests::regular_a2_in_a3;
    use crate::liealg::build_by_name;

    fn principal_a1_in_a2(a: [i64; 2], b: [i64; 2]) -> Embedding {
        let src = build_by_name("A1").unwrap();
        let tgt = build_by_name("A2").unwrap();
        let rs = tgt.root_system();
        let n = tgt.dim();
        let mut g = vec![ComplexScalar::zero(); n];
        let mut x = g.clone();
        let mut y = g.clone();
        for j in 0..2 {
            g[j] = ComplexScalar::from_integer(2);
            x[tgt.root_vector_index(j)] = ComplexScalar::from_integer(a[j]);
            y[tgt.root_vector_index(rs.negative_of(j))] = ComplexScalar::from_ratio(2, a[j]) * ComplexScalar::from_integer(b[j]);
        }
        Embedding::new(src, tgt, CanonicalGenerators { g: vec![g], x: vec![x], y: vec![y] }).unwrap()
    }

    #[test]
    fn regular_embedding_is_balanced() {
        let emb = regular_a2_in_a3();
        let bd = branching(&emb).unwrap();
        assert_eq!(bd.entries.len(), 2);
        assert_eq!(bd.entries[0].len(), 1);
        assert_eq!(bd.entries[0][0].a, ComplexScalar::one());
        assert!(is_balanced(&emb).unwrap().balanced);
    }

    #[test]
    fn principal_branching_and_witness() {
        // x = 2y_{α1} + y_{α2}, y = y_{-α1} + 2y_{-α2}: μ = 1/2 and 2
        let emb = principal_a1_in_a2([2, 1], [1, 1]);
        let bd = branching(&emb).unwrap();
        assert_eq!(bd.entries[0].iter().map(|e| e.beta).collect::<Vec<_>>(), vec![0, 1]);
        let chk = is_balanced(&emb).unwrap();
        assert!(!chk.balanced);
        assert_eq!(chk.witnesses[0].2, Some(ComplexScalar::from_ratio(1, 2)));
        assert_eq!(chk.witnesses[1].2, Some(ComplexScalar::from_integer(2)));
    }

    #[test]
    fn rescaling_repairs_principal() {
        let emb = principal_a1_in_a2([2, 1], [1, 1]);
        let RescalingOutcome::Success { deltas, embedding, .. } = rescaling_trick(&emb).unwrap() else { panic!() };
        assert_eq!(deltas[0].mul_ref(&deltas[0]), FieldScalar::from_integer(2));
        assert_eq!(deltas[1].mul_ref(&deltas[1]), FieldScalar::from_ratio(1, 2));
        assert!(is_balanced(&embedding).unwrap().balanced);
    }

    #[test]
    fn balancing_system_solution_is_balanced() {
        let emb = principal_a1_in_a2([2, 1], [1, 1]);
        let sys = balancing_system(&emb).unwrap();
        assert_eq!(sys.variables, vec!["s1_1", "s1_2", "t1_1", "t1_2"]);
        let out = balance_by_system(&emb).unwrap();
        assert!(is_balanced(&out).unwrap().balanced);
        // the balanced coefficients are √2
        let two = ComplexScalar::from_integer(2);
        let x = &out.images.x[0];
        assert_eq!(x[out.target.root_vector_index(0)].mul_ref(&x[out.target.root_vector_index(0)]), two);
    }
}
