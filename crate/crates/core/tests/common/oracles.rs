//! Independent checks shared by the property tests and the acceptance runner.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use realforms::embedpipe::{Embedding, PipelineResult};
use realforms::exactfield::{ComplexScalar, Field, FieldScalar};
use realforms::intertwine::Representation;
use realforms::liealg::{CanonicalGenerators, LieAlgebraTable};
use realforms::linalg::{EchelonBasis, Matrix};
use realforms::polysolve::{solve, split_case, Poly, SolutionSet};
use realforms::realform::{tau, Involution};
use std::collections::BTreeMap;

/// `[[a,b],c] + [[b,c],a] + [[c,a],b]` on basis elements, straight from the table.
pub fn jacobi_triple(alg: &LieAlgebraTable, i: usize, j: usize, k: usize) -> bool {
    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        for &(m, c1) in alg.bracket_basis(a, b) {
            for &(r, c2) in alg.bracket_basis(m, c) {
                *acc.entry(r).or_default() += c1 * c2;
            }
        }
    }
    acc.values().all(|&v| v == 0)
}

/// First failing triple, over all triples or over `samples` seeded draws.
pub fn jacobi_failure(alg: &LieAlgebraTable, samples: Option<usize>) -> Option<(usize, usize, usize)> {
    let n = alg.dim();
    match samples {
        None => (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .find(|&(i, j, k)| !jacobi_triple(alg, i, j, k)),
        Some(count) => {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6a61_636f_6269);
            (0..count)
                .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n), rng.gen_range(0..n)))
                .find(|&(i, j, k)| !jacobi_triple(alg, i, j, k))
        }
    }
}

/// Killing form by `tr(ad u · ad v)` on the compact basis, tested for negative
/// definiteness with Sylvester's criterion.
pub fn killing_negative_definite_by_trace(alg: &LieAlgebraTable, vs: &[Vec<ComplexScalar>]) -> bool {
    let ads: Vec<Matrix<ComplexScalar>> = vs.iter().map(|v| alg.adjoint_matrix(v)).collect();
    let m = vs.len();
    let mut g = Matrix::<FieldScalar>::zeros(m, m);
    for a in 0..m {
        for b in a..m {
            let t = ads[a].mul(&ads[b]).trace();
            if !t.im.is_zero() {
                return false;
            }
            g[(a, b)] = t.re.clone();
            g[(b, a)] = t.re;
        }
    }
    (1..=m).all(|k| {
        let minor = Matrix::from_rows((0..k).map(|i| (0..k).map(|j| g[(i, j)].clone()).collect()).collect());
        let d = minor.determinant();
        if k % 2 == 1 {
            d.is_negative()
        } else {
            d.is_positive()
        }
    })
}

fn int_matrix(rows: Vec<Vec<i64>>) -> Matrix<FieldScalar> {
    Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(FieldScalar::from_integer).collect()).collect())
}

fn unit(n: usize, i: usize, j: usize) -> Matrix<FieldScalar> {
    let mut m = Matrix::zeros(n, n);
    m[(i, j)] = FieldScalar::one();
    m
}

fn kron(a: &Matrix<FieldScalar>, b: &Matrix<FieldScalar>) -> Matrix<FieldScalar> {
    let (n, m) = (a.rows(), b.rows());
    let mut out = Matrix::zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[(i * m + k, j * m + l)] = &a[(i, j)] * &b[(k, l)];
                }
            }
        }
    }
    out
}

/// Irreducible sl2-module of highest weight `n` in the basis `v_k = y^k v_0`.
pub fn sl2_irrep(n: usize) -> Representation<FieldScalar> {
    let d = n + 1;
    let mut h = vec![vec![0i64; d]; d];
    let mut x = vec![vec![0i64; d]; d];
    let mut y = vec![vec![0i64; d]; d];
    for k in 0..d {
        h[k][k] = n as i64 - 2 * k as i64;
        if k + 1 < d {
            y[k + 1][k] = 1;
        }
        if k > 0 {
            x[k - 1][k] = (k * (n - k + 1)) as i64;
        }
    }
    Representation { g: vec![int_matrix(h)], x: vec![int_matrix(x)], y: vec![int_matrix(y)] }
}

fn sl2_pair(a: usize, b: usize) -> Representation<FieldScalar> {
    let (ra, rb) = (sl2_irrep(a), sl2_irrep(b));
    let (ia, ib) = (Matrix::identity(a + 1), Matrix::identity(b + 1));
    let left = |m: &Matrix<FieldScalar>| kron(m, &ib);
    let right = |m: &Matrix<FieldScalar>| kron(&ia, m);
    Representation {
        g: vec![left(&ra.g[0]), right(&rb.g[0])],
        x: vec![left(&ra.x[0]), right(&rb.x[0])],
        y: vec![left(&ra.y[0]), right(&rb.y[0])],
    }
}

fn sl3_standard(dual: bool) -> Representation<FieldScalar> {
    let e = |i, j| unit(3, i, j);
    let f = |m: Matrix<FieldScalar>| if dual { m.transpose().scale(&FieldScalar::from_integer(-1)) } else { m };
    Representation {
        g: vec![f(e(0, 0).sub(&e(1, 1))), f(e(1, 1).sub(&e(2, 2)))],
        x: vec![f(e(0, 1)), f(e(1, 2))],
        y: vec![f(e(1, 0)), f(e(2, 1))],
    }
}

pub fn adjoint_rep(alg: &LieAlgebraTable) -> Representation<FieldScalar> {
    let cg = alg.default_canonical_generators::<FieldScalar>();
    Representation {
        g: cg.g.iter().map(|v| alg.adjoint_matrix(v)).collect(),
        x: cg.x.iter().map(|v| alg.adjoint_matrix(v)).collect(),
        y: cg.y.iter().map(|v| alg.adjoint_matrix(v)).collect(),
    }
}

fn trivial(rank: usize) -> Representation<FieldScalar> {
    let z = || Matrix::zeros(1, 1);
    Representation { g: vec![z(); rank], x: vec![z(); rank], y: vec![z(); rank] }
}

/// A random direct sum of irreducible modules of a rank ≤ 2 algebra, conjugated by a
/// random unimodular matrix, together with `Σ m_j²` known from the construction.
pub struct RandomModule {
    pub algebra: &'static str,
    pub rep: Representation<FieldScalar>,
    pub expected_end_dim: usize,
}

pub fn random_module(seed: u64) -> RandomModule {
    const MAX_DIM: usize = 12;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let algebra = ["A1", "A1+A1", "A2", "B2"][rng.gen_range(0..4)];
    let irreps: Vec<Representation<FieldScalar>> = match algebra {
        "A1" => (0..4).map(sl2_irrep).collect(),
        "A1+A1" => vec![sl2_pair(0, 0), sl2_pair(1, 0), sl2_pair(0, 1), sl2_pair(1, 1), sl2_pair(2, 1)],
        "A2" => vec![
            trivial(2),
            sl3_standard(false),
            sl3_standard(true),
            adjoint_rep(&realforms::liealg::build_by_name("A2").unwrap()),
        ],
        _ => vec![trivial(2), adjoint_rep(&realforms::liealg::build_by_name("B2").unwrap())],
    };
    let mut counts = vec![0usize; irreps.len()];
    let mut rep: Option<Representation<FieldScalar>> = None;
    let blocks = rng.gen_range(2..=4);
    for _ in 0..blocks {
        let k = rng.gen_range(0..irreps.len());
        let dim = rep.as_ref().map_or(0, |r| r.dim());
        if dim + irreps[k].dim() > MAX_DIM {
            continue;
        }
        counts[k] += 1;
        rep = Some(match rep {
            None => irreps[k].clone(),
            Some(r) => r.direct_sum(&irreps[k]),
        });
    }
    let rep = rep.expect("at least one block fits");
    let n = rep.dim();
    // unit lower times unit upper triangular: determinant 1
    let mut lower = Matrix::<FieldScalar>::identity(n);
    let mut upper = Matrix::<FieldScalar>::identity(n);
    for i in 0..n {
        for j in 0..i {
            if rng.gen_bool(0.3) {
                lower[(i, j)] = FieldScalar::from_integer(rng.gen_range(-2..=2));
            }
            if rng.gen_bool(0.3) {
                upper[(j, i)] = FieldScalar::from_integer(rng.gen_range(-2..=2));
            }
        }
    }
    let rep = rep.conjugate(&lower.mul(&upper));
    RandomModule { algebra, rep, expected_end_dim: counts.iter().map(|c| c * c).sum() }
}

/// `dim {M : M·ρ(z) = ρ(z)·M for all generators z}`, by elimination on the n² unknowns.
pub fn brute_force_end_dim(rep: &Representation<FieldScalar>) -> usize {
    let n = rep.dim();
    let mut eqs = EchelonBasis::new(n * n);
    for z in rep.generators() {
        for i in 0..n {
            for j in 0..n {
                // (Mz − zM)_{ij} = Σ_k M_ik z_kj − z_ik M_kj
                let mut row = vec![FieldScalar::zero(); n * n];
                for k in 0..n {
                    row[i * n + k] += &z[(k, j)];
                    row[k * n + j] -= &z[(i, k)];
                }
                if row.iter().any(|c| !c.is_zero()) {
                    eqs.insert(&row);
                }
            }
        }
    }
    n * n - eqs.len()
}

/// Number of linearly independent matrices in `maps`.
pub fn matrix_span_dim(maps: &[Matrix<FieldScalar>]) -> usize {
    let Some(first) = maps.first() else { return 0 };
    let mut span = EchelonBasis::new(first.rows() * first.cols());
    for m in maps {
        let flat: Vec<FieldScalar> = m.to_rows().into_iter().flatten().collect();
        span.insert(&flat);
    }
    span.len()
}

/// Diagonal automorphism `x_β ↦ Π c_j^{β_j} x_β` of the target, fixing the Cartan subalgebra.
pub fn diagonal_automorphism(alg: &LieAlgebraTable, c: &[FieldScalar]) -> Matrix<ComplexScalar> {
    let rs = alg.root_system();
    let mut m = Matrix::identity(alg.dim());
    for r in 0..rs.num_roots() {
        let mut s = FieldScalar::one();
        for (cj, &e) in c.iter().zip(rs.root(r)) {
            let base = if e < 0 { cj.inverse().expect("nonzero scale") } else { cj.clone() };
            for _ in 0..e.unsigned_abs() {
                s = &s * &base;
            }
        }
        let k = alg.root_vector_index(r);
        m[(k, k)] = ComplexScalar::real(s);
    }
    m
}

/// Every property a reported θ̃ must have, on the instantiated matrix.
pub fn check_reported_involution(res: &PipelineResult, theta: &Involution, point: &[FieldScalar]) -> Result<(), String> {
    let t = &res.embedding.target;
    let m = res.system.matrix_at(point);
    if !m.mul(&m).is_identity() {
        return Err("θ̃² ≠ I".into());
    }
    let n = t.dim();
    for a in 0..n {
        let ea: Vec<ComplexScalar> = t.basis_vector(a);
        let ta = m.mul_vec(&ea);
        for b in a + 1..n {
            let eb: Vec<ComplexScalar> = t.basis_vector(b);
            let lhs = m.mul_vec(&t.bracket(&ea, &eb));
            if lhs != t.bracket(&ta, &m.mul_vec(&eb)) {
                return Err(format!("θ̃ does not preserve [e{a}, e{b}]"));
            }
        }
        if tau(t, &ta) != m.mul_vec(&tau(t, &ea)) {
            return Err(format!("θ̃ does not commute with τ̃ on e{a}"));
        }
    }
    let CanonicalGenerators { g, x, y } = &res.embedding.images;
    let src = res.embedding.source.default_canonical_generators::<ComplexScalar>();
    let e = res.embedding.extension_matrix();
    for (img, gen) in g.iter().chain(x).chain(y).zip(src.g.iter().chain(&src.x).chain(&src.y)) {
        if m.mul_vec(img) != e.mul_vec(&theta.apply(gen)) {
            return Err("θ̃ε ≠ εθ on a generator".into());
        }
    }
    Ok(())
}

/// Checks every finite point of a pipeline result.
pub fn check_all_reported(res: &PipelineResult, theta: &Involution) -> Result<usize, String> {
    let mut count = 0;
    for r in &res.reports {
        if let Some(pt) = &r.point {
            // points are reported by name; matrix_at wants the system's own order
            let values: Vec<FieldScalar> = res
                .system
                .variables
                .iter()
                .map(|name| {
                    let (_, v) = pt.iter().find(|(n, _)| n == name).ok_or(format!("{name} missing from point"))?;
                    realforms::exactfield::text::parse_real(v).map_err(|e| e.to_string())
                })
                .collect::<Result<_, _>>()?;
            check_reported_involution(res, theta, &values)?;
            count += 1;
        }
    }
    Ok(count)
}

pub fn rescaled(emb: &Embedding, c: &[FieldScalar]) -> Embedding {
    emb.compose(&diagonal_automorphism(&emb.target, c))
}

/// Real points of the variety of `gb`, found by pinning free variables to small integers.
pub fn sample_points(gb: &[Poly<FieldScalar>], nvars: usize, depth: usize) -> Vec<Vec<FieldScalar>> {
    match solve(gb, nvars) {
        Ok(SolutionSet::Finite(points)) => points,
        Ok(SolutionSet::Parametric { free, .. }) if depth > 0 => {
            let v = free[0];
            for value in [0, 1, -1, 2] {
                let pin = Poly::var(nvars, v).sub(&Poly::constant(nvars, FieldScalar::from_integer(value)));
                let Ok(next) = split_case(gb, &[pin]) else { continue };
                let points = sample_points(&next, nvars, depth - 1);
                if !points.is_empty() {
                    return points;
                }
            }
            Vec::new()
        }
        _ => Vec::new(),
    }
}

/// Checks θ̃ at sample points of a positive-dimensional solution set; returns how many.
pub fn check_family_samples(res: &PipelineResult, theta: &Involution) -> Result<usize, String> {
    if !matches!(res.solutions, SolutionSet::Parametric { .. }) {
        return Ok(0);
    }
    if res.variables != res.system.variables {
        return Err("sampling needs the default variable order".into());
    }
    let points = sample_points(&res.groebner, res.variables.len(), res.variables.len());
    if points.is_empty() {
        return Err("no real sample point found in the family".into());
    }
    for p in &points {
        check_reported_involution(res, theta, p)?;
    }
    Ok(points.len())
}
