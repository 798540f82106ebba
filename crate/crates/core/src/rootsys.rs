//! Root systems of finite type built from Cartan matrices.
//!
//! Convention: `C[i][j] = ⟨α_i, α_j^∨⟩`, so row `i` lists the pairings of the
//! `i`-th simple root with all simple coroots. Roots are integer coefficient
//! vectors in the simple roots. Positive roots are ordered by height and then
//! lexicographically (largest first, so simple roots keep the matrix order);
//! the negative roots follow in the same order.

use std::collections::BTreeMap;
use thiserror::Error;

pub type CartanMatrix = Vec<Vec<i64>>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("Cartan matrix is empty")]
    Empty,
    #[error("Cartan matrix is not square")]
    NotSquare,
    #[error("diagonal entry ({0},{0}) is not 2")]
    BadDiagonal(usize),
    #[error("off-diagonal entry ({0},{1}) is positive")]
    PositiveOffDiagonal(usize, usize),
    #[error("entries ({0},{1}) and ({1},{0}) are not both zero or both nonzero")]
    ZeroPattern(usize, usize),
    #[error("matrix is not symmetrizable (cycle through ({0},{1}))")]
    NotSymmetrizable(usize, usize),
    #[error("not of finite type: leading principal minor of order {order} of the symmetrized matrix is {value}")]
    NotFiniteType { order: usize, value: String },
    #[error("unknown type name `{0}`")]
    UnknownType(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    cartan: CartanMatrix,
    /// `d_i = (α_i, α_i)/2`, normalized to 1 on the short roots of each component.
    half_norms: Vec<i64>,
    roots: Vec<Vec<i64>>,
    n_positive: usize,
    root_index: BTreeMap<Vec<i64>, usize>,
}

impl RootSystem {
    pub fn new(cartan: CartanMatrix) -> Result<Self, RootSystemError> {
        let half_norms = validate(&cartan)?;
        let positive = enumerate_positive(&cartan);
        let n_positive = positive.len();
        let mut roots = positive.clone();
        roots.extend(positive.iter().map(|r| r.iter().map(|c| -c).collect::<Vec<_>>()));
        let root_index = roots.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Ok(RootSystem { cartan, half_norms, roots, n_positive, root_index })
    }

    pub fn from_name(name: &str) -> Result<Self, RootSystemError> {
        Self::new(cartan_matrix_by_name(name)?)
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan_matrix(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &[i64] {
        &self.roots[i]
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn num_positive(&self) -> usize {
        self.n_positive
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.roots[..self.n_positive]
    }

    pub fn is_positive(&self, i: usize) -> bool {
        i < self.n_positive
    }

    /// Index of `-root(i)`.
    pub fn negative_of(&self, i: usize) -> usize {
        if i < self.n_positive { i + self.n_positive } else { i - self.n_positive }
    }

    /// Index of the simple root `α_i`.
    pub fn simple_index(&self, i: usize) -> usize {
        debug_assert!(i < self.rank());
        i
    }

    pub fn index_of(&self, v: &[i64]) -> Option<usize> {
        self.root_index.get(v).copied()
    }

    pub fn is_root(&self, v: &[i64]) -> bool {
        self.root_index.contains_key(v)
    }

    pub fn height(&self, i: usize) -> i64 {
        self.roots[i].iter().sum()
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.roots[self.n_positive - 1]
    }

    /// Symmetric form `(u, v)` on coefficient vectors, short roots of length² 2.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> i64 {
        let l = self.rank();
        let mut s = 0;
        for i in 0..l {
            if u[i] == 0 {
                continue;
            }
            for j in 0..l {
                if v[j] != 0 {
                    // (α_i, α_j) = C[i][j]·d_j
                    s += u[i] * v[j] * self.cartan[i][j] * self.half_norms[j];
                }
            }
        }
        s
    }

    pub fn norm(&self, i: usize) -> i64 {
        self.inner(&self.roots[i], &self.roots[i])
    }

    pub fn half_norms(&self) -> &[i64] {
        &self.half_norms
    }

    /// `⟨β, α^∨⟩ = 2(β,α)/(α,α)` for roots given by index.
    pub fn pairing(&self, beta: usize, alpha: usize) -> i64 {
        let a = &self.roots[alpha];
        2 * self.inner(&self.roots[beta], a) / self.inner(a, a)
    }

    /// Maximal `r ≥ 0` with `α − rβ ∈ Φ`; `None` when `β = ±α`.
    pub fn root_string_r(&self, alpha: usize, beta: usize) -> Option<i64> {
        if alpha == beta || alpha == self.negative_of(beta) {
            return None;
        }
        let (a, b) = (&self.roots[alpha], &self.roots[beta]);
        let mut r = 0;
        loop {
            let v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x - (r + 1) * y).collect();
            if !self.is_root(&v) {
                return Some(r);
            }
            r += 1;
        }
    }

    /// Maximal `q ≥ 0` with `α + qβ ∈ Φ`; `None` when `β = ±α`.
    pub fn root_string_q(&self, alpha: usize, beta: usize) -> Option<i64> {
        let nb = self.negative_of(beta);
        self.root_string_r(alpha, nb)
    }

    pub fn add(&self, a: usize, b: usize) -> Option<usize> {
        let v: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index_of(&v)
    }

    /// Simple reflection `s_i(β) = β − ⟨β, α_i^∨⟩ α_i` on a coefficient vector.
    pub fn reflect(&self, v: &[i64], i: usize) -> Vec<i64> {
        let p: i64 = (0..self.rank()).map(|j| v[j] * self.cartan[j][i]).sum();
        let mut w = v.to_vec();
        w[i] -= p;
        w
    }

    /// Connected components of the Dynkin diagram, each as sorted node indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        components(&self.cartan)
    }

    /// Cartan type of each component, e.g. `[('A', 2), ('G', 2)]`.
    pub fn component_types(&self) -> Vec<(char, usize)> {
        self.components()
            .iter()
            .map(|comp| {
                let sub: CartanMatrix =
                    comp.iter().map(|&i| comp.iter().map(|&j| self.cartan[i][j]).collect()).collect();
                let rs = RootSystem::new(sub).expect("component of a valid matrix");
                identify_irreducible(&rs)
            })
            .collect()
    }

    /// Type label such as `"A3"` or `"A1+G2"`.
    pub fn type_name(&self) -> String {
        self.component_types().iter().map(|(t, n)| format!("{t}{n}")).collect::<Vec<_>>().join("+")
    }
}

fn identify_irreducible(rs: &RootSystem) -> (char, usize) {
    let n = rs.rank();
    let total = rs.num_roots();
    let short = rs.half_norms.iter().copied().min().unwrap_or(1);
    let long_count = (0..total).filter(|&i| rs.norm(i) > 2 * short).count();
    let t = match (n, total, long_count) {
        (2, 12, _) => 'G',
        (4, 48, 24) => 'F',
        (6, 72, 0) => 'E',
        (7, 126, 0) => 'E',
        (8, 240, 0) => 'E',
        (_, _, 0) if total == n * (n + 1) => 'A',
        (_, _, 0) if total == 2 * n * (n - 1) => 'D',
        (_, _, l) if total == 2 * n * n && l == 2 * n * (n - 1) => 'B',
        (_, _, l) if total == 2 * n * n && l == 2 * n => 'C',
        _ => '?',
    };
    (t, n)
}

fn components(c: &CartanMatrix) -> Vec<Vec<usize>> {
    let n = c.len();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for j in 0..n {
                if !seen[j] && c[i][j] != 0 {
                    seen[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Checks the Cartan axioms and finite type; returns the half norms `d_i`.
fn validate(c: &CartanMatrix) -> Result<Vec<i64>, RootSystemError> {
    use num_rational::Ratio;
    use num_traits::{Signed, Zero};

    let n = c.len();
    if n == 0 {
        return Err(RootSystemError::Empty);
    }
    if c.iter().any(|r| r.len() != n) {
        return Err(RootSystemError::NotSquare);
    }
    for i in 0..n {
        if c[i][i] != 2 {
            return Err(RootSystemError::BadDiagonal(i));
        }
        for j in 0..n {
            if i != j {
                if c[i][j] > 0 {
                    return Err(RootSystemError::PositiveOffDiagonal(i, j));
                }
                if (c[i][j] == 0) != (c[j][i] == 0) {
                    return Err(RootSystemError::ZeroPattern(i, j));
                }
            }
        }
    }
    // symmetrize: C[i][j]·d_j = C[j][i]·d_i
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    for comp in components(c) {
        d[comp[0]] = Some(Ratio::from_integer(1));
        let mut stack = vec![comp[0]];
        while let Some(i) = stack.pop() {
            let di = d[i].expect("assigned");
            for j in 0..n {
                if i == j || c[i][j] == 0 {
                    continue;
                }
                let dj = di * Ratio::new(c[j][i], c[i][j]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(old) if old != dj => return Err(RootSystemError::NotSymmetrizable(i, j)),
                    Some(_) => {}
                }
            }
        }
        let min = comp.iter().map(|&i| d[i].expect("assigned")).min().expect("nonempty");
        for &i in &comp {
            d[i] = Some(d[i].expect("assigned") / min);
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("assigned")).collect();
    let b: Vec<Vec<Ratio<i64>>> =
        (0..n).map(|i| (0..n).map(|j| d[j] * Ratio::from_integer(c[i][j])).collect()).collect();
    // leading principal minors via fraction elimination
    let mut m = b.clone();
    let mut det = Ratio::from_integer(1);
    for k in 0..n {
        let piv = m[k][k];
        det *= piv;
        if !det.is_positive() {
            return Err(RootSystemError::NotFiniteType { order: k + 1, value: det.to_string() });
        }
        for i in k + 1..n {
            let f = m[i][k] / piv;
            if f.is_zero() {
                continue;
            }
            for j in k..n {
                let t = m[k][j] * f;
                m[i][j] -= t;
            }
        }
    }
    let out: Vec<i64> = d.iter().map(|x| x.to_integer()).collect();
    if d.iter().any(|x| !x.is_integer()) {
        return Err(RootSystemError::NotSymmetrizable(0, 0));
    }
    Ok(out)
}

fn enumerate_positive(c: &CartanMatrix) -> Vec<Vec<i64>> {
    let n = c.len();
    let simple: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect();
    let mut known: std::collections::BTreeSet<Vec<i64>> = simple.iter().cloned().collect();
    let mut layers = vec![simple];
    loop {
        let mut next: std::collections::BTreeSet<Vec<i64>> = Default::default();
        for beta in layers.last().expect("nonempty") {
            for i in 0..n {
                // r: how far β − rα_i stays a (positive) root
                let mut r = 0;
                loop {
                    let mut v = beta.clone();
                    v[i] -= r + 1;
                    if known.contains(&v) {
                        r += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * c[j][i]).sum();
                if r - pairing > 0 {
                    let mut v = beta.clone();
                    v[i] += 1;
                    next.insert(v);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        known.extend(next.iter().cloned());
        let mut layer: Vec<Vec<i64>> = next.into_iter().collect();
        layer.reverse();
        layers.push(layer);
    }
    layers.into_iter().flatten().collect()
}

/// Built-in Cartan matrices. Accepts `A1`–`A8`, `B2`–`B8`, `C3`–`C8`, `D4`–`D8`,
/// `E6`–`E8`, `F4`, `G2`, and sums like `A1+G2`.
pub fn cartan_matrix_by_name(name: &str) -> Result<CartanMatrix, RootSystemError> {
    let parts: Vec<&str> = name.split('+').map(str::trim).collect();
    let blocks: Vec<CartanMatrix> = parts
        .iter()
        .map(|p| irreducible_cartan(p).ok_or_else(|| RootSystemError::UnknownType(name.to_string())))
        .collect::<Result<_, _>>()?;
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut out = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out[off + i][off + j] = v;
            }
        }
        off += b.len();
    }
    Ok(out)
}

fn irreducible_cartan(name: &str) -> Option<CartanMatrix> {
    let mut chars = name.chars();
    let t = chars.next()?.to_ascii_uppercase();
    let n: usize = chars.as_str().parse().ok()?;
    let chain = |n: usize| {
        let mut c = vec![vec![0i64; n]; n];
        for i in 0..n {
            c[i][i] = 2;
            if i + 1 < n {
                c[i][i + 1] = -1;
                c[i + 1][i] = -1;
            }
        }
        c
    };
    let c = match (t, n) {
        ('A', 1..=8) => chain(n),
        ('B', 2..=8) => {
            let mut c = chain(n);
            c[n - 2][n - 1] = -2;
            c
        }
        ('C', 3..=8) => {
            let mut c = chain(n);
            c[n - 1][n - 2] = -2;
            c
        }
        ('D', 4..=8) => {
            let mut c = chain(n);
            c[n - 2][n - 1] = 0;
            c[n - 1][n - 2] = 0;
            c[n - 3][n - 1] = -1;
            c[n - 1][n - 3] = -1;
            c
        }
        ('E', 6..=8) => {
            // Bourbaki labels: 1-3-4-5-6(-7-8) chain, 2 attached to 4
            let mut c = vec![vec![0i64; n]; n];
            let mut edge = |a: usize, b: usize| {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            };
            edge(1, 3);
            edge(3, 4);
            edge(2, 4);
            for k in 4..n {
                edge(k, k + 1);
            }
            for (i, row) in c.iter_mut().enumerate() {
                row[i] = 2;
            }
            c
        }
        ('F', 4) => vec![vec![2, -1, 0, 0], vec![-1, 2, -2, 0], vec![0, -1, 2, -1], vec![0, 0, -1, 2]],
        ('G', 2) => vec![vec![2, -1], vec![-3, 2]],
        _ => return None,
    };
    Some(c)
}
