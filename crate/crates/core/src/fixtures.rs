//! A small database of embeddings and involutions, built programmatically and
//! also shipped as JSON under `fixtures/`.

use crate::embedpipe::{EmbedError, Embedding};
use crate::exactfield::text::{format_complex, parse_complex};
use crate::exactfield::{sqrt_in_field, ComplexScalar, Field, FieldScalar};
use crate::liealg::{build_by_name, CanonicalGenerators, LieAlgebraTable};
use crate::linalg::Matrix;
use crate::realform::{
    identity_involution, inner_involution, split_involution, split_involution_with_signs, split_on_components,
    Involution, RealFormError,
};
use serde::{Deserialize, Serialize};

/// Involution of the source algebra, as stored in JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum ThetaSpec {
    /// The compact real form.
    Identity { algebra: String },
    /// `x_α ↦ −c(α)x_{−α}` for the sign character `c`; all signs `+1` if omitted.
    Split {
        algebra: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        signs: Option<Vec<i64>>,
    },
    /// `x_α ↦ c(α)x_α`.
    Inner { algebra: String, signs: Vec<i64> },
    /// Split on the listed simple factors, identity on the others.
    SplitComponents { algebra: String, components: Vec<usize> },
    /// Explicit matrix on the Chevalley basis, rows of entries in the scalar text format.
    Matrix { algebra: String, matrix: Vec<Vec<String>> },
}

impl ThetaSpec {
    pub fn algebra(&self) -> &str {
        match self {
            ThetaSpec::Identity { algebra }
            | ThetaSpec::Split { algebra, .. }
            | ThetaSpec::Inner { algebra, .. }
            | ThetaSpec::SplitComponents { algebra, .. }
            | ThetaSpec::Matrix { algebra, .. } => algebra,
        }
    }

    /// Builds and validates the involution, including `θτ = τθ`.
    pub fn build(&self, alg: &LieAlgebraTable) -> Result<Involution, EmbedError> {
        let rank_check = |signs: &[i64]| {
            if signs.len() != alg.rank() {
                Err(EmbedError::Malformed(format!("expected {} signs, got {}", alg.rank(), signs.len())))
            } else {
                Ok(())
            }
        };
        let th = match self {
            ThetaSpec::Identity { .. } => identity_involution(alg),
            ThetaSpec::Split { signs: None, .. } => split_involution(alg),
            ThetaSpec::Split { signs: Some(s), .. } => {
                rank_check(s)?;
                split_involution_with_signs(alg, s)
            }
            ThetaSpec::Inner { signs, .. } => {
                rank_check(signs)?;
                inner_involution(alg, signs)
            }
            ThetaSpec::SplitComponents { components, .. } => {
                let n = alg.root_system().components().len();
                if let Some(c) = components.iter().find(|&&c| c >= n) {
                    return Err(EmbedError::Malformed(format!("component {c} out of range (algebra has {n})")));
                }
                split_on_components(alg, components)
            }
            ThetaSpec::Matrix { matrix, .. } => {
                let rows = matrix
                    .iter()
                    .map(|r| r.iter().map(|s| parse_complex(s)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                if rows.len() != alg.dim() || rows.iter().any(|r| r.len() != alg.dim()) {
                    return Err(RealFormError::Dimension {
                        rows: rows.len(),
                        cols: rows.first().map_or(0, |r| r.len()),
                        dim: alg.dim(),
                    }
                    .into());
                }
                Involution { matrix: Matrix::from_rows(rows) }
            }
        };
        Ok(Involution::new_tau_compatible(alg, th.matrix)?)
    }

    pub fn from_involution(alg: &LieAlgebraTable, th: &Involution) -> Self {
        ThetaSpec::Matrix {
            algebra: alg.type_name(),
            matrix: th.matrix.to_rows().iter().map(|r| r.iter().map(format_complex).collect()).collect(),
        }
    }
}

/// A named embedding together with an involution of its source.
#[derive(Debug, Clone)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    /// Needs `--allow-slow`.
    pub slow: bool,
    pub embedding: Embedding,
    pub theta: ThetaSpec,
}

pub const FIXTURE_NAMES: &[&str] = &[
    "a2_in_a3",
    "principal_sl2_in_a2",
    "principal_sl2_in_g2",
    "principal_sl2_in_g2_unbalanced",
    "a1a1_in_a3",
    "g2_in_b3",
    "b4_in_e6",
];

pub fn fixture(name: &str) -> Result<Fixture, EmbedError> {
    let split = |a: &str| ThetaSpec::Split { algebra: a.into(), signs: None };
    let f = |name, description, slow, embedding, theta| Fixture { name, description, slow, embedding, theta };
    Ok(match name {
        "a2_in_a3" => f("a2_in_a3", "regular A2 in A3 on the first two simple roots", false, regular("A2", "A3", &[0, 1])?, split("A2")),
        "principal_sl2_in_a2" => {
            f("principal_sl2_in_a2", "principal sl2 in A2", false, principal_sl2("A2", true)?, split("A1"))
        }
        "principal_sl2_in_g2" => {
            f("principal_sl2_in_g2", "principal sl2 in G2 (Dynkin index 28)", false, principal_sl2("G2", true)?, split("A1"))
        }
        "principal_sl2_in_g2_unbalanced" => f(
            "principal_sl2_in_g2_unbalanced",
            "principal sl2 in G2 with an unbalanced choice of generators",
            false,
            principal_sl2("G2", false)?,
            split("A1"),
        ),
        "a1a1_in_a3" => f(
            "a1a1_in_a3",
            "regular A1+A1 in A3 on the first and third simple roots",
            false,
            regular("A1+A1", "A3", &[0, 2])?,
            split("A1+A1"),
        ),
        "g2_in_b3" => f("g2_in_b3", "G2 in B3 by folding", false, g2_in_b3()?, split("G2")),
        "b4_in_e6" => f(
            "b4_in_e6",
            "B4 in E6 through F4, with so(4,5) on the source",
            true,
            b4_in_e6()?,
            ThetaSpec::Inner { algebra: "B4".into(), signs: vec![1, -1, 1, 1] },
        ),
        _ => return Err(EmbedError::Malformed(format!("unknown fixture {name}; known: {}", FIXTURE_NAMES.join(", ")))),
    })
}

/// The subalgebra generated by `x_{±β_i}` for the given target roots `β_i`,
/// which must form a simple system of the source type in order.
pub fn regular(source: &str, target: &str, roots: &[usize]) -> Result<Embedding, EmbedError> {
    let src = build_by_name(source)?;
    let tgt = build_by_name(target)?;
    let rs = tgt.root_system();
    if let Some(&r) = roots.iter().find(|&&r| r >= rs.num_roots()) {
        return Err(EmbedError::Malformed(format!("{target} has no root with index {r}")));
    }
    let e = |r: usize| tgt.basis_vector::<ComplexScalar>(tgt.root_vector_index(r));
    let x: Vec<_> = roots.iter().map(|&r| e(r)).collect();
    let y: Vec<_> = roots.iter().map(|&r| e(rs.negative_of(r))).collect();
    let g = x.iter().zip(&y).map(|(a, b)| tgt.bracket(a, b)).collect();
    Embedding::new(src, tgt, CanonicalGenerators { g, x, y })
}

/// `h = Σ c_i h_i` with `α_j(h) = 2` for all `j`.
pub fn principal_coefficients(alg: &LieAlgebraTable) -> Vec<FieldScalar> {
    let c = alg.root_system().cartan_matrix();
    let l = c.len();
    let m: Matrix<FieldScalar> =
        Matrix::from_rows((0..l).map(|j| (0..l).map(|i| FieldScalar::from_integer(c[j][i])).collect()).collect());
    m.solve(&vec![FieldScalar::from_integer(2); l]).expect("Cartan matrix is invertible")
}

/// Principal sl2: `x = Σ √c_i x_{α_i}`, `y = Σ √c_i x_{−α_i}` when `balanced`,
/// otherwise `x = Σ c_i x_{α_i}`, `y = Σ x_{−α_i}`.
pub fn principal_sl2(target: &str, balanced: bool) -> Result<Embedding, EmbedError> {
    let src = build_by_name("A1")?;
    let tgt = build_by_name(target)?;
    let l = tgt.rank();
    let rs = tgt.root_system();
    let n = tgt.dim();
    let cs = principal_coefficients(&tgt);
    let mut h = vec![ComplexScalar::zero(); n];
    let mut x = vec![ComplexScalar::zero(); n];
    let mut y = vec![ComplexScalar::zero(); n];
    for (i, c) in cs.iter().enumerate() {
        h[i] = ComplexScalar::real(c.clone());
        let (a, b) = if balanced {
            let r = sqrt_in_field(c)?.expect("square roots of positive rationals exist");
            (r.clone(), r)
        } else {
            (c.clone(), FieldScalar::from_integer(1))
        };
        x[tgt.root_vector_index(i)] = ComplexScalar::real(a);
        y[tgt.root_vector_index(rs.negative_of(i))] = ComplexScalar::real(b);
    }
    debug_assert_eq!(l, cs.len());
    Embedding::new(src, tgt, CanonicalGenerators { g: vec![h], x: vec![x], y: vec![y] })
}

/// Images of simple root vectors as sums over groups of target simple roots.
fn folded(source: &str, target: &str, groups: &[&[usize]]) -> Result<Embedding, EmbedError> {
    let src = build_by_name(source)?;
    let tgt = build_by_name(target)?;
    let rs = tgt.root_system();
    let n = tgt.dim();
    let sum = |idx: &[usize], neg: bool| {
        let mut v = vec![ComplexScalar::zero(); n];
        for &i in idx {
            let r = if neg { rs.negative_of(i) } else { i };
            v[tgt.root_vector_index(r)] = ComplexScalar::one();
        }
        v
    };
    let x: Vec<_> = groups.iter().map(|g| sum(g, false)).collect();
    let y: Vec<_> = groups.iter().map(|g| sum(g, true)).collect();
    let g = x.iter().zip(&y).map(|(a, b)| tgt.bracket(a, b)).collect();
    Embedding::new(src, tgt, CanonicalGenerators { g, x, y })
}

/// `x_{β1} = x_{α1} + x_{α3}`, `x_{β2} = x_{α2}` (β1 short).
pub fn g2_in_b3() -> Result<Embedding, EmbedError> {
    folded("G2", "B3", &[&[0, 2], &[1]])
}

/// F4 as the fixed points of the diagram automorphism of E6.
pub fn f4_in_e6() -> Result<Embedding, EmbedError> {
    folded("F4", "E6", &[&[1], &[3], &[2, 4], &[0, 5]])
}

/// B4 in F4 spanned by the long roots and the short roots `±e_i`, composed with F4 ⊂ E6.
pub fn b4_in_e6() -> Result<Embedding, EmbedError> {
    let f4 = f4_in_e6()?;
    let m = f4.extension_matrix();
    let inner = regular_by_root_vectors("B4", &f4.source)?;
    let app = |vs: &[Vec<ComplexScalar>]| vs.iter().map(|v| m.mul_vec(v)).collect();
    let images = CanonicalGenerators { g: app(&inner.g), x: app(&inner.x), y: app(&inner.y) };
    Embedding::new(build_by_name("B4")?, f4.target, images)
}

fn regular_by_root_vectors(source: &str, f4: &LieAlgebraTable) -> Result<CanonicalGenerators<ComplexScalar>, EmbedError> {
    let rs = f4.root_system();
    // e1−e2 = α2+2α3+2α4, then e2−e3, e3−e4, e4: a positive simple system of type B4
    let first = rs.index_of(&[0, 1, 2, 2]).expect("root of F4");
    let roots = [first, 0, 1, 2];
    let e = |r: usize| f4.basis_vector::<ComplexScalar>(f4.root_vector_index(r));
    let x: Vec<_> = roots.iter().map(|&r| e(r)).collect();
    let y: Vec<_> = roots.iter().map(|&r| e(rs.negative_of(r))).collect();
    let g: Vec<_> = x.iter().zip(&y).map(|(a, b)| f4.bracket(a, b)).collect();
    let cg = CanonicalGenerators { g, x, y };
    let src = build_by_name(source)?;
    f4.verify_canonical(src.root_system().cartan_matrix(), &cg)
        .map_err(|v| EmbedError::Contract(format!("B4 generators in F4: {v}")))?;
    Ok(cg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedpipe::is_balanced;

    fn assert_homomorphism(emb: &Embedding) {
        let e = emb.extension_matrix();
        let (s, t) = (&emb.source, &emb.target);
        for i in 0..s.dim() {
            for j in i + 1..s.dim() {
                let (bi, bj) = (s.basis_vector::<ComplexScalar>(i), s.basis_vector::<ComplexScalar>(j));
                assert_eq!(e.mul_vec(&s.bracket(&bi, &bj)), t.bracket(&e.mul_vec(&bi), &e.mul_vec(&bj)));
            }
        }
    }

    #[test]
    fn principal_coefficients_g2() {
        let g2 = build_by_name("G2").unwrap();
        let c = principal_coefficients(&g2);
        assert_eq!(c, vec![FieldScalar::from_integer(6), FieldScalar::from_integer(10)]);
    }

    #[test]
    fn small_fixtures_are_homomorphisms() {
        for name in FIXTURE_NAMES.iter().filter(|n| **n != "b4_in_e6") {
            let fx = fixture(name).unwrap();
            assert_homomorphism(&fx.embedding);
            fx.theta.build(&fx.embedding.source).unwrap();
        }
    }

    #[test]
    fn balance_status() {
        assert!(is_balanced(&fixture("principal_sl2_in_g2").unwrap().embedding).unwrap().balanced);
        assert!(!is_balanced(&fixture("principal_sl2_in_g2_unbalanced").unwrap().embedding).unwrap().balanced);
        assert!(is_balanced(&fixture("g2_in_b3").unwrap().embedding).unwrap().balanced);
    }

    #[test]
    fn b4_generators_in_e6() {
        let emb = b4_in_e6().unwrap();
        assert_eq!(emb.target.dim(), 78);
        assert_eq!(emb.extension_matrix().rank(), 36);
    }

    #[test]
    fn theta_json_round_trip() {
        let a2 = build_by_name("A2").unwrap();
        let spec = ThetaSpec::Split { algebra: "A2".into(), signs: None };
        let th = spec.build(&a2).unwrap();
        let text = serde_json::to_string(&spec).unwrap();
        assert_eq!(text, r#"{"kind":"split","algebra":"A2"}"#);
        let m = ThetaSpec::from_involution(&a2, &th);
        assert_eq!(m.build(&a2).unwrap(), th);
    }
}
