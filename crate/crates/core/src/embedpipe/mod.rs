//! Embeddings of semisimple Lie algebras and the pipeline that turns an
//! embedding plus a real form of the source into the real forms of the target
//! containing it.

mod balance;
mod pipeline;
mod system;

pub use balance::{
    balance_by_system, balancing_system, branching, is_balanced, rescaling_trick, BalanceCheck, BalancingSystem,
    BranchEntry, BranchingData, RescalingOutcome,
};
pub use pipeline::{run_pipeline, PipelineOptions, PipelineResult, SolutionReport};
pub use system::{involution_system, split_complex, InvolutionSystem};

use crate::exactfield::text::{format_complex, parse_complex};
use crate::exactfield::{ComplexScalar, Field, FieldError};
use crate::intertwine::IntertwineError;
use crate::liealg::{build_by_name, CanonicalGenerators, LieAlgebraTable, LieError};
use crate::linalg::Matrix;
use crate::polysolve::PolyError;
use crate::realform::{CMatrix, RealFormError};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EmbedError {
    #[error("embedding contract violated: {0}")]
    Contract(String),
    #[error("malformed embedding: {0}")]
    Malformed(String),
    #[error("could not balance the embedding: {0}")]
    Unbalanceable(String),
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Intertwine(#[from] IntertwineError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    RealForm(#[from] RealFormError),
}

/// `ε : g^c → g̃^c`, given by the images of the canonical generators of the source.
#[derive(Debug, Clone)]
pub struct Embedding {
    pub source: LieAlgebraTable,
    pub target: LieAlgebraTable,
    pub images: CanonicalGenerators<ComplexScalar>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImagesJson {
    pub g: Vec<Vec<String>>,
    pub x: Vec<Vec<String>>,
    pub y: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub source: String,
    pub target: String,
    pub images: ImagesJson,
}

impl Embedding {
    /// Checks the relations of the images and that `ε(h^c)` lies in the target Cartan subalgebra.
    pub fn new(
        source: LieAlgebraTable,
        target: LieAlgebraTable,
        images: CanonicalGenerators<ComplexScalar>,
    ) -> Result<Self, EmbedError> {
        target
            .verify_canonical(source.root_system().cartan_matrix(), &images)
            .map_err(|v| EmbedError::Contract(format!("images violate the generator relations: {v}")))?;
        let rank = target.rank();
        for (i, g) in images.g.iter().enumerate() {
            if let Some(k) = (rank..g.len()).find(|&k| !g[k].is_zero()) {
                return Err(EmbedError::Contract(format!(
                    "image of g{} has a component on {} outside the Cartan subalgebra",
                    i + 1,
                    target.labels()[k]
                )));
            }
        }
        Ok(Embedding { source, target, images })
    }

    pub fn from_json(js: &EmbeddingJson) -> Result<Self, EmbedError> {
        let source = build_by_name(&js.source)?;
        let target = build_by_name(&js.target)?;
        let parse = |vs: &[Vec<String>]| -> Result<Vec<Vec<ComplexScalar>>, EmbedError> {
            vs.iter()
                .map(|v| {
                    if v.len() != target.dim() {
                        return Err(EmbedError::Malformed(format!(
                            "image vector has {} coordinates, target has dimension {}",
                            v.len(),
                            target.dim()
                        )));
                    }
                    v.iter().map(|s| parse_complex(s).map_err(EmbedError::from)).collect()
                })
                .collect()
        };
        let images = CanonicalGenerators { g: parse(&js.images.g)?, x: parse(&js.images.x)?, y: parse(&js.images.y)? };
        Self::new(source, target, images)
    }

    pub fn to_json(&self) -> EmbeddingJson {
        let fmt = |vs: &[Vec<ComplexScalar>]| vs.iter().map(|v| v.iter().map(format_complex).collect()).collect();
        EmbeddingJson {
            source: self.source.type_name(),
            target: self.target.type_name(),
            images: ImagesJson { g: fmt(&self.images.g), x: fmt(&self.images.x), y: fmt(&self.images.y) },
        }
    }

    /// Matrix of `ε` on the Chevalley bases (target dim × source dim), obtained
    /// by extending the generator images through brackets.
    pub fn extension_matrix(&self) -> CMatrix {
        let src = &self.source;
        let rs = src.root_system();
        let l = src.rank();
        let np = rs.num_positive();
        let mut cols: Vec<Option<Vec<ComplexScalar>>> = vec![None; src.dim()];
        for i in 0..l {
            cols[i] = Some(self.images.g[i].clone());
            cols[src.root_vector_index(i)] = Some(self.images.x[i].clone());
            cols[src.root_vector_index(rs.negative_of(i))] = Some(self.images.y[i].clone());
        }
        // positive roots come ordered by height, so every α − α_i is already done
        for r in l..np {
            let root = rs.root(r).to_vec();
            let (i, beta) = (0..l)
                .find_map(|i| {
                    let mut b = root.clone();
                    b[i] -= 1;
                    rs.index_of(&b).map(|bi| (i, bi))
                })
                .expect("non-simple positive root");
            for (a, b) in [(i, beta), (rs.negative_of(i), rs.negative_of(beta))] {
                let n = src.structure_constant(a, b).expect("root sum");
                let va = cols[src.root_vector_index(a)].clone().expect("built");
                let vb = cols[src.root_vector_index(b)].clone().expect("built");
                let inv = ComplexScalar::from_integer(n).inv().expect("nonzero");
                let v: Vec<ComplexScalar> = self.target.bracket(&va, &vb).iter().map(|c| c.mul_ref(&inv)).collect();
                let target_root = rs.add(a, b).expect("root sum");
                cols[src.root_vector_index(target_root)] = Some(v);
            }
        }
        let cols: Vec<Vec<ComplexScalar>> = cols.into_iter().map(|c| c.expect("every basis element reached")).collect();
        Matrix::from_columns(&cols, self.target.dim())
    }

    /// Applies a target automorphism to the images.
    pub fn compose(&self, phi: &CMatrix) -> Self {
        let app = |vs: &[Vec<ComplexScalar>]| vs.iter().map(|v| phi.mul_vec(v)).collect();
        Embedding {
            source: self.source.clone(),
            target: self.target.clone(),
            images: CanonicalGenerators { g: app(&self.images.g), x: app(&self.images.x), y: app(&self.images.y) },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn regular_a2_in_a3() -> Embedding {
        let src = build_by_name("A2").unwrap();
        let tgt = build_by_name("A3").unwrap();
        let e = |k: usize| tgt.basis_vector::<ComplexScalar>(k);
        let rs = tgt.root_system();
        let images = CanonicalGenerators {
            g: vec![e(0), e(1)],
            x: vec![e(tgt.root_vector_index(0)), e(tgt.root_vector_index(1))],
            y: vec![e(tgt.root_vector_index(rs.negative_of(0))), e(tgt.root_vector_index(rs.negative_of(1)))],
        };
        Embedding::new(src, tgt, images).unwrap()
    }

    #[test]
    fn extension_is_a_homomorphism() {
        let emb = regular_a2_in_a3();
        let e = emb.extension_matrix();
        let (s, t) = (&emb.source, &emb.target);
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                let (bi, bj) = (s.basis_vector::<ComplexScalar>(i), s.basis_vector::<ComplexScalar>(j));
                let lhs = e.mul_vec(&s.bracket(&bi, &bj));
                let rhs = t.bracket(&e.mul_vec(&bi), &e.mul_vec(&bj));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn rejects_bad_images() {
        let emb = regular_a2_in_a3();
        let mut images = emb.images.clone();
        images.x.swap(0, 1);
        assert!(matches!(
            Embedding::new(emb.source.clone(), emb.target.clone(), images),
            Err(EmbedError::Contract(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let emb = regular_a2_in_a3();
        let js = emb.to_json();
        let back = Embedding::from_json(&js).unwrap();
        assert_eq!(back.images, emb.images);
    }
}
