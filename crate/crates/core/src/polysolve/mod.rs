//! Polynomial systems over the exact field: lex Gröbner bases, real solving,
//! and characteristic polynomials over a quotient ring.

mod charpoly;
mod groebner;
mod poly;
mod solve;
pub mod text;
pub mod univariate;

pub use charpoly::{charpoly_mod_ideal, constant_coefficients};
pub use groebner::{groebner, groebner_with_limits, ideal_contains, ideal_equal, interreduce, GroebnerLimits};
pub use poly::{Mono, Poly};
pub use solve::{is_zero_dimensional, solve, split_case, SolutionSet};
pub use text::{format_poly, parse_complex_poly, parse_poly};

use crate::exactfield::{FieldError, FieldScalar};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PolyError {
    #[error("cannot parse polynomial `{input}`: {reason}")]
    Parse { input: String, reason: String },
    #[error("resource limit reached: {0}")]
    ResourceLimit(String),
    #[error("solution needs an unsupported field extension: {0}")]
    UnsupportedExtension(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("{0}")]
    Shape(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

/// Default variable names `x1..xs, y1..ys`, in decreasing lex order.
pub fn default_variables(s: usize) -> Vec<String> {
    (1..=s).map(|i| format!("x{i}")).chain((1..=s).map(|i| format!("y{i}"))).collect()
}

/// A named-variable polynomial list, as read from and written to JSON.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolySystemJson {
    pub variables: Vec<String>,
    pub polynomials: Vec<String>,
}

impl PolySystemJson {
    pub fn new(variables: &[String], polys: &[Poly<FieldScalar>]) -> Self {
        PolySystemJson {
            variables: variables.to_vec(),
            polynomials: polys.iter().map(|p| format_poly(p, variables)).collect(),
        }
    }

    pub fn parse(&self) -> Result<Vec<Poly<FieldScalar>>, PolyError> {
        self.polynomials.iter().map(|s| parse_poly(s, &self.variables)).collect()
    }
}

/// JSON form of a solution set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolutionSetJson {
    Inconsistent,
    Finite { points: Vec<Vec<(String, String)>> },
    Parametric { free: Vec<String>, dependent: Vec<(String, String)>, constraints: Vec<String> },
}

impl SolutionSetJson {
    pub fn new(set: &SolutionSet, vars: &[String]) -> Self {
        match set {
            SolutionSet::Inconsistent => SolutionSetJson::Inconsistent,
            SolutionSet::Finite(pts) => SolutionSetJson::Finite {
                points: pts
                    .iter()
                    .map(|p| vars.iter().cloned().zip(p.iter().map(|x| x.to_string())).collect())
                    .collect(),
            },
            SolutionSet::Parametric { free, dependent, constraints } => SolutionSetJson::Parametric {
                free: free.iter().map(|&v| vars[v].clone()).collect(),
                dependent: dependent.iter().map(|(v, p)| (vars[*v].clone(), format_poly(p, vars))).collect(),
                constraints: constraints.iter().map(|p| format_poly(p, vars)).collect(),
            },
        }
    }
}
