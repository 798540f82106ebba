use crate::embedpipe::EmbedError;
use crate::exactfield::FieldError;
use crate::liealg::LieError;
use crate::polysolve::PolyError;
use crate::realform::RealFormError;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
    #[error("invalid JSON in {path}: {source}")]
    Json { path: String, source: serde_json::Error },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Contract(String),
    #[error("{0}")]
    Unsupported(String),
    #[error("{0}")]
    Failure(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Read { .. } | CliError::Json { .. } | CliError::Input(_) => 2,
            CliError::Contract(_) => 3,
            CliError::Unsupported(_) => 4,
            CliError::Write { .. } | CliError::Failure(_) => 1,
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<LieError> for CliError {
    fn from(e: LieError) -> Self {
        match e {
            LieError::SignInconsistency(_) | LieError::Jacobi(..) => CliError::Failure(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Parse { .. } | PolyError::Field(_) | PolyError::Shape(_) => CliError::Input(e.to_string()),
            PolyError::UnsupportedExtension(_) => CliError::Unsupported(e.to_string()),
            PolyError::ResourceLimit(_) | PolyError::Verification(_) => CliError::Failure(e.to_string()),
        }
    }
}

impl From<RealFormError> for CliError {
    fn from(e: RealFormError) -> Self {
        match e {
            RealFormError::Dimension { .. } => CliError::Input(e.to_string()),
            _ => CliError::Contract(e.to_string()),
        }
    }
}

impl From<EmbedError> for CliError {
    fn from(e: EmbedError) -> Self {
        match e {
            EmbedError::Contract(_) | EmbedError::Unbalanceable(_) | EmbedError::Intertwine(_) => {
                CliError::Contract(e.to_string())
            }
            EmbedError::Malformed(_) => CliError::Input(e.to_string()),
            EmbedError::Lie(e) => e.into(),
            EmbedError::Field(e) => e.into(),
            EmbedError::Poly(e) => e.into(),
            EmbedError::RealForm(e) => e.into(),
        }
    }
}
