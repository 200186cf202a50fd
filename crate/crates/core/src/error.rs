use crate::analytic::AnalyticError;
use crate::exact::ExactError;
use crate::lambda::LambdaError;
use crate::params::ParamError;
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Lambda(#[from] LambdaError),
    #[error(transparent)]
    Analytic(#[from] AnalyticError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("at {name} = {value}: {source}")]
    AtPoint {
        name: &'static str,
        value: f64,
        #[source]
        source: Box<Error>,
    },
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Process exit code: 2 invalid input, 3 solver failure, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidSpec(_) | Error::Param(_) => 2,
            Error::Lambda(_) | Error::Analytic(_) | Error::Exact(_) => 3,
            Error::AtPoint { source, .. } => source.exit_code(),
            Error::Io { .. } | Error::Csv(_) => 4,
            Error::Json(e) if e.is_io() => 4,
            Error::Json(_) => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
