use std::path::PathBuf;

use marc_core::{ParamError, ProblemError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown solver `{0}` (expected MARC1-3, MARC1-3-MONO or TRMSM1-3)")]
    UnknownSolver(String),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Profile(#[from] ProfileError),
    #[error("empty selection: {0}")]
    EmptySelection(&'static str),
    #[error("parallelism must be at least 1")]
    ZeroParallelism,
    #[error("failed to start worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Csv {
        path: PathBuf,
        #[source]
        source: csv::Error,
    },
    #[error("{path}: {source}")]
    Json {
        path: PathBuf,
        #[source]
        source: serde_json::Error,
    },
    #[error("{path}, line {line}: {msg}")]
    Malformed {
        path: PathBuf,
        line: u64,
        msg: String,
    },
}

#[derive(Debug, Error, PartialEq)]
pub enum ProfileError {
    #[error("no records to profile")]
    EmptyInput,
    #[error("duplicate record for problem {problem} (n={dim}) and solver {solver}")]
    DuplicatePair {
        problem: String,
        dim: usize,
        solver: String,
    },
    #[error("tau_max must exceed 1, got {0}")]
    InvalidTauMax(f64),
}
