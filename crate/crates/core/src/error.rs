//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CoreError {
    /// A tape or network evaluation produced a non-finite value.
    #[error("numerical-overflow: non-finite value at tape node {node} ({op})")]
    NumericalOverflow { node: usize, op: &'static str },

    /// An argument fell outside its mathematical domain.
    #[error("domain: {0}")]
    Domain(String),

    /// A sampler chain produced a non-finite coordinate.
    #[error("diverged: non-finite sample coordinate at step {step}")]
    Diverged { step: usize },

    /// A Langevin negative-sampling chain produced a non-finite coordinate.
    #[error("sgld-diverged: non-finite coordinate at SGLD step {step}")]
    SgldDiverged { step: usize },

    /// A training loop hit a non-finite loss and aborted.
    #[error("training-diverged: non-finite loss at step {step}")]
    TrainingDiverged {
        step: usize,
        /// Log of the steps completed before the abort.
        log: crate::training::RunLog,
    },

    #[error("empty-batch")]
    EmptyBatch,

    #[error("unlabeled-in-ce: batch element {index} carries no label")]
    UnlabeledInCe { index: usize },

    #[error("unlabeled-in-dlsm: batch element {index} carries no label")]
    UnlabeledInDlsm { index: usize },

    #[error("no-labeled-data")]
    NoLabeledData,

    #[error("grid-mismatch: {0}")]
    GridMismatch(String),

    #[error("insufficient-samples: need at least 2 points, got {got}")]
    InsufficientSamples { got: usize },

    #[error("k-too-large: k={k} but only {n} real points")]
    KTooLarge { k: usize, n: usize },

    #[error("empty-test-set")]
    EmptyTestSet,

    #[error("singular-covariance: {0}")]
    SingularCovariance(String),

    #[error("parse-error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type CoreResult<T> = Result<T, CoreError>;
