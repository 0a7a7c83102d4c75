//! Errors surfaced while configuring, running, or reporting a benchmark.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("benchmark {0} does not exist; valid ids are 1-4")]
    UnknownBenchmark(u8),

    #[error(
        "benchmark {benchmark} takes {expected} --shape arguments \
         (one per tensor, in operation argument order), got {actual}"
    )]
    WrongShapeCount {
        benchmark: u8,
        expected: usize,
        actual: usize,
    },

    #[error("invalid shape {text:?}: {reason}")]
    BadShape { text: String, reason: String },

    #[error("--methods \"all\" cannot be combined with explicit method names")]
    MixedAllWithExplicit,

    #[error("method {method} was requested more than once")]
    DuplicateMethod { method: &'static str },

    #[error("reps must be at least 1")]
    ZeroReps,

    #[error("method {method} is not applicable to benchmark {benchmark}: {reason}")]
    InapplicableMethod {
        method: &'static str,
        benchmark: u8,
        reason: &'static str,
    },

    #[error(
        "checksum mismatch on benchmark {benchmark}: {method_a} produced \
         {value_a} but {method_b} produced {value_b}"
    )]
    ChecksumMismatch {
        benchmark: u8,
        method_a: &'static str,
        value_a: f64,
        method_b: &'static str,
        value_b: f64,
    },

    #[error("refusing to emit an empty record list")]
    NothingToEmit,

    #[error(transparent)]
    Tensor(#[from] triot::Error),

    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),

    #[error("serializing records: {0}")]
    Json(#[from] serde_json::Error),
}
