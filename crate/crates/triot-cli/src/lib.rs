//! Benchmark harness comparing tensor-iteration strategies.
//!
//! Four benchmarks exercise the iteration engine and its reference
//! strategies on operand tensors of different shapes:
//!
//! 1. copying the leading window of a tensor into a smaller tensor,
//! 2. an inner product over the tuple range two tensors share,
//! 3. the broadcast update x ← x + y·x − z over x's shape,
//! 4. full naive convolution of two matrices.
//!
//! The [`runner`] times each selected method over a fixed number of
//! repetitions (initialization and operand restoration excluded), checks
//! that every method produces a bit-identical result checksum, and
//! [`report`] renders the rows as CSV or JSON. Input data is generated
//! from a seed, so checksums are reproducible across runs, methods, and
//! machines.

pub mod clock;
pub mod config;
pub mod error;
pub mod report;
pub mod runner;
pub mod stats;
pub mod tasks;

pub use clock::{Clock, ManualClock, MonotonicClock};
pub use config::{BenchmarkConfig, Cli, Method, MethodSelection, OutputFormat, Preset};
pub use error::BenchError;
pub use report::{emit, BenchmarkRecord};
pub use runner::{run_benchmark, run_benchmark_with_clock, MethodRun};
pub use tasks::Task;
