//! Drives one benchmark across the selected methods: warm-up, timed
//! repetitions, statistics, and cross-method checksum certification.

use crate::clock::{Clock, MonotonicClock};
use crate::config::{BenchmarkConfig, Method, MethodSelection};
use crate::error::BenchError;
use crate::report::BenchmarkRecord;
use crate::stats::summarize;
use crate::tasks::Task;

/// One method's outcome: the reportable record plus the median, which the
/// report format omits but comparisons want.
#[derive(Clone, Debug)]
pub struct MethodRun {
    pub record: BenchmarkRecord,
    pub median_s: f64,
}

/// Runs the configured benchmark and returns one record per method.
///
/// Methods run strictly sequentially. Per method: operand initialization
/// and restoration happen outside the timed region, one untimed warm-up
/// execution precedes the samples, and exactly `reps` timed executions are
/// recorded. Every execution's checksum — across repetitions and across
/// methods — must agree bit-for-bit or the run fails.
pub fn run_benchmark(config: &BenchmarkConfig) -> Result<Vec<BenchmarkRecord>, BenchError> {
    let mut clock = MonotonicClock::new();
    Ok(run_benchmark_with_clock(config, &mut clock)?
        .into_iter()
        .map(|run| run.record)
        .collect())
}

/// [`run_benchmark`] against a caller-provided clock.
pub fn run_benchmark_with_clock(
    config: &BenchmarkConfig,
    clock: &mut dyn Clock,
) -> Result<Vec<MethodRun>, BenchError> {
    if config.reps == 0 {
        return Err(BenchError::ZeroReps);
    }
    let mut task = Task::prepare(config.benchmark, &config.shapes, config.seed)?;
    let methods: Vec<Method> = match &config.methods {
        MethodSelection::AllApplicable => Method::ALL
            .into_iter()
            .filter(|m| task.applicable(*m))
            .collect(),
        MethodSelection::Explicit(list) => {
            for method in list {
                if let Some(reason) = task.inapplicability_reason(*method) {
                    return Err(BenchError::InapplicableMethod {
                        method: method.name(),
                        benchmark: config.benchmark,
                        reason,
                    });
                }
            }
            list.clone()
        }
    };

    let mut runs: Vec<MethodRun> = Vec::with_capacity(methods.len());
    let mut first: Option<(Method, f64)> = None;
    for method in methods {
        // Warm-up: primes caches and page tables and pins down the
        // checksum every timed repetition must reproduce.
        task.reset();
        let expected = task.execute(method)?;

        let mut samples = Vec::with_capacity(config.reps);
        for _ in 0..config.reps {
            task.reset();
            let start = clock.now();
            let value = task.execute(method)?;
            let stop = clock.now();
            samples.push(stop.saturating_sub(start));
            if value.to_bits() != expected.to_bits() {
                return Err(BenchError::ChecksumMismatch {
                    benchmark: config.benchmark,
                    method_a: method.name(),
                    value_a: expected,
                    method_b: method.name(),
                    value_b: value,
                });
            }
        }

        match first {
            None => first = Some((method, expected)),
            Some((first_method, first_value)) => {
                if expected.to_bits() != first_value.to_bits() {
                    return Err(BenchError::ChecksumMismatch {
                        benchmark: config.benchmark,
                        method_a: first_method.name(),
                        value_a: first_value,
                        method_b: method.name(),
                        value_b: expected,
                    });
                }
            }
        }

        let summary = summarize(&samples).expect("reps is at least 1");
        runs.push(MethodRun {
            record: BenchmarkRecord {
                benchmark: config.benchmark,
                method: method.name().to_string(),
                reps: config.reps,
                min_s: summary.min_s,
                mean_s: summary.mean_s,
                max_s: summary.max_s,
                checksum: expected,
            },
            median_s: summary.median_s,
        });
    }
    Ok(runs)
}
