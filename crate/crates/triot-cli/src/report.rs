//! The reportable result row and its CSV/JSON serialization.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::config::OutputFormat;
use crate::error::BenchError;

/// Exact CSV column set, in order; JSON objects carry the same keys.
pub const CSV_HEADER: &str = "benchmark,method,reps,min_s,mean_s,max_s,checksum";

/// One timed (benchmark, method) row.
///
/// Invariants: `min_s <= mean_s <= max_s`; `reps >= 1`; within one run all
/// records carry a bit-identical `checksum`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkRecord {
    pub benchmark: u8,
    pub method: String,
    pub reps: usize,
    pub min_s: f64,
    pub mean_s: f64,
    pub max_s: f64,
    pub checksum: f64,
}

/// Writes the records as a CSV or JSON table.
///
/// Floating-point fields are printed with the shortest representation that
/// parses back to the identical value, so nothing is rounded away. An
/// empty record list is an error rather than an empty table.
pub fn emit(
    records: &[BenchmarkRecord],
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<(), BenchError> {
    if records.is_empty() {
        return Err(BenchError::NothingToEmit);
    }
    match format {
        OutputFormat::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in records {
                writeln!(
                    out,
                    "{},{},{},{},{},{},{}",
                    r.benchmark, r.method, r.reps, r.min_s, r.mean_s, r.max_s, r.checksum
                )?;
            }
        }
        OutputFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}
