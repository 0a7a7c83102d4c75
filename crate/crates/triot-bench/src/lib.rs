//! Criterion harness comparing every applicable iteration method on the
//! four benchmark workloads. Run the matrix with `cargo bench`, or narrow
//! it to one curve with e.g. `cargo bench -- 'benchmark-1/triot'`.

use triot_cli::config::preset_shapes;
use triot_cli::{BenchError, Preset, Task};

/// Prepares one desk-preset workload with the same seed the CLI reports
/// use, so criterion timings are comparable to `bench` output.
pub fn desk_task(benchmark: u8) -> Result<Task, BenchError> {
    Task::prepare(benchmark, &preset_shapes(benchmark, Preset::Desk)?, 42)
}
