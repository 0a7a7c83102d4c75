//! Sample statistics for timing runs.

use std::time::Duration;

/// Summary of one method's timed samples, in seconds.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Summary {
    pub min_s: f64,
    pub mean_s: f64,
    pub max_s: f64,
    /// Midpoint-averaged median; not emitted in reports but used when
    /// comparing methods, being more robust to outliers than the mean.
    pub median_s: f64,
}

/// Summarizes the samples; `None` when the slice is empty.
pub fn summarize(samples: &[Duration]) -> Option<Summary> {
    if samples.is_empty() {
        return None;
    }
    let seconds: Vec<f64> = samples.iter().map(Duration::as_secs_f64).collect();
    let mut sorted = seconds.clone();
    sorted.sort_by(f64::total_cmp);
    let mid = sorted.len() / 2;
    let median_s = if sorted.len() % 2 == 1 {
        sorted[mid]
    } else {
        (sorted[mid - 1] + sorted[mid]) / 2.0
    };
    Some(Summary {
        min_s: sorted[0],
        mean_s: seconds.iter().sum::<f64>() / seconds.len() as f64,
        max_s: sorted[sorted.len() - 1],
        median_s,
    })
}
