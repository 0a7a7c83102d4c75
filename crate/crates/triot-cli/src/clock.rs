//! Wall-clock abstraction so the timing logic itself is testable.

use std::time::{Duration, Instant};

/// Source of monotonically non-decreasing timestamps, read as the elapsed
/// time since the clock's origin.
pub trait Clock {
    fn now(&mut self) -> Duration;
}

/// The real wall clock.
pub struct MonotonicClock {
    origin: Instant,
}

impl MonotonicClock {
    pub fn new() -> Self {
        Self {
            origin: Instant::now(),
        }
    }
}

impl Default for MonotonicClock {
    fn default() -> Self {
        Self::new()
    }
}

impl Clock for MonotonicClock {
    fn now(&mut self) -> Duration {
        self.origin.elapsed()
    }
}

/// A scripted clock for tests: hands out the configured instants in order
/// and panics if read more often than scripted.
pub struct ManualClock {
    ticks: std::vec::IntoIter<Duration>,
}

impl ManualClock {
    pub fn from_millis(ticks: impl IntoIterator<Item = u64>) -> Self {
        let ticks: Vec<Duration> = ticks.into_iter().map(Duration::from_millis).collect();
        Self {
            ticks: ticks.into_iter(),
        }
    }
}

impl Clock for ManualClock {
    fn now(&mut self) -> Duration {
        self.ticks.next().expect("manual clock ran out of ticks")
    }
}
