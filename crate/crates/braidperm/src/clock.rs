//! Wall-clock budgets for the core searches.

use std::time::{Duration, Instant};

use braidperm_core::search::Deadline;

/// Default budget for one search.
pub const DEFAULT_BUDGET: Duration = Duration::from_secs(60);

#[derive(Clone, Copy, Debug)]
pub struct WallClock {
    started: Instant,
    budget: Duration,
}

impl WallClock {
    pub fn start(budget: Duration) -> Self {
        WallClock { started: Instant::now(), budget }
    }

    pub fn elapsed(&self) -> Duration {
        self.started.elapsed()
    }
}

impl Deadline for WallClock {
    fn expired(&self) -> bool {
        self.started.elapsed() >= self.budget
    }
}
