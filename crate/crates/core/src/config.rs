use std::fmt;
use std::str::FromStr;
use std::time::Duration;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::search::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Strategy {
    #[serde(rename = "seq")]
    Sequential,
    #[serde(rename = "stackonly")]
    StackOnly,
    #[serde(rename = "hybrid")]
    Hybrid,
    #[serde(rename = "oracle")]
    Oracle,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Sequential => "seq",
            Strategy::StackOnly => "stackonly",
            Strategy::Hybrid => "hybrid",
            Strategy::Oracle => "oracle",
        }
    }

    pub fn is_parallel(self) -> bool {
        matches!(self, Strategy::StackOnly | Strategy::Hybrid)
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "seq" | "sequential" => Ok(Strategy::Sequential),
            "stackonly" => Ok(Strategy::StackOnly),
            "hybrid" => Ok(Strategy::Hybrid),
            "oracle" => Ok(Strategy::Oracle),
            other => Err(format!("unknown strategy {other:?} (expected seq, stackonly, hybrid or oracle)")),
        }
    }
}

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("at least one worker is required")]
    NoWorkers,
    #[error("worklist capacity must be at least 1")]
    ZeroCapacity,
    #[error("threshold fraction {0} is outside (0, 1]")]
    BadThresholdFraction(f64),
    #[error("stack-only depth {0} is outside 1..={MAX_STACKONLY_DEPTH}")]
    BadDepth(usize),
}

pub const MAX_STACKONLY_DEPTH: usize = 30;

#[derive(Clone, Debug, PartialEq)]
pub struct SchedulerConfig {
    pub strategy: Strategy,
    pub num_workers: usize,
    pub worklist_capacity: usize,
    /// Donation threshold as a fraction of the capacity.
    pub threshold_fraction: f64,
    /// Level at which StackOnly splits the tree into `2^depth` sub-trees.
    pub stackonly_depth: usize,
    /// Sleep between attempts on an empty worklist.
    pub backoff: Duration,
    pub limits: Limits,
    /// Record an order-independent fingerprint of every visited node.
    pub fingerprint: bool,
}

impl Default for SchedulerConfig {
    fn default() -> Self {
        SchedulerConfig {
            strategy: Strategy::Hybrid,
            num_workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            worklist_capacity: 256,
            threshold_fraction: 0.5,
            stackonly_depth: 8,
            backoff: Duration::from_micros(50),
            limits: Limits::default(),
            fingerprint: false,
        }
    }
}

impl SchedulerConfig {
    pub fn new(strategy: Strategy, num_workers: usize) -> Self {
        SchedulerConfig { strategy, num_workers, ..Default::default() }
    }

    /// `round(fraction * capacity)`, at least 1.
    pub fn threshold(&self) -> usize {
        ((self.threshold_fraction * self.worklist_capacity as f64).round() as usize).clamp(1, self.worklist_capacity.max(1))
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.num_workers == 0 {
            return Err(ConfigError::NoWorkers);
        }
        if self.worklist_capacity == 0 {
            return Err(ConfigError::ZeroCapacity);
        }
        if !(self.threshold_fraction > 0.0 && self.threshold_fraction <= 1.0) {
            return Err(ConfigError::BadThresholdFraction(self.threshold_fraction));
        }
        if self.stackonly_depth == 0 || self.stackonly_depth > MAX_STACKONLY_DEPTH {
            return Err(ConfigError::BadDepth(self.stackonly_depth));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn threshold_rounding() {
        let mut c = SchedulerConfig { worklist_capacity: 10, threshold_fraction: 0.25, ..Default::default() };
        assert_eq!(c.threshold(), 3);
        c.threshold_fraction = 0.01;
        assert_eq!(c.threshold(), 1);
        c.threshold_fraction = 1.0;
        assert_eq!(c.threshold(), 10);
        c.worklist_capacity = 1;
        assert_eq!(c.threshold(), 1);
    }

    #[test]
    fn validation() {
        let ok = SchedulerConfig::new(Strategy::Hybrid, 2);
        assert_eq!(ok.validate(), Ok(()));
        assert_eq!(SchedulerConfig { num_workers: 0, ..ok.clone() }.validate(), Err(ConfigError::NoWorkers));
        assert_eq!(SchedulerConfig { worklist_capacity: 0, ..ok.clone() }.validate(), Err(ConfigError::ZeroCapacity));
        assert!(SchedulerConfig { threshold_fraction: 0.0, ..ok.clone() }.validate().is_err());
        assert!(SchedulerConfig { threshold_fraction: 1.5, ..ok.clone() }.validate().is_err());
        assert!(SchedulerConfig { threshold_fraction: f64::NAN, ..ok.clone() }.validate().is_err());
        assert_eq!(SchedulerConfig { stackonly_depth: 0, ..ok.clone() }.validate(), Err(ConfigError::BadDepth(0)));
    }

    #[test]
    fn strategy_names_round_trip() {
        for s in [Strategy::Sequential, Strategy::StackOnly, Strategy::Hybrid, Strategy::Oracle] {
            assert_eq!(s.name().parse::<Strategy>(), Ok(s));
        }
        assert!("gpu".parse::<Strategy>().is_err());
    }
}
