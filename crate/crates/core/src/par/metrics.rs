//! Load balance and time breakdown across workers.

use std::collections::BTreeMap;

use crate::phase::Phase;
use crate::search::WorkerStats;

/// Key of the untracked remainder in [`LoadReport::phase_shares`].
pub const OTHER_PHASE: &str = "other";

#[derive(Clone, Debug, Default, PartialEq)]
pub struct LoadReport {
    pub worker_nodes: Vec<u64>,
    /// Visited nodes of each worker divided by the mean over all workers.
    pub load_ratios: Vec<f64>,
    /// Per-worker fraction of lifetime spent in each phase, averaged over
    /// workers, plus the untracked remainder under `"other"`.
    pub phase_shares: BTreeMap<String, f64>,
}

impl LoadReport {
    pub fn max_ratio(&self) -> f64 {
        self.load_ratios.iter().copied().fold(f64::NAN, f64::max)
    }

    pub fn min_ratio(&self) -> f64 {
        self.load_ratios.iter().copied().fold(f64::NAN, f64::min)
    }

    pub fn total_nodes(&self) -> u64 {
        self.worker_nodes.iter().sum()
    }
}

/// Ratios are all 1.0 when no worker visited anything.
pub fn load_ratios(counts: &[u64]) -> Vec<f64> {
    if counts.is_empty() {
        return Vec::new();
    }
    let mean = counts.iter().map(|&c| c as f64).sum::<f64>() / counts.len() as f64;
    if mean == 0.0 {
        return vec![1.0; counts.len()];
    }
    counts.iter().map(|&c| c as f64 / mean).collect()
}

pub fn collect_metrics(workers: &[WorkerStats]) -> LoadReport {
    let worker_nodes: Vec<u64> = workers.iter().map(|w| w.nodes).collect();
    let load_ratios = load_ratios(&worker_nodes);

    let mut phase_shares = BTreeMap::new();
    let timed: Vec<&WorkerStats> = workers.iter().filter(|w| !w.elapsed.is_zero()).collect();
    if !timed.is_empty() {
        let mut tracked = 0.0;
        for phase in Phase::ALL {
            let share = timed
                .iter()
                .map(|w| (w.phases.get(phase).as_secs_f64() / w.elapsed.as_secs_f64()).min(1.0))
                .sum::<f64>()
                / timed.len() as f64;
            tracked += share;
            phase_shares.insert(phase.name().to_string(), share);
        }
        phase_shares.insert(OTHER_PHASE.to_string(), (1.0 - tracked).max(0.0));
    }
    LoadReport { worker_nodes, load_ratios, phase_shares }
}
