//! Per-activity time accounting for a worker.

use std::time::{Duration, Instant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    WorklistRemove,
    WorklistAdd,
    Stack,
    DegreeOne,
    DegreeTwoTriangle,
    HighDegree,
    MaxDegree,
    RemoveNeighbors,
    RemoveVertex,
    PruneCheck,
}

impl Phase {
    pub const COUNT: usize = 10;

    pub const ALL: [Phase; Phase::COUNT] = [
        Phase::WorklistRemove,
        Phase::WorklistAdd,
        Phase::Stack,
        Phase::DegreeOne,
        Phase::DegreeTwoTriangle,
        Phase::HighDegree,
        Phase::MaxDegree,
        Phase::RemoveNeighbors,
        Phase::RemoveVertex,
        Phase::PruneCheck,
    ];

    /// Stable key used in reports.
    pub fn name(self) -> &'static str {
        match self {
            Phase::WorklistRemove => "worklist_remove",
            Phase::WorklistAdd => "worklist_add",
            Phase::Stack => "stack",
            Phase::DegreeOne => "degree_one",
            Phase::DegreeTwoTriangle => "degree_two_triangle",
            Phase::HighDegree => "high_degree",
            Phase::MaxDegree => "max_degree",
            Phase::RemoveNeighbors => "remove_neighbors",
            Phase::RemoveVertex => "remove_vertex",
            Phase::PruneCheck => "prune_check",
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// Receives elapsed time per phase. The unit type discards everything and
/// skips the clock reads.
pub trait PhaseSink {
    fn enabled(&self) -> bool;
    fn record(&mut self, phase: Phase, elapsed: Duration);
}

impl PhaseSink for () {
    #[inline]
    fn enabled(&self) -> bool {
        false
    }
    #[inline]
    fn record(&mut self, _: Phase, _: Duration) {}
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct PhaseTimes {
    totals: [Duration; Phase::COUNT],
}

impl PhaseTimes {
    pub fn get(&self, phase: Phase) -> Duration {
        self.totals[phase.index()]
    }

    pub fn tracked(&self) -> Duration {
        self.totals.iter().sum()
    }
}

impl PhaseSink for PhaseTimes {
    #[inline]
    fn enabled(&self) -> bool {
        true
    }
    #[inline]
    fn record(&mut self, phase: Phase, elapsed: Duration) {
        self.totals[phase.index()] += elapsed;
    }
}

#[inline]
pub(crate) fn timed<S: PhaseSink + ?Sized, T>(sink: &mut S, phase: Phase, f: impl FnOnce() -> T) -> T {
    if sink.enabled() {
        let start = Instant::now();
        let out = f();
        sink.record(phase, start.elapsed());
        out
    } else {
        f()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_unique_and_ordered() {
        let names: std::collections::BTreeSet<_> = Phase::ALL.iter().map(|p| p.name()).collect();
        assert_eq!(names.len(), Phase::COUNT);
        for (i, p) in Phase::ALL.iter().enumerate() {
            assert_eq!(p.index(), i);
        }
    }

    #[test]
    fn accumulates() {
        let mut t = PhaseTimes::default();
        t.record(Phase::Stack, Duration::from_millis(2));
        t.record(Phase::Stack, Duration::from_millis(3));
        t.record(Phase::DegreeOne, Duration::from_millis(1));
        assert_eq!(t.get(Phase::Stack), Duration::from_millis(5));
        assert_eq!(t.tracked(), Duration::from_millis(6));
    }
}
