//! State shared by all workers of one parallel run.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicU8, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::bounds::{GreedyCover, SolveMode};
use crate::graph::Vertex;
use crate::node::SearchNode;
use crate::search::{Limits, Solution, Status};

#[derive(Debug)]
pub struct SharedSolverState {
    mode: SolveMode,
    /// Size of the best cover known; only ever decreases.
    best: AtomicUsize,
    /// PVC: a cover within `k` has been found. Never cleared.
    found: AtomicBool,
    /// Workers stop fetching new nodes once this is set.
    stop: AtomicBool,
    status: AtomicU8,
    cover: Mutex<Option<Vec<Vertex>>>,
    visits: AtomicU64,
    limits: Limits,
    started: Instant,
}

impl SharedSolverState {
    /// MVC starts from the greedy cover; PVC starts with nothing found.
    pub fn new(mode: SolveMode, greedy: &GreedyCover, limits: Limits) -> Self {
        let cover = match mode {
            SolveMode::Mvc => Some(greedy.cover.clone()),
            SolveMode::Pvc { .. } => None,
        };
        SharedSolverState {
            mode,
            best: AtomicUsize::new(greedy.size),
            found: AtomicBool::new(false),
            stop: AtomicBool::new(false),
            status: AtomicU8::new(Status::Complete.to_u8()),
            cover: Mutex::new(cover),
            visits: AtomicU64::new(0),
            limits,
            started: Instant::now(),
        }
    }

    pub fn mode(&self) -> SolveMode {
        self.mode
    }

    pub fn best(&self) -> &AtomicUsize {
        &self.best
    }

    pub fn found(&self) -> bool {
        self.found.load(Ordering::Acquire)
    }

    #[inline]
    pub fn should_stop(&self) -> bool {
        self.stop.load(Ordering::Acquire)
    }

    /// Raises the found flag without a certificate.
    pub fn signal_found(&self) {
        self.found.store(true, Ordering::Release);
        self.stop.store(true, Ordering::Release);
    }

    pub(crate) fn abort(&self, status: Status) {
        let _ = self.status.compare_exchange(
            Status::Complete.to_u8(),
            status.to_u8(),
            Ordering::AcqRel,
            Ordering::Acquire,
        );
        self.stop.store(true, Ordering::Release);
    }

    /// Counts a visited node against the run limits. Returns false if the
    /// run must end.
    pub(crate) fn count_visit(&self) -> bool {
        let visits = self.visits.fetch_add(1, Ordering::Relaxed) + 1;
        match self.limits.exceeded(visits, self.started) {
            Some(status) => {
                self.abort(status);
                false
            }
            None => true,
        }
    }

    /// `node` has no edges left and passed the stopping condition.
    pub(crate) fn record_cover(&self, node: &SearchNode) {
        let size = node.cover_count();
        match self.mode {
            SolveMode::Mvc => {
                if size >= self.best.load(Ordering::Relaxed) {
                    return;
                }
                let mut cover = self.cover.lock().unwrap();
                if size < self.best.load(Ordering::Relaxed) {
                    *cover = Some(node.cover());
                    self.best.store(size, Ordering::Relaxed);
                }
            }
            SolveMode::Pvc { .. } => {
                let mut cover = self.cover.lock().unwrap();
                if cover.is_none() {
                    *cover = Some(node.cover());
                }
                drop(cover);
                self.signal_found();
            }
        }
    }

    pub fn status(&self) -> Status {
        Status::from_u8(self.status.load(Ordering::Acquire))
    }

    pub fn solution(&self) -> Solution {
        match self.cover.lock().unwrap().clone() {
            Some(cover) => Solution::from_cover(cover),
            None => Solution::infeasible(),
        }
    }
}

/// Ends the run if a worker unwinds, so the others do not wait for it.
pub(crate) struct PanicGuard<'a>(pub &'a SharedSolverState);

impl Drop for PanicGuard<'_> {
    fn drop(&mut self) {
        if std::thread::panicking() {
            self.0.stop.store(true, Ordering::Release);
        }
    }
}
