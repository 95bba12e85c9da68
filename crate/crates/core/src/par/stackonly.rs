//! Fixed-level sub-tree distribution.
//!
//! The tree is cut at level `d` into `2^d` sub-trees. Workers claim sub-tree
//! indices from a shared counter; for index `t` a worker replays the path
//! from the root, taking the remove-`v_max` branch where bit `j` of `t` is 0
//! and the remove-`N(v_max)` branch where it is 1, then searches the
//! sub-tree depth-first on its local stack.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::Instant;

use super::metrics::collect_metrics;
use super::shared::{PanicGuard, SharedSolverState};
use crate::bounds::{greedy_approx, SolveMode};
use crate::config::{SchedulerConfig, Strategy};
use crate::graph::BaseGraph;
use crate::node::{LocalStack, SearchNode};
use crate::phase::{timed, Phase};
use crate::search::{expand, Visit, WorkerStats};
use crate::solver::RunOutcome;

pub fn run_stackonly(g: &BaseGraph, mode: SolveMode, config: &SchedulerConfig) -> RunOutcome {
    let started = Instant::now();
    let greedy = greedy_approx(g);
    let shared = SharedSolverState::new(mode, &greedy, config.limits);
    let depth_bound = mode.depth_bound(greedy.size);
    let root = SearchNode::root(g);
    let next = AtomicUsize::new(0);
    let total = 1usize << config.stackonly_depth;

    let workers: Vec<WorkerStats> = std::thread::scope(|s| {
        let handles: Vec<_> = (0..config.num_workers)
            .map(|_| {
                s.spawn(|| {
                    let job = Job { g, shared: &shared, root: &root, depth: config.stackonly_depth, depth_bound };
                    job.run(&next, total, config.fingerprint)
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("stack-only worker panicked")).collect()
    });

    RunOutcome {
        strategy: Strategy::StackOnly,
        solution: shared.solution(),
        status: shared.status(),
        greedy_size: greedy.size,
        depth_bound,
        load: collect_metrics(&workers),
        workers,
        worklist: None,
        wall: started.elapsed(),
    }
}

/// Branch choices leading to sub-tree `t` at depth `depth`: `false` takes
/// the remove-`v_max` child, `true` the remove-`N(v_max)` child.
pub fn subtree_path(t: usize, depth: usize) -> impl Iterator<Item = bool> {
    (0..depth).map(move |level| (t >> level) & 1 == 1)
}

struct Job<'a> {
    g: &'a BaseGraph,
    shared: &'a SharedSolverState,
    root: &'a SearchNode,
    depth: usize,
    depth_bound: usize,
}

enum Replay {
    Reached(SearchNode),
    Dead,
    Stop,
}

impl Job<'_> {
    fn run(&self, next: &AtomicUsize, total: usize, fingerprint: bool) -> WorkerStats {
        let _guard = PanicGuard(self.shared);
        let started = Instant::now();
        let mut stats = WorkerStats::new(fingerprint);
        let mut stack = LocalStack::new(self.depth_bound);
        while !self.shared.should_stop() {
            let t = next.fetch_add(1, Ordering::Relaxed);
            if t >= total {
                break;
            }
            match self.replay(t, &mut stats) {
                Replay::Reached(node) => {
                    if !self.traverse(node, &mut stack, &mut stats) {
                        break;
                    }
                }
                Replay::Dead => {}
                Replay::Stop => break,
            }
        }
        stats.max_stack_depth = stack.high_water();
        stats.elapsed = started.elapsed();
        stats
    }

    fn replay(&self, t: usize, stats: &mut WorkerStats) -> Replay {
        let mode = self.shared.mode();
        let mut node = self.root.clone();
        for take_neighbors in subtree_path(t, self.depth) {
            stats.visit(&node);
            if !self.shared.count_visit() {
                return Replay::Stop;
            }
            match expand(&mut node, self.g, mode, self.shared.best(), &mut stats.phases) {
                Visit::Pruned => return Replay::Dead,
                Visit::Covered => {
                    self.shared.record_cover(&node);
                    return Replay::Dead;
                }
                Visit::Branched(child) => {
                    if take_neighbors {
                        node = child;
                    }
                }
            }
        }
        Replay::Reached(node)
    }

    /// Depth-first search below `start`. Returns false if the run must end.
    fn traverse(&self, start: SearchNode, stack: &mut LocalStack, stats: &mut WorkerStats) -> bool {
        let mode = self.shared.mode();
        let mut current = Some(start);
        loop {
            let mut node = match current.take() {
                Some(node) => node,
                None => {
                    if self.shared.should_stop() {
                        return false;
                    }
                    match timed(&mut stats.phases, Phase::Stack, || stack.pop()) {
                        Some(node) => node,
                        None => return true,
                    }
                }
            };
            stats.visit(&node);
            if !self.shared.count_visit() {
                return false;
            }
            match expand(&mut node, self.g, mode, self.shared.best(), &mut stats.phases) {
                Visit::Pruned => {}
                Visit::Covered => self.shared.record_cover(&node),
                Visit::Branched(child) => {
                    timed(&mut stats.phases, Phase::Stack, || stack.push(child));
                    current = Some(node);
                }
            }
        }
    }
}
