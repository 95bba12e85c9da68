//! Per-worker depth-first stacks plus a threshold-gated global worklist.
//!
//! On every branch the remove-`N(v_max)` child is donated to the worklist
//! while it holds fewer entries than the threshold, and pushed on the local
//! stack otherwise; the worker continues with the remove-`v_max` child. An
//! idle worker pops its own stack first and only then asks the worklist.

use std::time::Instant;

use super::metrics::collect_metrics;
use super::shared::{PanicGuard, SharedSolverState};
use super::worklist::{GlobalWorklist, WorklistStats};
use crate::bounds::{greedy_approx, SolveMode};
use crate::config::{SchedulerConfig, Strategy};
use crate::graph::BaseGraph;
use crate::node::{LocalStack, SearchNode};
use crate::phase::{timed, Phase};
use crate::search::{expand, Visit, WorkerStats};
use crate::solver::RunOutcome;

pub fn run_hybrid(g: &BaseGraph, mode: SolveMode, config: &SchedulerConfig) -> RunOutcome {
    let started = Instant::now();
    let greedy = greedy_approx(g);
    let shared = SharedSolverState::new(mode, &greedy, config.limits);
    let depth_bound = mode.depth_bound(greedy.size);
    let (workers, worklist) = run_hybrid_with(g, config, &shared, depth_bound);
    RunOutcome {
        strategy: Strategy::Hybrid,
        solution: shared.solution(),
        status: shared.status(),
        greedy_size: greedy.size,
        depth_bound,
        load: collect_metrics(&workers),
        workers,
        worklist: Some(worklist),
        wall: started.elapsed(),
    }
}

/// Runs the workers against caller-owned shared state, which lets a caller
/// observe or signal the run while it is in progress. The worklist is seeded
/// with the root of `g`.
pub fn run_hybrid_with(
    g: &BaseGraph,
    config: &SchedulerConfig,
    shared: &SharedSolverState,
    depth_bound: usize,
) -> (Vec<WorkerStats>, WorklistStats) {
    let worklist =
        GlobalWorklist::new(config.worklist_capacity, config.threshold(), config.num_workers, config.backoff);
    if worklist.try_add(SearchNode::root(g)).is_err() {
        unreachable!("an empty worklist accepts the root");
    }
    let workers = std::thread::scope(|s| {
        let handles: Vec<_> = (0..config.num_workers)
            .map(|_| s.spawn(|| worker(g, shared, &worklist, depth_bound, config.fingerprint)))
            .collect();
        handles.into_iter().map(|h| h.join().expect("hybrid worker panicked")).collect()
    });
    (workers, worklist.stats())
}

fn worker(
    g: &BaseGraph,
    shared: &SharedSolverState,
    worklist: &GlobalWorklist,
    depth_bound: usize,
    fingerprint: bool,
) -> WorkerStats {
    let _guard = PanicGuard(shared);
    let started = Instant::now();
    let mode = shared.mode();
    let mut stats = WorkerStats::new(fingerprint);
    let mut stack = LocalStack::new(depth_bound);
    let mut current: Option<SearchNode> = None;

    loop {
        let mut node = match current.take() {
            Some(node) => node,
            None => {
                if shared.should_stop() {
                    break;
                }
                let popped = timed(&mut stats.phases, Phase::Stack, || stack.pop());
                match popped {
                    Some(node) => node,
                    None => {
                        let removed = timed(&mut stats.phases, Phase::WorklistRemove, || {
                            worklist.remove_or_done(|| shared.should_stop())
                        });
                        match removed {
                            Some(node) => node,
                            None => break,
                        }
                    }
                }
            }
        };
        stats.visit(&node);
        if !shared.count_visit() {
            break;
        }
        match expand(&mut node, g, mode, shared.best(), &mut stats.phases) {
            Visit::Pruned => {}
            Visit::Covered => shared.record_cover(&node),
            Visit::Branched(child) => {
                let rejected = if worklist.wants_work() {
                    timed(&mut stats.phases, Phase::WorklistAdd, || worklist.try_add(child)).err()
                } else {
                    Some(child)
                };
                if let Some(child) = rejected {
                    timed(&mut stats.phases, Phase::Stack, || stack.push(child));
                }
                current = Some(node);
            }
        }
    }
    stats.max_stack_depth = stack.high_water();
    stats.elapsed = started.elapsed();
    stats
}
