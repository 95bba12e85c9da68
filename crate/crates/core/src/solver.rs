//! Strategy dispatch.

use std::time::{Duration, Instant};

use thiserror::Error;

use crate::bounds::{greedy_approx, SolveMode};
use crate::config::{ConfigError, SchedulerConfig, Strategy};
use crate::graph::BaseGraph;
use crate::oracle::{brute_force_min_cover, GraphTooLarge};
use crate::par::{collect_metrics, run_hybrid, run_stackonly, LoadReport, WorklistStats};
use crate::search::{Solution, Status, WorkerStats};
use crate::seq::run_sequential;

#[derive(Debug, Error)]
pub enum SolveError {
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error(transparent)]
    Oracle(#[from] GraphTooLarge),
}

/// Everything a run produced.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub strategy: Strategy,
    pub solution: Solution,
    pub status: Status,
    pub greedy_size: usize,
    /// Provisioned local stack depth.
    pub depth_bound: usize,
    pub workers: Vec<WorkerStats>,
    pub load: LoadReport,
    /// Hybrid only.
    pub worklist: Option<WorklistStats>,
    pub wall: Duration,
}

impl RunOutcome {
    pub fn max_stack_depth(&self) -> usize {
        self.workers.iter().map(|w| w.max_stack_depth).max().unwrap_or(0)
    }

    /// Sum of the per-worker fingerprints, if they were recorded.
    pub fn fingerprint(&self) -> Option<u64> {
        self.workers.iter().try_fold(0u64, |acc, w| w.fingerprint.map(|f| acc.wrapping_add(f)))
    }
}

pub fn solve(g: &BaseGraph, mode: SolveMode, config: &SchedulerConfig) -> Result<RunOutcome, SolveError> {
    config.validate()?;
    Ok(match config.strategy {
        Strategy::Sequential => {
            let run = run_sequential(g, mode, config.limits, config.fingerprint);
            let workers = vec![run.stats];
            RunOutcome {
                strategy: Strategy::Sequential,
                solution: run.solution,
                status: run.status,
                greedy_size: run.greedy_size,
                depth_bound: mode.depth_bound(run.greedy_size),
                load: collect_metrics(&workers),
                wall: workers[0].elapsed,
                workers,
                worklist: None,
            }
        }
        Strategy::StackOnly => run_stackonly(g, mode, config),
        Strategy::Hybrid => run_hybrid(g, mode, config),
        Strategy::Oracle => solve_oracle(g, mode)?,
    })
}

fn solve_oracle(g: &BaseGraph, mode: SolveMode) -> Result<RunOutcome, GraphTooLarge> {
    let started = Instant::now();
    let cover = brute_force_min_cover(g)?;
    let solution = match mode {
        SolveMode::Pvc { k } if cover.len() > k => Solution::infeasible(),
        _ => Solution::from_cover(cover),
    };
    let greedy_size = greedy_approx(g).size;
    let workers = vec![WorkerStats { elapsed: started.elapsed(), ..Default::default() }];
    Ok(RunOutcome {
        strategy: Strategy::Oracle,
        solution,
        status: Status::Complete,
        greedy_size,
        depth_bound: mode.depth_bound(greedy_size),
        load: collect_metrics(&workers),
        wall: started.elapsed(),
        workers,
        worklist: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn all_strategies_agree_on_small_graphs() {
        for g in [path(3), cycle(5), petersen(), star(5), complete(5), BaseGraph::empty(4)] {
            let expect = crate::oracle::brute_force_mvc(&g).unwrap();
            for strategy in [Strategy::Sequential, Strategy::StackOnly, Strategy::Hybrid, Strategy::Oracle] {
                let mut config = SchedulerConfig::new(strategy, 4);
                config.stackonly_depth = 3;
                let out = solve(&g, SolveMode::Mvc, &config).unwrap();
                assert_eq!(out.solution.size, expect, "{strategy} on {g:?}");
                assert!(g.is_vertex_cover(&out.solution.cover));
                assert_eq!(out.status, Status::Complete);
            }
        }
    }

    #[test]
    fn invalid_config_is_rejected() {
        let config = SchedulerConfig::new(Strategy::Hybrid, 0);
        assert!(matches!(solve(&path(3), SolveMode::Mvc, &config), Err(SolveError::Config(_))));
    }

    #[test]
    fn oracle_rejects_large_graphs() {
        let config = SchedulerConfig::new(Strategy::Oracle, 1);
        assert!(matches!(solve(&path(25), SolveMode::Mvc, &config), Err(SolveError::Oracle(_))));
    }

    #[test]
    fn hybrid_examples() {
        let c = SchedulerConfig::new(Strategy::Hybrid, 4);
        assert_eq!(run_hybrid(&cycle(5), SolveMode::Mvc, &c).solution.size, 3);
        let c = SchedulerConfig::new(Strategy::Hybrid, 8);
        let out = run_hybrid(&petersen(), SolveMode::Mvc, &c);
        assert_eq!(out.solution.size, 6);
        let out = run_hybrid(&petersen(), SolveMode::Pvc { k: 5 }, &c);
        assert!(!out.solution.feasible);
        assert_eq!(out.status, Status::Complete);
        let wl = out.worklist.unwrap();
        assert_eq!(wl.added, wl.removed);
        assert_eq!(wl.remaining, 0);
    }

    #[test]
    fn stackonly_examples() {
        let mut c = SchedulerConfig::new(Strategy::StackOnly, 2);
        c.stackonly_depth = 1;
        assert_eq!(run_stackonly(&path(3), SolveMode::Mvc, &c).solution.size, 1);
        c.num_workers = 8;
        c.stackonly_depth = 8;
        assert_eq!(run_stackonly(&petersen(), SolveMode::Mvc, &c).solution.size, 6);
    }

    #[test]
    fn stackonly_reduced_at_root() {
        // every path dies at level 0: 2^d replays, one node each
        let mut c = SchedulerConfig::new(Strategy::StackOnly, 3);
        c.stackonly_depth = 4;
        let out = run_stackonly(&path(7), SolveMode::Mvc, &c);
        assert_eq!(out.solution.size, 3);
        assert_eq!(out.load.total_nodes(), 16);
    }
}
