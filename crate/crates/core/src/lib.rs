//! Exact minimum and parameterized vertex cover by branch-and-reduce.
//!
//! The search tree is traversed by one of three strategies:
//!
//! * [`seq::run_sequential`]: a single depth-first worker.
//! * [`par::run_stackonly`]: the tree is cut at a fixed level and workers
//!   claim the resulting sub-trees, replaying the root path to each.
//! * [`par::run_hybrid`]: every worker searches depth-first on a local stack
//!   and donates branches to a shared bounded worklist while the worklist is
//!   below a fill threshold.
//!
//! Tree nodes are degree arrays over one immutable [`graph::BaseGraph`], so
//! any node can be handed to any worker. [`solver::solve`] dispatches on a
//! [`config::SchedulerConfig`] and [`report::RunReport`] turns the result
//! into JSON, CSV or text.
//!
//! ```
//! use vcover::{generators, solve, SchedulerConfig, SolveMode, Strategy};
//!
//! let g = generators::petersen();
//! let out = solve(&g, SolveMode::Mvc, &SchedulerConfig::new(Strategy::Hybrid, 4)).unwrap();
//! assert_eq!(out.solution.size, 6);
//! assert!(g.is_vertex_cover(&out.solution.cover));
//! ```

pub mod bounds;
pub mod config;
pub mod generators;
pub mod graph;
pub mod node;
pub mod oracle;
pub mod par;
pub mod phase;
pub mod reduce;
pub mod report;
pub mod search;
pub mod seq;
pub mod solver;
pub mod sweep;

pub use bounds::SolveMode;
pub use config::{SchedulerConfig, Strategy};
pub use graph::{parse_dimacs, parse_edge_list, BaseGraph, GraphError, Vertex};
pub use search::{Limits, Solution, Status};
pub use solver::{solve, RunOutcome, SolveError};
