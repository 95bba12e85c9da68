//! Parallel traversal strategies.
//!
//! Workers are OS threads. Each owns its current node and a bounded local
//! stack; the only shared state is the base graph, the solver state in
//! [`SharedSolverState`] and, for Hybrid, the [`GlobalWorklist`].

mod hybrid;
mod metrics;
mod shared;
mod stackonly;
mod worklist;

pub use hybrid::{run_hybrid, run_hybrid_with};
pub use metrics::{collect_metrics, load_ratios, LoadReport, OTHER_PHASE};
pub use shared::SharedSolverState;
pub use stackonly::{run_stackonly, subtree_path};
pub use worklist::{GlobalWorklist, WorklistStats};
