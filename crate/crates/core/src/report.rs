//! Machine-readable run reports.
//!
//! JSON field names are stable: `n, m, mode, k, strategy, workers, capacity,
//! threshold_fraction, depth, size, feasible, cover, wall_ms, status,
//! worker_nodes, load_ratios, phase_shares` plus a few descriptive extras.
//! CSV rows carry the same columns without the cover; list columns are
//! `;`-joined and phase shares are spread over `phase_<name>` columns.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::io;

use serde::{Deserialize, Serialize};

use crate::bounds::SolveMode;
use crate::config::{SchedulerConfig, Strategy};
use crate::graph::BaseGraph;
use crate::par::OTHER_PHASE;
use crate::phase::Phase;
use crate::search::Status;
use crate::solver::RunOutcome;

/// Where the graph came from.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphSource {
    pub file: Option<String>,
    pub complemented: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub file: Option<String>,
    pub complemented: bool,
    pub n: usize,
    pub m: usize,
    pub mode: String,
    pub k: Option<usize>,
    pub strategy: Strategy,
    pub workers: usize,
    /// Hybrid only.
    pub capacity: Option<usize>,
    /// Hybrid only.
    pub threshold_fraction: Option<f64>,
    /// StackOnly only.
    pub depth: Option<usize>,
    /// `None` when no cover within the bound was found.
    pub size: Option<usize>,
    pub feasible: bool,
    /// Cover in input-file ids.
    pub cover: Vec<u64>,
    pub greedy_size: usize,
    pub wall_ms: f64,
    pub status: Status,
    pub total_nodes: u64,
    pub max_stack_depth: usize,
    pub worker_nodes: Vec<u64>,
    pub load_ratios: Vec<f64>,
    pub phase_shares: BTreeMap<String, f64>,
}

impl RunReport {
    pub fn new(g: &BaseGraph, source: &GraphSource, mode: SolveMode, config: &SchedulerConfig, out: &RunOutcome) -> Self {
        let hybrid = out.strategy == Strategy::Hybrid;
        RunReport {
            file: source.file.clone(),
            complemented: source.complemented,
            n: g.num_vertices(),
            m: g.num_edges(),
            mode: mode.name().to_string(),
            k: mode.k(),
            strategy: out.strategy,
            workers: out.workers.len(),
            capacity: hybrid.then_some(config.worklist_capacity),
            threshold_fraction: hybrid.then_some(config.threshold_fraction),
            depth: (out.strategy == Strategy::StackOnly).then_some(config.stackonly_depth),
            size: out.solution.feasible.then_some(out.solution.size),
            feasible: out.solution.feasible,
            cover: out.solution.original_cover(g),
            greedy_size: out.greedy_size,
            wall_ms: out.wall.as_secs_f64() * 1e3,
            status: out.status,
            total_nodes: out.load.total_nodes(),
            max_stack_depth: out.max_stack_depth(),
            worker_nodes: out.load.worker_nodes.clone(),
            load_ratios: out.load.load_ratios.clone(),
            phase_shares: out.load.phase_shares.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "graph      {} (n={}, m={}{})",
            self.file.as_deref().unwrap_or("<memory>"),
            self.n,
            self.m,
            if self.complemented { ", complemented" } else { "" }
        );
        let mode = match self.k {
            Some(k) => format!("{} k={k}", self.mode),
            None => self.mode.clone(),
        };
        let _ = writeln!(s, "mode       {mode}");
        let mut strategy = format!("{} x{}", self.strategy, self.workers);
        if let (Some(c), Some(f)) = (self.capacity, self.threshold_fraction) {
            let _ = write!(strategy, " capacity={c} threshold={f}");
        }
        if let Some(d) = self.depth {
            let _ = write!(strategy, " depth={d}");
        }
        let _ = writeln!(s, "strategy   {strategy}");
        match self.size {
            Some(size) => {
                let _ = writeln!(s, "result     cover of size {size} (greedy {})", self.greedy_size);
            }
            None => {
                let _ = writeln!(s, "result     infeasible");
            }
        }
        let _ = writeln!(s, "status     {}", self.status.name());
        let _ = writeln!(s, "wall       {:.3} ms, {} nodes", self.wall_ms, self.total_nodes);
        if !self.load_ratios.is_empty() {
            let max = self.load_ratios.iter().copied().fold(f64::MIN, f64::max);
            let min = self.load_ratios.iter().copied().fold(f64::MAX, f64::min);
            let _ = writeln!(s, "load       min {min:.3}x  max {max:.3}x");
        }
        for (name, share) in &self.phase_shares {
            let _ = writeln!(s, "  {name:<20} {:>6.2}%", share * 100.0);
        }
        s
    }

    /// CSV column names, matching [`RunReport::csv_record`].
    pub fn csv_header() -> Vec<String> {
        let mut cols: Vec<String> = [
            "file",
            "complemented",
            "n",
            "m",
            "mode",
            "k",
            "strategy",
            "workers",
            "capacity",
            "threshold_fraction",
            "depth",
            "size",
            "feasible",
            "greedy_size",
            "wall_ms",
            "status",
            "total_nodes",
            "max_stack_depth",
            "worker_nodes",
            "load_ratios",
        ]
        .iter()
        .map(|s| s.to_string())
        .collect();
        cols.extend(phase_keys().map(|k| format!("phase_{k}")));
        cols
    }

    pub fn csv_record(&self) -> Vec<String> {
        fn opt<T: ToString>(x: Option<T>) -> String {
            x.map(|v| v.to_string()).unwrap_or_default()
        }
        fn join<T: ToString>(xs: &[T]) -> String {
            xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(";")
        }
        let mut rec = vec![
            self.file.clone().unwrap_or_default(),
            self.complemented.to_string(),
            self.n.to_string(),
            self.m.to_string(),
            self.mode.clone(),
            opt(self.k),
            self.strategy.to_string(),
            self.workers.to_string(),
            opt(self.capacity),
            opt(self.threshold_fraction),
            opt(self.depth),
            opt(self.size),
            self.feasible.to_string(),
            self.greedy_size.to_string(),
            format!("{:.3}", self.wall_ms),
            self.status.name().to_string(),
            self.total_nodes.to_string(),
            self.max_stack_depth.to_string(),
            join(&self.worker_nodes),
            join(&self.load_ratios),
        ];
        rec.extend(phase_keys().map(|k| opt(self.phase_shares.get(k))));
        rec
    }
}

fn phase_keys() -> impl Iterator<Item = &'static str> {
    Phase::ALL.iter().map(|p| p.name()).chain(std::iter::once(OTHER_PHASE))
}

pub fn write_csv<W: io::Write>(reports: &[RunReport], out: W) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(RunReport::csv_header())?;
    for r in reports {
        w.write_record(r.csv_record())?;
    }
    w.flush()?;
    Ok(())
}
