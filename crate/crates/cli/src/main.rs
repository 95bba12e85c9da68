//! `vcsolve`: solve minimum or parameterized vertex cover on a graph file and
//! report the run as JSON, CSV or text.
//!
//! ```text
//! vcsolve --input g.el --mode mvc --strategy hybrid --workers 8
//! vcsolve --input instance.clq --complement --mode pvc --k 40 --output csv
//! vcsolve sweep --input g.el --strategies seq,stackonly,hybrid --workers 2,4,8 --pvc-triple
//! ```
//!
//! Exit status: 0 when the run completed (an infeasible PVC instance is a
//! complete answer), 2 when a timeout or node budget cut it short, 1 on usage,
//! input or configuration errors.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use vcover::report::{write_csv, GraphSource, RunReport};
use vcover::sweep::{bench_sweep, write_sweep_csv, SweepRow, SweepSpec};
use vcover::{parse_dimacs, parse_edge_list, solve, BaseGraph, Limits, SchedulerConfig, SolveMode, Strategy};

#[derive(Parser, Debug)]
#[command(name = "vcsolve", version, about = "Exact vertex cover by parallel branch-and-reduce")]
#[command(args_conflicts_with_subcommands = true)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    solve: SolveArgs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a matrix of strategies and tuning knobs on one graph
    Sweep(SweepArgs),
}

#[derive(Args, Debug)]
struct GraphArgs {
    /// Graph file
    #[arg(long)]
    input: Option<PathBuf>,
    /// Input format; guessed from the extension (.clq, .col, .dimacs) or a `p` line when omitted
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Solve on the complement graph
    #[arg(long)]
    complement: bool,
}

#[derive(Args, Debug)]
struct RunArgs {
    /// Sleep between polls of an empty worklist, in microseconds
    #[arg(long, default_value_t = 50)]
    backoff_us: u64,
    /// Wall-clock limit per run
    #[arg(long)]
    timeout_s: Option<f64>,
    /// Limit on visited search-tree nodes per run
    #[arg(long)]
    node_budget: Option<u64>,
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
    /// Write the report here instead of stdout
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_enum, default_value_t = Mode::Mvc)]
    mode: Mode,
    /// Cover size bound for --mode pvc
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, default_value = "hybrid", value_parser = parse_strategy)]
    strategy: Strategy,
    /// Worker threads; defaults to the available parallelism
    #[arg(long)]
    workers: Option<usize>,
    #[arg(long)]
    worklist_capacity: Option<usize>,
    /// Donation threshold as a fraction of the worklist capacity, in (0, 1]
    #[arg(long)]
    threshold_fraction: Option<f64>,
    /// StackOnly split level
    #[arg(long)]
    depth: Option<usize>,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    #[command(flatten)]
    graph: GraphArgs,
    #[arg(long, value_delimiter = ',', default_value = "seq,stackonly,hybrid", value_parser = parse_strategy)]
    strategies: Vec<Strategy>,
    /// Worker counts; defaults to the available parallelism
    #[arg(long, value_delimiter = ',')]
    workers: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    capacities: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "0.25,0.5,0.75,1.0")]
    fractions: Vec<f64>,
    #[arg(long, value_delimiter = ',', default_value = "8,12,16")]
    depths: Vec<usize>,
    /// Also solve PVC with k = min-1, min, min+1 around the MVC size
    #[arg(long)]
    pvc_triple: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Dimacs,
    Edgelist,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Mvc,
    Pvc,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Csv,
    Text,
}

fn parse_strategy(s: &str) -> Result<Strategy, String> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = match cli.command {
        Some(Command::Sweep(args)) => run_sweep(args),
        None => run_solve(cli.solve),
    };
    match result {
        Ok(complete) if complete => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn load_graph(args: &GraphArgs) -> Result<(BaseGraph, GraphSource)> {
    let Some(path) = &args.input else { bail!("--input is required") };
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let format = args.format.unwrap_or_else(|| guess_format(path, &text));
    let g = match format {
        Format::Dimacs => parse_dimacs(&text),
        Format::Edgelist => parse_edge_list(&text),
    }
    .with_context(|| format!("parsing {}", path.display()))?;
    let g = if args.complement { g.complement() } else { g };
    let source = GraphSource { file: Some(path.display().to_string()), complemented: args.complement };
    Ok((g, source))
}

fn guess_format(path: &Path, text: &str) -> Format {
    let ext = path.extension().and_then(|e| e.to_str()).map(str::to_ascii_lowercase);
    if matches!(ext.as_deref(), Some("clq" | "col" | "dimacs")) {
        return Format::Dimacs;
    }
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with(['c', '#', '%']));
    match first {
        Some(l) if l.starts_with("p ") => Format::Dimacs,
        _ => Format::Edgelist,
    }
}

fn base_config(run: &RunArgs) -> SchedulerConfig {
    SchedulerConfig {
        backoff: Duration::from_micros(run.backoff_us),
        limits: Limits { node_budget: run.node_budget, timeout: run.timeout_s.map(Duration::from_secs_f64) },
        ..Default::default()
    }
}

fn run_solve(args: SolveArgs) -> Result<bool> {
    let mode = match (args.mode, args.k) {
        (Mode::Mvc, k) => {
            if k.is_some() {
                eprintln!("warning: --k is ignored for --mode mvc");
            }
            SolveMode::Mvc
        }
        (Mode::Pvc, None) => bail!("--mode pvc needs --k"),
        (Mode::Pvc, Some(k)) => SolveMode::pvc(k).context("--k must be at least 1")?,
    };
    if args.depth.is_some() && args.strategy != Strategy::StackOnly {
        eprintln!("warning: --depth only applies to the stackonly strategy; ignored");
    }

    let mut config = SchedulerConfig { strategy: args.strategy, ..base_config(&args.run) };
    if let Some(w) = args.workers {
        config.num_workers = w;
    }
    if let Some(c) = args.worklist_capacity {
        config.worklist_capacity = c;
    }
    if let Some(f) = args.threshold_fraction {
        config.threshold_fraction = f;
    }
    if let (Strategy::StackOnly, Some(d)) = (args.strategy, args.depth) {
        config.stackonly_depth = d;
    }

    let (g, source) = load_graph(&args.graph)?;
    let out = solve(&g, mode, &config)?;
    let report = RunReport::new(&g, &source, mode, &config, &out);
    if report.status.is_complete() && report.feasible {
        let cover = &out.solution.cover;
        if !g.is_vertex_cover(cover) || cover.len() != out.solution.size {
            bail!("internal error: reported cover does not verify");
        }
    }

    let mut buf = Vec::new();
    match args.run.output {
        Output::Json => writeln!(buf, "{}", report.to_json())?,
        Output::Csv => write_csv(std::slice::from_ref(&report), &mut buf)?,
        Output::Text => buf.extend_from_slice(report.to_text().as_bytes()),
    }
    emit(&args.run.report, &buf)?;
    Ok(report.status.is_complete())
}

fn run_sweep(args: SweepArgs) -> Result<bool> {
    let base = base_config(&args.run);
    let mut spec = SweepSpec {
        strategies: args.strategies,
        fractions: args.fractions,
        depths: args.depths,
        pvc_triple: args.pvc_triple,
        base,
        ..Default::default()
    };
    if !args.workers.is_empty() {
        spec.workers = args.workers;
    }
    if !args.capacities.is_empty() {
        spec.capacities = args.capacities;
    }

    let (g, source) = load_graph(&args.graph)?;
    let rows = bench_sweep(&g, &source, &spec)?;

    let mut buf = Vec::new();
    match args.run.output {
        Output::Json => writeln!(buf, "{}", serde_json::to_string_pretty(&rows)?)?,
        Output::Csv => write_sweep_csv(&rows, &mut buf)?,
        Output::Text => sweep_table(&rows, &mut buf)?,
    }
    emit(&args.run.report, &buf)?;
    Ok(rows.iter().all(|r| r.report.status.is_complete()))
}

fn sweep_table(rows: &[SweepRow], out: &mut impl Write) -> io::Result<()> {
    writeln!(out, "{:<12} {:<9} {:>3} {:>8} {:>6} {:>5} {:>8} {:>12} {:>9}", "instance", "strategy", "w", "capacity", "frac", "depth", "size", "wall_ms", "max_load")?;
    for row in rows {
        let r = &row.report;
        let opt = |x: Option<String>| x.unwrap_or_else(|| "-".into());
        writeln!(
            out,
            "{:<12} {:<9} {:>3} {:>8} {:>6} {:>5} {:>8} {:>12.3} {:>9.3} {}",
            row.instance,
            r.strategy.name(),
            r.workers,
            opt(r.capacity.map(|c| c.to_string())),
            opt(r.threshold_fraction.map(|f| f.to_string())),
            opt(r.depth.map(|d| d.to_string())),
            opt(r.size.map(|s| s.to_string()).or_else(|| r.status.is_complete().then(|| "infeas".into()))),
            r.wall_ms,
            r.load_ratios.iter().copied().fold(0.0, f64::max),
            if row.selected { "*" } else { "" }
        )?;
    }
    Ok(())
}

fn emit(path: &Option<PathBuf>, bytes: &[u8]) -> Result<()> {
    match path {
        Some(p) => fs::write(p, bytes).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(bytes)?;
            stdout.flush()?;
            Ok(())
        }
    }
}
