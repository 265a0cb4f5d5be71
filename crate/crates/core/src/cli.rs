//! Command-line front end. Each run prints JSON lines on stdout; diagnostics go
//! to stderr.
//!
//! Exit status: 0 success or valid set, 1 invalid set (`verify`), 2 input
//! error, 3 bound violation (`check-theorem`).

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::constructive::{theorem1_per_component, theorem1_set};
use crate::edgelist::{read_edge_list, write_edge_list};
use crate::error::{Error, Result};
use crate::generators::{build_complete, build_cycle, build_extremal, build_path, gen_random_connected};
use crate::graph::{Graph, VertexSet};
use crate::isolation::{iota_oracle_with_cap, iota_solve, verify_isolating, DEFAULT_ORACLE_CAP};
use crate::report::{RunReport, Stats};
use crate::sweep::{run_sweep, SweepConfig, SweepMode};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_VIOLATION: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "clique-iso", version, about = "Minimum k-clique isolating sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact iota(G, k) with an optimal set.
    Solve {
        path: PathBuf,
        #[arg(long)]
        k: usize,
        /// Use the exhaustive reference solver instead of branch-and-bound.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
    /// Constructive set of size at most floor(n/(k+1)), with its branch trace.
    Bound {
        path: PathBuf,
        #[arg(long)]
        k: usize,
        /// Handle each component separately (needed for disconnected input).
        #[arg(long)]
        per_component: bool,
    },
    /// Check whether a vertex set isolates all k-cliques.
    Verify {
        path: PathBuf,
        /// Vertices separated by spaces or commas; empty for the empty set.
        #[arg(default_value = "")]
        set: String,
        #[arg(long)]
        k: usize,
    },
    /// Write a generated graph as an edge list.
    Gen {
        kind: GenKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        seed: Option<u64>,
        /// Output file; the edge list goes to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sweep generated graphs and check the bound and the construction.
    CheckTheorem {
        mode: ModeArg,
        #[arg(long)]
        n_max: usize,
        #[arg(long)]
        k_max: usize,
        /// Random mode: number of graphs.
        #[arg(long)]
        count: Option<usize>,
        /// Random mode: smallest vertex count (default 1).
        #[arg(long, default_value_t = 1)]
        n_min: usize,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        oracle_cap: usize,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum GenKind {
    Extremal,
    Path,
    Cycle,
    Complete,
    Random,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    Exhaustive,
    Random,
}

/// Runs the CLI against the process's stdout and stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

fn emit(out: &mut dyn Write, report: &RunReport) -> Result<()> {
    writeln!(out, "{}", report.to_json_line())?;
    Ok(())
}

fn describe(path: &Path) -> Option<String> {
    Some(path.display().to_string())
}

fn parse_set_literal(literal: &str, n: usize) -> Result<VertexSet> {
    let members = literal
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidParameter(format!("malformed set literal: {t:?} is not a vertex")))
        })
        .collect::<Result<Vec<_>>>()?;
    VertexSet::from_vertices(n, members)
}

fn dispatch(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Solve { path, k, oracle, oracle_cap } => {
            let g = read_edge_list(&path)?;
            let r = if oracle { iota_oracle_with_cap(&g, k, oracle_cap)? } else { iota_solve(&g, k)? };
            let mut report = RunReport::new("solve");
            report.input = describe(&path);
            report.k = Some(k);
            report.n = Some(g.n());
            report.iota = Some(r.iota);
            report.set = Some(r.optimal_set.to_vec());
            report.valid = Some(verify_isolating(&g, k, &r.optimal_set)?.valid);
            report.stats = Some(Stats { nodes_expanded: r.nodes_expanded });
            emit(out, &report)?;
            Ok(EXIT_OK)
        }
        Command::Bound { path, k, per_component } => {
            let g = read_edge_list(&path)?;
            let mut report = RunReport::new("bound");
            report.input = describe(&path);
            report.k = Some(k);
            report.n = Some(g.n());
            report.bound = Some(g.n() / (k + 1));
            if per_component {
                let parts = theorem1_per_component(&g, k)?;
                let mut set = VertexSet::new(g.n());
                for p in &parts {
                    set.union_with(p.set());
                }
                report.valid = Some(verify_isolating(&g, k, &set)?.valid);
                report.size = Some(set.len());
                report.set = Some(set.to_vec());
                report.components = Some(parts);
                emit(out, &report)?;
                return Ok(EXIT_OK);
            }
            match theorem1_set(&g, k) {
                Ok(r) => {
                    report.valid = Some(verify_isolating(&g, k, &r.set)?.valid);
                    report.size = Some(r.set.len());
                    report.set = Some(r.set.to_vec());
                    report.trace = Some(r.trace);
                    emit(out, &report)?;
                    Ok(EXIT_OK)
                }
                Err(Error::Exceptional(kind)) => {
                    let msg = format!("exceptional: {kind}");
                    writeln!(err, "{msg}; the bound does not apply")?;
                    report.exception = Some(kind);
                    report.error = Some(msg);
                    emit(out, &report)?;
                    Ok(EXIT_INPUT)
                }
                Err(Error::Disconnected) => {
                    let msg = "graph is not connected; rerun with --per-component".to_string();
                    writeln!(err, "{msg}")?;
                    report.error = Some(msg);
                    emit(out, &report)?;
                    Ok(EXIT_INPUT)
                }
                Err(e) => Err(e),
            }
        }
        Command::Verify { path, set, k } => {
            let g = read_edge_list(&path)?;
            let d = parse_set_literal(&set, g.n())?;
            let cert = verify_isolating(&g, k, &d)?;
            let mut report = RunReport::new("verify");
            report.input = describe(&path);
            report.k = Some(k);
            report.n = Some(g.n());
            report.set = Some(d.to_vec());
            report.size = Some(d.len());
            report.valid = Some(cert.valid);
            report.witness = cert.witness.as_ref().map(VertexSet::to_vec);
            emit(out, &report)?;
            Ok(if cert.valid { EXIT_OK } else { EXIT_INVALID })
        }
        Command::Gen { kind, n, k, p, seed, out: out_path } => {
            let missing = |flag: &str| Error::InvalidParameter(format!("{kind:?} generator needs --{flag}"));
            let g: Graph = match kind {
                GenKind::Extremal => build_extremal(n, k.ok_or_else(|| missing("k"))?)?,
                GenKind::Path => build_path(n)?,
                GenKind::Cycle => build_cycle(n)?,
                GenKind::Complete => build_complete(n),
                GenKind::Random => {
                    let p = p.ok_or_else(|| missing("p"))?;
                    gen_random_connected(n, p, seed.ok_or_else(|| missing("seed"))?)?
                },
            };
            let text = write_edge_list(&g);
            match out_path {
                Some(path) => {
                    std::fs::write(&path, &text)?;
                    let mut report = RunReport::new("gen");
                    report.input = describe(&path);
                    report.n = Some(g.n());
                    report.k = k;
                    report.size = Some(g.edge_count());
                    emit(out, &report)?;
                }
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
        Command::CheckTheorem { mode, n_max, k_max, count, n_min, seed, oracle_cap } => {
            let mode = match mode {
                ModeArg::Exhaustive => SweepMode::Exhaustive { n_max },
                ModeArg::Random => SweepMode::Random {
                    count: count.ok_or_else(|| Error::InvalidParameter("random mode needs --count".into()))?,
                    n_min,
                    n_max,
                    seed: seed.ok_or_else(|| Error::InvalidParameter("random mode needs --seed".into()))?,
                },
            };
            let mut cfg = SweepConfig::new(mode, k_max);
            cfg.oracle_cap = oracle_cap;
            let (summary, violations) = run_sweep(&cfg)?;
            for v in violations {
                let mut report = RunReport::new("check-theorem");
                report.n = Some(v.n);
                report.k = Some(v.k);
                report.violation = Some(v);
                emit(out, &report)?;
            }
            let failed = summary.violations > 0;
            let mut report = RunReport::new("check-theorem");
            report.input = Some(match mode {
                SweepMode::Exhaustive { n_max } => format!("exhaustive n<={n_max}"),
                SweepMode::Random { count, n_min, n_max, seed } => {
                    format!("random count={count} n={n_min}..={n_max} seed={seed}")
                }
            });
            report.k = Some(k_max);
            report.valid = Some(!failed);
            report.sweep = Some(summary);
            emit(out, &report)?;
            Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
        }
    }
}
