//! Command-line interface.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 search budget exhausted.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::construct::{
    cycle_cycle_star_coloring, cycle_family, cycle_star_coloring, grid2_star_coloring, grid_d_star_coloring,
    hypercube_star_coloring, path_cycle_star_coloring, path_family, path_star_coloring,
    product_star_coloring, toroidal_star_coloring, Colored, ConstructError,
};
use crate::graph::{
    cycle_graph, grid_graph, hypercube, path_cycle_graph, path_graph, toroidal_graph, FactorKind, Graph,
};
use crate::io::{self as fmt_io, ColoringFile, FamilyFile};
use crate::solve::{find_compatible_family, star_chromatic_index_exact, SearchLimits, SolveStatus};
use crate::tables;
use crate::verify::{verify_compatible_family, verify_star, VerificationReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser)]
#[command(
    name = "starlit",
    version,
    about = "Star edge colorings of Cartesian products of paths and cycles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a graph as JSON.
    Gen {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Build a star edge coloring with the matching construction.
    Color {
        #[command(flatten)]
        target: TargetArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Check a coloring (or a family with --family) against a graph.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Read the second file as a compatible family.
        #[arg(long)]
        family: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Compute the star chromatic index by exhaustive search.
    Exact {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, default_value_t = 16)]
        max_colors: usize,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        common: Common,
    },
    /// Emit a compatible family: constructed for paths and cycles, or
    /// searched for when --k is given.
    Family {
        #[command(flatten)]
        target: TargetArgs,
        /// Number of members.
        #[arg(long, default_value_t = 2)]
        t: usize,
        /// Palette size to search with.
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        budget: Budget,
        #[command(flatten)]
        common: Common,
    },
    /// Reproduce the table of exact values and bounds as CSV.
    Tables {
        #[command(flatten)]
        common: Common,
    },
    /// Render a graph, optionally colored, as DOT.
    Export {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct TargetArgs {
    /// One of path, cycle, grid, hypercube, torus, path-cycle, cycle-cycle,
    /// product.
    family: Option<String>,
    /// Family parameters; for `product`, the files G, fG, H, fH.
    params: Vec<String>,
    /// Read the graph from a JSON file instead (`-` for stdin).
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
}

#[derive(Args)]
struct Common {
    #[arg(long, value_enum)]
    format: Option<Format>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    threads: Option<usize>,
    /// Reserved; every algorithm here is deterministic.
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct Budget {
    #[arg(long)]
    budget_nodes: Option<u64>,
    #[arg(long)]
    budget_seconds: Option<f64>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

enum Failure {
    Usage(String),
    Verification(String),
    Budget(String),
}

impl From<ConstructError> for Failure {
    fn from(e: ConstructError) -> Self {
        match e {
            ConstructError::Verification { .. } => Failure::Verification(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

/// A graph named on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
enum Target {
    Path(usize),
    Cycle(usize),
    Grid(Vec<usize>),
    Hypercube(usize),
    Torus(Vec<usize>),
    PathCycle(usize, usize),
}

impl Target {
    fn parse(family: &str, params: &[String]) -> Result<Self, Failure> {
        let nums = params
            .iter()
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| usage(format!("not a number: {p}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let arity = |n: usize| {
            if nums.len() == n {
                Ok(())
            } else {
                Err(usage(format!(
                    "{family} takes {n} parameter(s), got {}",
                    nums.len()
                )))
            }
        };
        let at_least = |n: usize| {
            if nums.len() >= n {
                Ok(())
            } else {
                Err(usage(format!("{family} takes at least {n} parameter(s)")))
            }
        };
        match family {
            "path" => arity(1).map(|_| Target::Path(nums[0])),
            "cycle" => arity(1).map(|_| Target::Cycle(nums[0])),
            "grid" => at_least(1).map(|_| Target::Grid(nums)),
            "hypercube" => arity(1).map(|_| Target::Hypercube(nums[0])),
            "torus" | "toroidal" => at_least(1).map(|_| Target::Torus(nums)),
            "cycle-cycle" => arity(2).map(|_| Target::Torus(nums)),
            "path-cycle" => arity(2).map(|_| Target::PathCycle(nums[0], nums[1])),
            _ => Err(usage(format!("unknown graph family `{family}`"))),
        }
    }

    /// Recovers the family from a graph's factor list.
    fn from_graph(g: &Graph) -> Option<Self> {
        let factors = g.label().factors();
        let kinds: Vec<FactorKind> = factors.iter().map(|f| f.kind).collect();
        let lens: Vec<usize> = factors.iter().map(|f| f.len).collect();
        let all = |k: FactorKind| kinds.iter().all(|&x| x == k);
        match kinds[..] {
            [FactorKind::Path] => Some(Target::Path(lens[0])),
            [FactorKind::Cycle] => Some(Target::Cycle(lens[0])),
            [FactorKind::Path, FactorKind::Cycle] => Some(Target::PathCycle(lens[0], lens[1])),
            _ if all(FactorKind::Path) && lens.iter().all(|&l| l == 2) && lens.len() >= 3 => {
                Some(Target::Hypercube(lens.len()))
            }
            _ if all(FactorKind::Path) => Some(Target::Grid(lens)),
            _ if all(FactorKind::Cycle) => Some(Target::Torus(lens)),
            _ => None,
        }
    }

    fn graph(&self) -> Result<Graph, Failure> {
        let g = match self {
            Target::Path(n) => path_graph(*n),
            Target::Cycle(n) => cycle_graph(*n),
            Target::Grid(dims) if dims.len() == 1 => path_graph(dims[0]),
            Target::Grid(dims) => grid_graph(dims),
            Target::Hypercube(d) => hypercube(*d),
            Target::Torus(dims) if dims.len() == 1 => cycle_graph(dims[0]),
            Target::Torus(dims) => toroidal_graph(dims),
            Target::PathCycle(m, n) => path_cycle_graph(*m, *n),
        };
        g.map_err(usage)
    }

    fn coloring(&self) -> Result<Colored, Failure> {
        let c = match self {
            Target::Path(n) => path_star_coloring(*n),
            Target::Cycle(n) => cycle_star_coloring(*n),
            Target::Grid(dims) => match dims[..] {
                [n] => path_star_coloring(n),
                [m, n] => grid2_star_coloring(m, n),
                _ => grid_d_star_coloring(dims),
            },
            Target::Hypercube(d) => hypercube_star_coloring(*d),
            Target::Torus(dims) => match dims[..] {
                [n] => cycle_star_coloring(n),
                [m, n] => cycle_cycle_star_coloring(m, n),
                _ => toroidal_star_coloring(dims),
            },
            Target::PathCycle(m, n) => path_cycle_star_coloring(*m, *n),
        };
        Ok(c?)
    }
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(usage)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
    }
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    fmt_io::graph_from_json(&read_input(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// The graph a command refers to, plus its family when known.
fn resolve(args: &TargetArgs) -> Result<(Graph, Option<Target>), Failure> {
    match (&args.graph, &args.family) {
        (Some(path), _) => {
            let g = read_graph(path)?;
            let t = Target::from_graph(&g);
            Ok((g, t))
        }
        (None, Some(family)) => {
            let t = Target::parse(family, &args.params)?;
            Ok((t.graph()?, Some(t)))
        }
        (None, None) => Err(usage("name a graph family or pass --graph")),
    }
}

fn limits(common: &Common, budget: &Budget, max_colors: usize) -> Result<SearchLimits, Failure> {
    let mut l = SearchLimits::default().with_max_colors(max_colors);
    if let Some(n) = budget.budget_nodes {
        l = l.with_node_budget(n);
    }
    if let Some(s) = budget.budget_seconds {
        let d = Duration::try_from_secs_f64(s).map_err(|_| usage(format!("bad --budget-seconds {s}")))?;
        l = l.with_time_budget(d);
    }
    if let Some(t) = common.threads {
        l = l.with_threads(t);
    }
    Ok(l)
}

fn emit(common: &Common, out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display()))),
        None => out.write_all(text.as_bytes()).map_err(usage),
    }
}

fn with_newline(mut s: String) -> String {
    s.push('\n');
    s
}

fn report_json(report: &VerificationReport) -> String {
    serde_json::to_string(report).expect("report serializes")
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Gen { target, common } => {
            let (g, _) = resolve(&target)?;
            let text = match common.format {
                Some(Format::Dot) => fmt_io::to_dot(&g, None),
                _ => with_newline(fmt_io::graph_to_json(&g)),
            };
            emit(&common, out, &text)
        }
        Command::Color { target, common } => {
            let built = if target.family.as_deref() == Some("product") {
                color_product(&target.params)?
            } else {
                let (g, t) = resolve(&target)?;
                let t = t.ok_or_else(|| usage("no construction for this graph's factor structure"))?;
                let built = t.coloring()?;
                if built.graph != g {
                    return Err(usage("graph file is not in canonical order for its factors"));
                }
                built
            };
            if let Some(note) = &built.note {
                let _ = writeln!(err, "note: {note}");
            }
            let text = match common.format {
                Some(Format::Dot) => fmt_io::to_dot(&built.graph, Some(&built.coloring)),
                _ => with_newline(fmt_io::coloring_to_json(&built.coloring)),
            };
            emit(&common, out, &text)
        }
        Command::Verify {
            graph,
            coloring,
            family,
            common,
        } => {
            let g = read_graph(&graph)?;
            let text = read_input(&coloring)?;
            let bad = |e: &dyn std::fmt::Display| usage(format!("{}: {e}", coloring.display()));
            let report = if family {
                let fam = fmt_io::family_from_json(&g, &text).map_err(|e| bad(&e))?;
                verify_compatible_family(&g, &fam)
            } else {
                let c = fmt_io::coloring_from_json(&g, &text).map_err(|e| bad(&e))?;
                verify_star(&g, &c)
            }
            .map_err(|e| bad(&e))?;
            emit(&common, out, &with_newline(report_json(&report)))?;
            if report.ok {
                Ok(())
            } else {
                let witness = serde_json::to_string(&report.witness).expect("witness serializes");
                Err(Failure::Verification(witness))
            }
        }
        Command::Exact {
            target,
            max_colors,
            budget,
            common,
        } => {
            let (g, _) = resolve(&target)?;
            let r = star_chromatic_index_exact(&g, &limits(&common, &budget, max_colors)?);
            let text = if common.format == Some(Format::Json) {
                let v = json!({
                    "status": r.status,
                    "value": r.value,
                    "nodes_explored": r.nodes_explored,
                    "coloring": r.witness.as_ref().map(ColoringFile::from_coloring),
                });
                with_newline(v.to_string())
            } else {
                match r.value {
                    Some(v) => format!("{v}\n"),
                    None => format!("none within {max_colors} colors\n"),
                }
            };
            match r.status {
                SolveStatus::BudgetExhausted => Err(Failure::Budget(format!(
                    "search budget exhausted after {} nodes",
                    r.nodes_explored
                ))),
                _ => emit(&common, out, &text),
            }
        }
        Command::Family {
            target,
            t,
            k,
            budget,
            common,
        } => {
            let (g, kind) = resolve(&target)?;
            let (status, fam, nodes) = match k {
                Some(k) => {
                    let r = find_compatible_family(&g, k, t, &limits(&common, &budget, k)?);
                    (r.status, r.witness, Some(r.nodes_explored))
                }
                None => {
                    let built = match kind {
                        Some(Target::Path(n)) => path_family(n, t)?,
                        Some(Target::Cycle(n)) => cycle_family(n, t)?,
                        _ => {
                            return Err(usage(
                                "constructed families exist for paths and cycles; pass --k to search",
                            ))
                        }
                    };
                    (SolveStatus::Feasible, Some(built.family), None)
                }
            };
            if status == SolveStatus::BudgetExhausted {
                return Err(Failure::Budget(format!(
                    "search budget exhausted after {} nodes",
                    nodes.unwrap_or(0)
                )));
            }
            let verification = match &fam {
                Some(f) => Some(verify_compatible_family(&g, f).map_err(usage)?),
                None => None,
            };
            let v = json!({
                "status": status,
                "k": fam.as_ref().map_or(k.unwrap_or(0), |f| f.k()),
                "t": t,
                "nodes_explored": nodes,
                "family": fam.as_ref().map(FamilyFile::from_family),
                "verification": verification,
            });
            emit(&common, out, &with_newline(v.to_string()))
        }
        Command::Tables { common } => {
            if matches!(common.format, Some(Format::Json | Format::Dot)) {
                return Err(usage("tables only supports --format csv"));
            }
            let rows = tables::reproduce()?;
            emit(&common, out, &tables::to_csv(&rows))
        }
        Command::Export {
            graph,
            coloring,
            common,
        } => {
            let g = read_graph(&graph)?;
            let c = match &coloring {
                Some(p) => Some(
                    fmt_io::coloring_from_json(&g, &read_input(p)?)
                        .map_err(|e| usage(format!("{}: {e}", p.display())))?,
                ),
                None => None,
            };
            let text = match common.format {
                Some(Format::Json) => with_newline(fmt_io::graph_to_json(&g)),
                _ => fmt_io::to_dot(&g, c.as_ref()),
            };
            emit(&common, out, &text)
        }
    }
}

fn color_product(params: &[String]) -> Result<Colored, Failure> {
    let [g, fg, h, fh] = params else {
        return Err(usage("product takes four files: G fG H fH"));
    };
    let g_graph = read_graph(Path::new(g))?;
    let h_graph = read_graph(Path::new(h))?;
    let f_g = fmt_io::coloring_from_json(&g_graph, &read_input(Path::new(fg))?).map_err(usage)?;
    let f_h = fmt_io::coloring_from_json(&h_graph, &read_input(Path::new(fh))?).map_err(usage)?;
    Ok(product_star_coloring(&g_graph, &f_g, &h_graph, &f_h)?)
}

/// Runs the CLI on `args` (program name first), writing to the given
/// streams, and returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Verification(witness)) => {
            let _ = writeln!(err, "verification failed: {witness}");
            EXIT_VERIFY
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "{msg}");
            EXIT_BUDGET
        }
    }
}

/// Runs the CLI against the process's standard streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let (stdout, stderr) = (io::stdout(), io::stderr());
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    run_with(args, &mut out, &mut err)
}
