//! Command-line front end for `rdcolor`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the process
//! exit code: 0 computed/true, 1 computed/false, 2 usage error, 3 input error,
//! 4 budget exceeded. Vertex labels on the command line and in every output
//! are the 1-based labels used in graph files.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rdcolor::coloring::{chromatic_index_exact_with_budget, DEFAULT_BUDGET};
use rdcolor::connectivity::{global_edge_connectivity, upper_edge_connectivity};
use rdcolor::rainbow::{
    decide_rd_cubic_with_budget, find_rainbow_cut_exact_with_budget, find_rainbow_cut_fixed_k,
    is_rainbow_disconnected_with, rd_exact_with_budget, RainbowConfig, Verdict,
};
use rdcolor::reduction::{
    build_theorem2_graph, parse_dimacs_cnf, verify_reduction_with_budget, CnfFormula,
    ReductionArtifact,
};
use rdcolor::{generate, parse_graph, serialize_graph, CutCertificate, EdgeColoring, Error, Graph};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "rdcolor",
    version,
    about = "Rainbow disconnection colorings of graphs"
)]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct BudgetArg {
    /// Node budget for exponential searches.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Edge-connectivity bounds: lambda, lambda+, max degree and Vizing's bound.
    Bounds { graph: PathBuf },
    /// Exact rainbow disconnection number with a witness coloring.
    RdExact {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
        /// Write the witness coloring as a colored graph file.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check that a colored graph's coloring is rainbow disconnecting.
    RdCheck {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Find a rainbow s-t cut in a colored graph.
    Cut {
        graph: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        s: u64,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        t: u64,
        /// Use the fixed-palette enumeration with this many colors.
        #[arg(long, conflicts_with = "budget")]
        k: Option<usize>,
        /// Node budget for the exact bipartition search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide rd = 3 or rd = 4 for a 3-edge-connected cubic graph.
    Cubic3 {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Exact chromatic index with a witness coloring.
    Chi {
        graph: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Build the colored graph whose s-t rainbow cuts encode a 3-CNF formula.
    ReduceSat {
        cnf: PathBuf,
        /// Graph output path; a JSON sidecar is written to `<output>.json`.
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Check satisfiability against rainbow cut existence for a 3-CNF formula.
    VerifyReduction {
        cnf: PathBuf,
        #[command(flatten)]
        budget: BudgetArg,
    },
    /// Generate a graph or a random 3-CNF formula.
    Gen {
        kind: GenKind,
        /// Vertex count (variable count for `cnf`).
        #[arg(long)]
        n: Option<usize>,
        /// Clause count for `cnf`.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GenKind {
    Cycle,
    Tree,
    RandomCubic,
    Prism,
    Petersen,
    Complete,
    Cnf,
}

/// Failure of a subcommand, mapped onto an exit code.
#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(i32, Output), Failure>;

/// What a subcommand prints: a text rendering and the equivalent JSON.
struct Output {
    text: String,
    json: Value,
}

/// Runs the CLI on `args` (including the program name) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_USAGE
            } else {
                EXIT_TRUE
            };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    match execute(cli.command) {
        Ok((code, output)) => {
            let written = if cli.json {
                writeln!(out, "{}", output.json)
            } else {
                write!(out, "{}", output.text)
            };
            if written.is_err() {
                return EXIT_INPUT;
            }
            code
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_BUDGET
        }
    }
}

fn execute(command: Command) -> Outcome {
    match command {
        Command::Bounds { graph } => bounds(&read_graph(&graph)?),
        Command::RdExact {
            graph,
            budget,
            output,
        } => rd_exact(&read_graph(&graph)?, budget.budget, output.as_deref()),
        Command::RdCheck { graph, budget } => {
            let (g, c) = read_colored_graph(&graph)?;
            rd_check(&g, &c, budget.budget)
        }
        Command::Cut {
            graph,
            s,
            t,
            k,
            budget,
        } => {
            let (g, c) = read_colored_graph(&graph)?;
            let s = vertex_from_label(&g, s)?;
            let t = vertex_from_label(&g, t)?;
            cut(&g, &c, s, t, k, budget.unwrap_or(DEFAULT_BUDGET))
        }
        Command::Cubic3 { graph, budget } => cubic3(&read_graph(&graph)?, budget.budget),
        Command::Chi { graph, budget } => chi(&read_graph(&graph)?, budget.budget),
        Command::ReduceSat { cnf, output } => reduce_sat(&read_cnf(&cnf)?, output.as_deref()),
        Command::VerifyReduction { cnf, budget } => verify(&read_cnf(&cnf)?, budget.budget),
        Command::Gen {
            kind,
            n,
            m,
            seed,
            output,
        } => gen(kind, n, m, seed, output.as_deref()),
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(parse_graph(&read_text(path)?)?.graph)
}

fn read_colored_graph(path: &Path) -> Result<(Graph, EdgeColoring), Failure> {
    let parsed = parse_graph(&read_text(path)?)?;
    match parsed.coloring {
        Some(c) => Ok((parsed.graph, c)),
        None => Err(Failure::Input(format!(
            "{}: graph has no edge colors",
            path.display()
        ))),
    }
}

fn read_cnf(path: &Path) -> Result<CnfFormula, Failure> {
    Ok(parse_dimacs_cnf(&read_text(path)?)?)
}

fn vertex_from_label(g: &Graph, label: u64) -> Result<usize, Failure> {
    let n = g.vertex_count();
    match usize::try_from(label) {
        Ok(l) if (1..=n).contains(&l) => Ok(l - 1),
        _ => Err(Failure::Input(format!(
            "vertex label {label} is not in 1..={n}"
        ))),
    }
}

fn edge_labels(g: &Graph, edges: &[usize]) -> Vec<[usize; 2]> {
    edges
        .iter()
        .map(|&e| {
            let (a, b) = g.endpoints(e);
            [a + 1, b + 1]
        })
        .collect()
}

fn labels(vertices: &[usize]) -> Vec<usize> {
    vertices.iter().map(|v| v + 1).collect()
}

fn bounds(g: &Graph) -> Outcome {
    let lambda = global_edge_connectivity(g)?;
    let lambda_plus = upper_edge_connectivity(g)?;
    let delta = g.max_degree();
    let chi_upper = delta + 1;
    Ok((
        EXIT_TRUE,
        Output {
            text: format!(
                "lambda={lambda} lambda_plus={lambda_plus} delta={delta} chi_upper<={chi_upper}\n"
            ),
            json: json!({
                "lambda": lambda,
                "lambda_plus": lambda_plus,
                "delta": delta,
                "chi_upper": chi_upper,
            }),
        },
    ))
}

fn rd_exact(g: &Graph, budget: u64, output: Option<&Path>) -> Outcome {
    let r = rd_exact_with_budget(g, budget)?;
    if let Some(path) = output {
        write_text(path, &serialize_graph(g, Some(&r.witness)))?;
    }
    Ok((
        EXIT_TRUE,
        Output {
            text: format!("rd={}\n", r.rd_value),
            json: json!({ "rd": r.rd_value, "coloring": r.witness.colors() }),
        },
    ))
}

fn rd_check(g: &Graph, c: &EdgeColoring, budget: u64) -> Outcome {
    let config = RainbowConfig {
        budget,
        ..RainbowConfig::default()
    };
    Ok(match is_rainbow_disconnected_with(g, c, &config)? {
        Verdict::RainbowDisconnected(cuts) => (
            EXIT_TRUE,
            Output {
                text: format!("rainbow disconnected ({} pairs certified)\n", cuts.len()),
                json: json!({ "rainbow_disconnected": true, "pairs": cuts.len() }),
            },
        ),
        Verdict::NoRainbowCut { s, t } => (
            EXIT_FALSE,
            Output {
                text: format!(
                    "not rainbow disconnected: no rainbow cut between {} and {}\n",
                    s + 1,
                    t + 1
                ),
                json: json!({ "rainbow_disconnected": false, "s": s + 1, "t": t + 1 }),
            },
        ),
    })
}

fn cut(g: &Graph, c: &EdgeColoring, s: usize, t: usize, k: Option<usize>, budget: u64) -> Outcome {
    let found = match k {
        Some(k) => find_rainbow_cut_fixed_k(g, c, s, t, k)?,
        None => find_rainbow_cut_exact_with_budget(g, c, s, t, budget)?,
    };
    Ok(match found {
        Some(cert) => (EXIT_TRUE, cut_output(g, c, &cert)),
        None => (
            EXIT_FALSE,
            Output {
                text: "no rainbow cut\n".to_string(),
                json: json!({ "found": false }),
            },
        ),
    })
}

fn cut_output(g: &Graph, c: &EdgeColoring, cert: &CutCertificate) -> Output {
    let edges = edge_labels(g, &cert.cut_edges);
    let rendered: Vec<String> = edges
        .iter()
        .zip(&cert.cut_edges)
        .map(|([a, b], &e)| format!("{a}-{b}:{}", c.color(e)))
        .collect();
    let colors: Vec<usize> = cert.cut_edges.iter().map(|&e| c.color(e)).collect();
    Output {
        text: format!("rainbow cut: {}\n", rendered.join(" ")),
        json: json!({
            "found": true,
            "edges": edges,
            "colors": colors,
            "s_side": labels(&cert.side_s),
            "t_side": labels(&cert.side_t),
        }),
    }
}

fn cubic3(g: &Graph, budget: u64) -> Outcome {
    let d = decide_rd_cubic_with_budget(g, budget)?;
    let code = if d.rd == 3 { EXIT_TRUE } else { EXIT_FALSE };
    Ok((
        code,
        Output {
            text: format!("rd={}\n", d.rd),
            json: json!({ "rd": d.rd, "coloring": d.witness.colors() }),
        },
    ))
}

fn chi(g: &Graph, budget: u64) -> Outcome {
    let r = chromatic_index_exact_with_budget(g, budget)?;
    Ok((
        EXIT_TRUE,
        Output {
            text: format!("chi_prime={} class={}\n", r.chi_prime, r.vizing_class),
            json: json!({
                "chi_prime": r.chi_prime,
                "class": r.vizing_class,
                "coloring": r.witness.colors(),
            }),
        },
    ))
}

fn sidecar(art: &ReductionArtifact) -> Value {
    let vertex_table: Vec<Value> = art
        .vertex_names
        .iter()
        .enumerate()
        .map(|(v, name)| json!({ "label": v + 1, "name": name }))
        .collect();
    let color_table: Vec<Value> = art
        .color_names
        .iter()
        .enumerate()
        .map(|(c, name)| json!({ "color": c, "name": name }))
        .collect();
    let digest = Sha256::digest(art.formula.to_dimacs().as_bytes());
    json!({
        "vertex_table": vertex_table,
        "color_table": color_table,
        "s": art.s + 1,
        "t": art.t + 1,
        "provenance": {
            "formula_sha256": hex::encode(digest),
            "tool": env!("CARGO_PKG_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
        },
    })
}

fn sidecar_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

fn reduce_sat(f: &CnfFormula, output: Option<&Path>) -> Outcome {
    let art = build_theorem2_graph(f);
    let graph_text = serialize_graph(&art.graph, Some(&art.coloring));
    let meta = sidecar(&art);
    let Some(path) = output else {
        return Ok((
            EXIT_TRUE,
            Output {
                text: graph_text,
                json: meta,
            },
        ));
    };
    let meta_path = sidecar_path(path);
    write_text(path, &graph_text)?;
    let pretty = serde_json::to_string_pretty(&meta).expect("JSON values always serialize");
    write_text(&meta_path, &(pretty + "\n"))?;
    let (v, e, c) = (
        art.graph.vertex_count(),
        art.graph.edge_count(),
        art.coloring.color_count(),
    );
    Ok((
        EXIT_TRUE,
        Output {
            text: format!(
                "wrote {} ({v} vertices, {e} edges, {c} colors) and {}\n",
                path.display(),
                meta_path.display()
            ),
            json: json!({
                "graph": path.display().to_string(),
                "sidecar": meta_path.display().to_string(),
                "vertices": v,
                "edges": e,
                "colors": c,
            }),
        },
    ))
}

fn verify(f: &CnfFormula, budget: u64) -> Outcome {
    let r = verify_reduction_with_budget(f, budget)?;
    let equivalent = r.equivalent();
    let code = if equivalent { EXIT_TRUE } else { EXIT_FALSE };
    let assignment = r.assignment.as_ref().map(|a| a.values().to_vec());
    let recovered = r.assignment_from_cut.as_ref().map(|a| a.values().to_vec());
    Ok((
        code,
        Output {
            text: format!(
                "satisfiable={} cut_exists={} equivalent={equivalent}\n",
                r.satisfiable, r.cut_exists
            ),
            json: json!({
                "variables": r.variables,
                "clauses": r.clauses,
                "vertices": r.vertices,
                "edges": r.edges,
                "colors": r.colors,
                "satisfiable": r.satisfiable,
                "cut_exists": r.cut_exists,
                "equivalent": equivalent,
                "assignment": assignment,
                "assignment_from_cut": recovered,
            }),
        },
    ))
}

fn require(value: Option<usize>, flag: &str, kind: GenKind) -> Result<usize, Failure> {
    value.ok_or_else(|| Failure::Input(format!("gen {kind:?} needs --{flag}")))
}

fn gen(
    kind: GenKind,
    n: Option<usize>,
    m: Option<usize>,
    seed: u64,
    output: Option<&Path>,
) -> Outcome {
    let text = match kind {
        GenKind::Cnf => {
            let f = generate::random_cnf(require(n, "n", kind)?, require(m, "m", kind)?, seed)?;
            f.to_dimacs()
        }
        _ => {
            let g = match kind {
                GenKind::Cycle => generate::cycle(require(n, "n", kind)?)?,
                GenKind::Tree => generate::random_tree(require(n, "n", kind)?, seed)?,
                GenKind::RandomCubic => generate::random_cubic(require(n, "n", kind)?, seed)?,
                GenKind::Prism => {
                    let n = require(n, "n", kind)?;
                    if n % 2 != 0 {
                        return Err(Failure::Input(format!(
                            "prism needs an even vertex count, got {n}"
                        )));
                    }
                    generate::prism(n / 2)?
                }
                GenKind::Petersen => generate::petersen(),
                GenKind::Complete => generate::complete(require(n, "n", kind)?)?,
                GenKind::Cnf => unreachable!(),
            };
            serialize_graph(&g, None)
        }
    };
    if let Some(path) = output {
        write_text(path, &text)?;
        return Ok((
            EXIT_TRUE,
            Output {
                text: String::new(),
                json: json!({ "written": path.display().to_string() }),
            },
        ));
    }
    Ok((
        EXIT_TRUE,
        Output {
            json: json!({ "text": text }),
            text,
        },
    ))
}
