use std::collections::BTreeSet;
use std::io::{self, Read as _, Write as _};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sptough::structure::{classify_between, classify_with, jump_edges};
use sptough::verify::{self, Fault, VerifyConfig};
use sptough::{
    enum_trees, parse, read_edge_list, realize_stream, serialize, to_dot, DotAnnotations,
    EnumerationConfig, Error, Multigraph, Oracle, SpTree, Toughness, Verdict, VertexId,
};

#[derive(Parser)]
#[command(name = "sptough", version, about = "Toughness of series-parallel graphs")]
struct Cli {
    /// Refuse graphs with more vertices than this (at most 40).
    #[arg(long, global = true, default_value_t = sptough::toughness::DEFAULT_VERTEX_CAP)]
    vertex_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Expr,
    Edgelist,
    Dot,
}

#[derive(clap::Args)]
struct Input {
    /// SP expression, path to a file, or `-` for standard input.
    #[arg(default_value = "-")]
    input: String,

    /// Input syntax; guessed from the text when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,

    /// Source and sink for the sp-tree of an edge list.
    #[arg(long, num_args = 2, value_names = ["U", "V"])]
    terminals: Option<Vec<VertexId>>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the toughness and a tough set.
    Toughness {
        #[command(flatten)]
        input: Input,
        /// List every tough set, one per line.
        #[arg(long)]
        all: bool,
    },
    /// Decide minimal toughness. Exit status 0: minimal, 1: not minimal,
    /// 2: out of scope or not applicable.
    Classify {
        #[command(flatten)]
        input: Input,
    },
    /// Check the structural results against the oracle on every small graph.
    Verify {
        #[arg(long, default_value_t = 6)]
        max_leaves: usize,
        /// Comma-separated suite names.
        #[arg(long, value_delimiter = ',')]
        suite: Option<Vec<String>>,
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Write the graph as DOT.
    Render {
        #[command(flatten)]
        input: Input,
        /// Fill the witness tough set.
        #[arg(long)]
        tough_set: bool,
        /// Highlight jump-edges.
        #[arg(long)]
        jump_edges: bool,
    },
    /// Print every canonical sp-tree up to a leaf budget.
    Enumerate {
        #[arg(long)]
        max_leaves: usize,
        /// Skip graphs with parallel edges.
        #[arg(long)]
        simple: bool,
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Expr)]
        format: Format,
    },
}

/// A parsed input: the graph, plus the tree when it came from an expression.
struct Loaded {
    graph: Multigraph,
    tree: Option<SpTree>,
    terminals: Option<(VertexId, VertexId)>,
}

fn read_text(input: &str) -> Result<String, String> {
    if input == "-" {
        let mut text = String::new();
        io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
        return Ok(text);
    }
    if Path::new(input).is_file() {
        return std::fs::read_to_string(input).map_err(|e| format!("reading {input}: {e}"));
    }
    Ok(input.to_string())
}

fn looks_like_expr(text: &str) -> bool {
    text.trim_start().starts_with(['e', 'S', 'P'])
}

fn load(input: &Input) -> Result<Loaded, String> {
    let text = read_text(&input.input)?;
    let format = input.format.unwrap_or(if looks_like_expr(&text) {
        Format::Expr
    } else {
        Format::Edgelist
    });
    let terminals = input.terminals.as_ref().map(|t| (t[0], t[1]));
    match format {
        Format::Expr => {
            let tree = parse(&text).map_err(|e| e.to_string())?;
            let lg = tree.realize().map_err(|e| e.to_string())?;
            Ok(Loaded {
                graph: lg.graph,
                tree: Some(tree),
                terminals: terminals.or(Some((lg.s, lg.t))),
            })
        }
        Format::Edgelist => Ok(Loaded {
            graph: read_edge_list(&text).map_err(|e| e.to_string())?,
            tree: None,
            terminals,
        }),
        Format::Dot => Err("DOT is an output format only".into()),
    }
}

fn fmt_set(set: &[VertexId]) -> String {
    let items: Vec<String> = set.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

fn cmd_toughness(oracle: &Oracle, input: &Input, all: bool) -> Result<ExitCode, String> {
    let loaded = load(input)?;
    let tau = oracle.toughness(&loaded.graph).map_err(|e| e.to_string())?;
    match (&tau.value, &tau.witness) {
        (Toughness::Finite(_), Some(w)) => println!("{}, tough set {}", tau.value, fmt_set(w)),
        _ => println!("{}", tau.value),
    }
    if all && tau.value.is_finite() {
        for set in oracle.tough_sets(&loaded.graph).map_err(|e| e.to_string())? {
            println!("{}", fmt_set(&set));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_classify(oracle: &Oracle, input: &Input) -> Result<ExitCode, String> {
    let loaded = load(input)?;
    let report = match (loaded.tree.is_some(), loaded.terminals) {
        (false, Some((s, t))) => classify_between(&loaded.graph, s, t, oracle),
        _ => classify_with(&loaded.graph, oracle),
    }
    .map_err(|e| e.to_string())?;
    println!("{report}");
    Ok(match report.verdict {
        Verdict::MinimallyTough => ExitCode::SUCCESS,
        Verdict::NotMinimallyTough => ExitCode::from(1),
        Verdict::OutOfScope | Verdict::NotApplicable => ExitCode::from(2),
    })
}

fn cmd_verify(
    oracle: Oracle,
    max_leaves: usize,
    suites: Option<Vec<String>>,
    fault: bool,
) -> Result<ExitCode, String> {
    let config = VerifyConfig {
        suites,
        oracle,
        fault: fault.then_some(Fault::InvertJumpEdges),
        ..VerifyConfig::new(max_leaves)
    };
    let report = verify::run(&config).map_err(|e| e.to_string())?;
    print!("{}", report.summary());
    eprintln!(
        "{} simple graphs, {} trees with multigraphs",
        report.graphs, report.trees
    );
    for (suite, time) in &report.timings {
        eprintln!("{suite}: {:.3}s", time.as_secs_f64());
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_render(
    oracle: &Oracle,
    input: &Input,
    tough_set: bool,
    show_jumps: bool,
) -> Result<ExitCode, String> {
    let loaded = load(input)?;
    let mut ann = DotAnnotations {
        terminals: loaded.terminals,
        ..DotAnnotations::default()
    };
    if tough_set {
        let tau = oracle.toughness(&loaded.graph).map_err(|e| e.to_string())?;
        ann.filled = tau.witness.unwrap_or_default().into_iter().collect();
        ann.label = Some(format!("tau = {}", tau.value));
    }
    if show_jumps {
        ann.marked_edges = jump_edge_ids(&loaded)?;
    }
    print!("{}", to_dot(&loaded.graph, &ann));
    Ok(ExitCode::SUCCESS)
}

/// Jump-edges of an expression input, by edge id of its realization.
fn jump_edge_ids(loaded: &Loaded) -> Result<BTreeSet<usize>, String> {
    let Some(tree) = &loaded.tree else {
        return Err("--jump-edges needs an SP expression input".into());
    };
    let tree = tree.canonicalize().map_err(|e| e.to_string())?;
    let lg = tree.realize().map_err(|e| e.to_string())?;
    // canonical order may renumber internal vertices; the terminals stay 0 and 1
    let map = sptough::iso::find(&lg.graph, &loaded.graph, &[(lg.s, 0), (lg.t, 1)])
        .ok_or("internal error: canonical tree changed the graph")?;
    let to_input = |v: VertexId| map.iter().find(|(a, _)| *a == v).map(|(_, b)| *b);
    let mut out = BTreeSet::new();
    for leaf in jump_edges(&tree).map_err(|e| e.to_string())? {
        let e = lg.graph.edge(lg.leaf_to_edge[&leaf]);
        let (a, b) = (to_input(e.a), to_input(e.b));
        if let Some(id) = loaded
            .graph
            .edges()
            .iter()
            .position(|f| Some(f.a.min(f.b)) == a.min(b) && Some(f.a.max(f.b)) == a.max(b))
        {
            out.insert(id);
        }
    }
    Ok(out)
}

fn cmd_enumerate(
    max_leaves: usize,
    simple: bool,
    max_vertices: Option<usize>,
    format: Format,
) -> Result<ExitCode, String> {
    let config = EnumerationConfig {
        max_leaves,
        simple_only: simple,
        max_vertices,
    };
    let trees = enum_trees(&config).map_err(|e| e.to_string())?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for (tree, lg) in realize_stream(trees, &config) {
        let text = match format {
            Format::Expr => format!("{}\n", serialize(&tree)),
            Format::Edgelist => {
                let mut s = format!("# {}\n", serialize(&tree));
                for e in lg.graph.edges() {
                    s.push_str(&format!("{} {}\n", e.a, e.b));
                }
                s
            }
            Format::Dot => to_dot(
                &lg.graph,
                &DotAnnotations {
                    terminals: Some((lg.s, lg.t)),
                    label: Some(serialize(&tree)),
                    ..DotAnnotations::default()
                },
            ),
        };
        if out.write_all(text.as_bytes()).is_err() {
            break;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.vertex_cap > sptough::toughness::MAX_VERTEX_CAP {
        eprintln!(
            "error: {}",
            Error::Capacity {
                vertices: cli.vertex_cap,
                cap: sptough::toughness::MAX_VERTEX_CAP
            }
        );
        return ExitCode::from(3);
    }
    let oracle = Oracle::with_cap(cli.vertex_cap);
    let result = match cli.command {
        Command::Toughness { input, all } => cmd_toughness(&oracle, &input, all),
        Command::Classify { input } => cmd_classify(&oracle, &input),
        Command::Verify {
            max_leaves,
            suite,
            inject_fault,
        } => cmd_verify(oracle, max_leaves, suite, inject_fault),
        Command::Render {
            input,
            tough_set,
            jump_edges,
        } => cmd_render(&oracle, &input, tough_set, jump_edges),
        Command::Enumerate {
            max_leaves,
            simple,
            max_vertices,
            format,
        } => cmd_enumerate(max_leaves, simple, max_vertices, format),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}
