//! Command-line driver for the circolor toolkit.
//!
//! Exit codes are machine-consumable: 0 on success, 1 on a negative
//! decision (not colorable, invalid coloring, failed verification), 2 on
//! input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand, ValueEnum};

use circolor::coloring::{check_defective, check_relaxed, Coloring};
use circolor::families::{random_outerplanar, FamilySpec};
use circolor::graph::{find_outer_embedding, OuterEmbedding};
use circolor::io::{
    colored_dot, emit_coloring, emit_graph, instance_document, parse_coloring, parse_graph,
    GraphDocument,
};
use circolor::obft::obft_partition;
use circolor::outerplanar::{color_outerplanar_42_defective, color_outerplanar_52};
use circolor::reductions::{attach_cliques, blowup_compose, gadget_a, subdivide_p4};
use circolor::solver::{decide, min_k, Semantics, SolverConfig};
use circolor::verification::run_all;
use circolor::{families, Graph};

#[derive(Parser)]
#[command(
    name = "circolor",
    version,
    about = "Relaxed and defective 2-distant circular graph coloring toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SemanticsArg {
    Relaxed,
    Defective,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Text,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgorithmArg {
    /// Five colors, relaxed with at most four short edges per vertex.
    Relaxed52,
    /// Four colors, defective with at most two short edges per vertex.
    Defective42,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GadgetArg {
    P4,
    GadgetA,
    Blowup,
    Cliques,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Path,
    Cycle,
    Complete,
    Empty,
    G5,
    H,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a coloring file against a graph file.
    Check {
        graph: PathBuf,
        coloring: PathBuf,
        /// Relaxed semantics with this per-vertex budget.
        #[arg(long)]
        t: Option<usize>,
        /// Defective semantics with this per-vertex budget.
        #[arg(long)]
        d: Option<usize>,
        /// Redundant semantics selector; must agree with --t/--d.
        #[arg(long, value_enum)]
        semantics: Option<SemanticsArg>,
        /// Override the required circular distance from the coloring file.
        #[arg(long)]
        q: Option<usize>,
    },
    /// Decide colorability for a fixed k, or find the minimum k.
    Solve {
        graph: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        t: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long, value_enum)]
        semantics: Option<SemanticsArg>,
        /// Search for the smallest feasible k instead of deciding one.
        #[arg(long)]
        min_k: bool,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Color an outerplanar graph.
    Color {
        graph: PathBuf,
        #[arg(long, value_enum, default_value = "relaxed52")]
        algorithm: AlgorithmArg,
        /// Root vertex (1-based file id); defaults to the first vertex of
        /// the outer-face order.
        #[arg(long)]
        root: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Build the ordered-BFS partition and report its properties.
    Obft {
        graph: PathBuf,
        #[arg(long)]
        root: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
    },
    /// Construct a reduction instance from a graph.
    Gadget {
        kind: GadgetArg,
        graph: PathBuf,
        /// Relaxation parameter for gadget-a (>= 2).
        #[arg(long)]
        t: Option<usize>,
        /// Class size for blowup.
        #[arg(long)]
        p: Option<usize>,
        /// Modulus for cliques (>= 5).
        #[arg(long)]
        k: Option<usize>,
        /// Defect budget for cliques (>= 1).
        #[arg(long)]
        d: Option<usize>,
    },
    /// Emit a named graph family.
    Family {
        kind: FamilyArg,
        /// n for path/cycle/complete/empty/random, m for h; unused for g5.
        size: Option<usize>,
        /// Diagonal keep probability for random (default 0.5).
        #[arg(long)]
        prob: Option<f64>,
        /// Seed for random (default 0).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Run the built-in verification suite and print a pass/fail table.
    VerifyPaper,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn read_graph(path: &Path) -> anyhow::Result<GraphDocument> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read graph file {}", path.display()))?;
    parse_graph(&text).map_err(|e| anyhow!("{}: {e}", path.display()))
}

fn pick_semantics(
    t: Option<usize>,
    d: Option<usize>,
    semantics: Option<SemanticsArg>,
) -> anyhow::Result<(Semantics, usize)> {
    let (sem, bound) = match (t, d) {
        (Some(t), None) => (Semantics::RelaxedStar, t),
        (None, Some(d)) => (Semantics::Defective, d),
        (Some(_), Some(_)) => bail!("--t and --d are mutually exclusive"),
        (None, None) => bail!("provide --t (relaxed) or --d (defective)"),
    };
    if let Some(arg) = semantics {
        let wanted = match arg {
            SemanticsArg::Relaxed => Semantics::RelaxedStar,
            SemanticsArg::Defective => Semantics::Defective,
        };
        if wanted != sem {
            bail!("--semantics disagrees with the bound flag");
        }
    }
    Ok((sem, bound))
}

/// Outer-face order from the document, or a search when it carries none.
fn embedding_for(doc: &GraphDocument) -> Option<OuterEmbedding> {
    doc.embedding.clone().or_else(|| find_outer_embedding(&doc.graph))
}

fn root_for(
    doc_root: Option<usize>,
    emb: &OuterEmbedding,
    g: &Graph,
) -> anyhow::Result<usize> {
    match doc_root {
        None => Ok(emb.order().first().copied().unwrap_or(0)),
        Some(ext) => {
            if ext == 0 || ext > g.vertex_count() {
                bail!("--root {ext} out of range 1..={}", g.vertex_count());
            }
            Ok(ext - 1)
        }
    }
}

fn dispatch(command: Command) -> anyhow::Result<bool> {
    match command {
        Command::Check { graph, coloring, t, d, semantics, q } => {
            let doc = read_graph(&graph)?;
            let text = fs::read_to_string(&coloring)
                .with_context(|| format!("cannot read coloring file {}", coloring.display()))?;
            let mut f = parse_coloring(&text).map_err(|e| anyhow!("{}: {e}", coloring.display()))?;
            if let Some(q) = q {
                f = Coloring::new(f.k(), q, f.colors().to_vec())?;
            }
            let (sem, bound) = pick_semantics(t, d, semantics)?;
            let report = match sem {
                Semantics::RelaxedStar => check_relaxed(&doc.graph, &f, bound)?,
                Semantics::Defective => check_defective(&doc.graph, &f, bound)?,
            };
            print!("{}", emit_coloring(&f, &report));
            Ok(report.valid)
        }
        Command::Solve { graph, k, t, d, semantics, min_k: want_min, node_limit } => {
            let doc = read_graph(&graph)?;
            let (sem, bound) = pick_semantics(t, d, semantics)?;
            if want_min {
                let k = min_k(&doc.graph, sem, bound)?;
                println!("min_k {k}");
                return Ok(true);
            }
            let k = k.ok_or_else(|| anyhow!("provide --k or --min-k"))?;
            let mut cfg = match sem {
                Semantics::RelaxedStar => SolverConfig::relaxed(k, bound),
                Semantics::Defective => SolverConfig::defective(k, bound),
            };
            if let Some(limit) = node_limit {
                cfg = cfg.with_node_limit(limit);
            }
            match decide(&doc.graph, &cfg)? {
                Some(f) => {
                    let report = match sem {
                        Semantics::RelaxedStar => check_relaxed(&doc.graph, &f, bound)?,
                        Semantics::Defective => check_defective(&doc.graph, &f, bound)?,
                    };
                    print!("{}", emit_coloring(&f, &report));
                    Ok(true)
                }
                None => {
                    println!("s unsatisfiable k={k} bound={bound}");
                    Ok(false)
                }
            }
        }
        Command::Color { graph, algorithm, root, format } => {
            let doc = read_graph(&graph)?;
            let Some(emb) = embedding_for(&doc) else {
                println!("s not-outerplanar");
                return Ok(false);
            };
            let r = root_for(root, &emb, &doc.graph)?;
            let (f, report) = match algorithm {
                AlgorithmArg::Relaxed52 => {
                    let f = color_outerplanar_52(&doc.graph, &emb, r)?;
                    let report = check_relaxed(&doc.graph, &f, 4)?;
                    (f, report)
                }
                AlgorithmArg::Defective42 => {
                    let f = color_outerplanar_42_defective(&doc.graph, &emb, r)?;
                    let report = check_defective(&doc.graph, &f, 2)?;
                    (f, report)
                }
            };
            match format {
                FormatArg::Text => print!("{}", emit_coloring(&f, &report)),
                FormatArg::Dot => print!("{}", colored_dot(&doc.graph, &f)),
            }
            Ok(report.valid)
        }
        Command::Obft { graph, root, format } => {
            let doc = read_graph(&graph)?;
            let Some(emb) = embedding_for(&doc) else {
                println!("s not-outerplanar");
                return Ok(false);
            };
            let r = root_for(root, &emb, &doc.graph)?;
            let p = obft_partition(&doc.graph, &emb, r)?;
            let report = p.verify_properties();
            match format {
                FormatArg::Dot => print!("{}", p.to_dot()),
                FormatArg::Text => {
                    for (i, layer) in p.layers().iter().enumerate() {
                        let ids: Vec<String> =
                            layer.iter().map(|&v| (v + 1).to_string()).collect();
                        println!("layer {i}: {}", ids.join(" "));
                    }
                    for &(u, v) in p.tree_edges() {
                        println!("tree {} {}", u + 1, v + 1);
                    }
                    for &(u, v) in p.nontree_edges() {
                        println!("h {} {}", u + 1, v + 1);
                    }
                    for (i, ok) in report.pass.iter().enumerate() {
                        let offenders: Vec<String> = report.offenders[i]
                            .iter()
                            .map(|&(u, v)| format!("({},{})", u + 1, v + 1))
                            .collect();
                        println!(
                            "property {} {}{}",
                            i + 1,
                            if *ok { "pass" } else { "fail" },
                            if offenders.is_empty() {
                                String::new()
                            } else {
                                format!(" {}", offenders.join(" "))
                            }
                        );
                    }
                }
            }
            Ok(report.all_pass())
        }
        Command::Gadget { kind, graph, t, p, k, d } => {
            let doc = read_graph(&graph)?;
            let inst = match kind {
                GadgetArg::P4 => subdivide_p4(&doc.graph),
                GadgetArg::GadgetA => {
                    let t = t.ok_or_else(|| anyhow!("gadget-a requires --t"))?;
                    gadget_a(&doc.graph, t)?
                }
                GadgetArg::Blowup => {
                    let p = p.ok_or_else(|| anyhow!("blowup requires --p"))?;
                    blowup_compose(&doc.graph, p)?
                }
                GadgetArg::Cliques => {
                    let k = k.ok_or_else(|| anyhow!("cliques requires --k"))?;
                    let d = d.ok_or_else(|| anyhow!("cliques requires --d"))?;
                    attach_cliques(&doc.graph, k, d)?
                }
            };
            print!("{}", emit_graph(&instance_document(&inst)));
            Ok(true)
        }
        Command::Family { kind, size, prob, seed } => {
            let need = |size: Option<usize>| {
                size.ok_or_else(|| anyhow!("this family requires a size argument"))
            };
            let doc = match kind {
                FamilyArg::Random => {
                    let n = need(size)?;
                    let (g, emb) =
                        random_outerplanar(n, prob.unwrap_or(0.5), seed.unwrap_or(0))?;
                    GraphDocument { graph: g, embedding: Some(emb), names: None, comments: vec![] }
                }
                other => {
                    let spec = match other {
                        FamilyArg::Path => FamilySpec::Path { n: need(size)? },
                        FamilyArg::Cycle => FamilySpec::Cycle { n: need(size)? },
                        FamilyArg::Complete => FamilySpec::Complete { n: need(size)? },
                        FamilyArg::Empty => FamilySpec::Empty { n: need(size)? },
                        FamilyArg::G5 => FamilySpec::G5,
                        FamilyArg::H => FamilySpec::H { m: need(size)? },
                        FamilyArg::Random => unreachable!(),
                    };
                    let (g, emb) = spec.build()?;
                    let names = match spec {
                        FamilySpec::G5 => Some(families::g5_vertex_names()),
                        FamilySpec::H { m } => Some(families::h_vertex_names(m)),
                        _ => None,
                    };
                    GraphDocument { graph: g, embedding: emb, names, comments: vec![] }
                }
            };
            print!("{}", emit_graph(&doc));
            Ok(true)
        }
        Command::VerifyPaper => {
            let reports = run_all();
            let mut all = true;
            for report in &reports {
                println!("{}", report.summary_line());
                for detail in &report.details {
                    println!("    {detail}");
                }
                all &= report.passed;
            }
            println!("{}", if all { "all criteria passed" } else { "some criteria failed" });
            Ok(all)
        }
    }
}
