use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use polyprod::classify::{
    classify_kronecker_factor_with, classify_product_with, is_3_polytope, ClassifyOptions, Verdict,
};
use polyprod::construct::{enumerate_plans_with_cap, sample_plans, AugmentationPlan};
use polyprod::harness::{census, export_embedding_svg, read_graphs, to_edge_list, to_graph6, CensusMode, InputFormat};
use polyprod::planar::{enumerate_embeddings, planar_embedding};
use polyprod::products::{kronecker, make_family, product, FamilySpec, ProductKind};
use polyprod::Graph;

// stdout writes ignore errors so that piping into `head` is not a panic
macro_rules! out {
    ($($t:tt)*) => {{
        let _ = write!(std::io::stdout(), $($t)*);
    }};
}

macro_rules! outln {
    () => {{
        let _ = writeln!(std::io::stdout());
    }};
    ($($t:tt)*) => {{
        let _ = writeln!(std::io::stdout(), $($t)*);
    }};
}

/// Decides 3-polytopality of Kronecker, Cartesian and strong graph products.
///
/// A graph SPEC is either `family:params` (for example `prism:5`,
/// `wheel:7`, `ladder:4`, `cube`) or `@path` to a `.g6`, `.s6` or edge-list
/// file holding exactly one graph.
#[derive(Parser)]
#[command(name = "polyprod", version)]
struct Cli {
    /// Largest graph whose planar embeddings are enumerated exhaustively.
    #[arg(long, global = true, env = "POLYPROD_EMBED_CAP", default_value_t = 10)]
    embed_cap: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphOut {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum PlanOut {
    Text,
    Graph6,
}

#[derive(Subcommand)]
enum Command {
    /// Build a product and print it.
    Product {
        #[arg(long)]
        kind: ProductKind,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        out_format: GraphOut,
        /// Append the verdict and the oracle answer as comment lines.
        #[arg(long)]
        verdict: bool,
    },
    /// Report basic invariants and whether the graph itself is a 3-polytope.
    Classify {
        #[arg(long)]
        graph: String,
    },
    /// Decide whether `H ∧ K2` (or `H ⋆ J` with --kind/--with) is a 3-polytope.
    Decide {
        #[arg(long)]
        graph: String,
        #[arg(long, requires = "with")]
        kind: Option<ProductKind>,
        /// Second factor; requires --kind.
        #[arg(long, requires = "kind")]
        with: Option<String>,
        /// Build the product and compare with the brute-force oracle.
        #[arg(long)]
        oracle_check: bool,
    },
    /// Enumerate or sample Kronecker factors built from a bipartite base.
    Generate {
        #[arg(long)]
        base: String,
        #[arg(long, default_value_t = 2)]
        max_m: usize,
        /// Draw this many plans instead of printing all of them.
        #[arg(long)]
        sample: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        out_format: PlanOut,
    },
    /// Classify every graph read from stdin and compare with the oracle.
    Census {
        #[arg(long, default_value = "graph6")]
        format: InputFormat,
        /// `kronecker-factor` or `product:<kind>:<family spec>`.
        #[arg(long, default_value = "kronecker-factor")]
        mode: CensusMode,
        #[arg(long)]
        timing: bool,
        /// Skip malformed records instead of failing.
        #[arg(long)]
        lenient: bool,
    },
    /// Write an SVG drawing of a planar graph.
    Render {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        out: PathBuf,
    },
}

fn load_graph(spec: &str) -> Result<Graph> {
    let Some(path) = spec.strip_prefix('@') else {
        let family: FamilySpec = spec.parse()?;
        return Ok(make_family(family)?);
    };
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    let format = match Path::new(path).extension().and_then(|e| e.to_str()) {
        Some("g6" | "s6" | "graph6" | "sparse6") => InputFormat::Graph6,
        _ => InputFormat::EdgeList,
    };
    let mut out = read_graphs(&text, format, false).with_context(|| format!("parsing {path}"))?;
    match out.graphs.len() {
        1 => Ok(out.graphs.remove(0).graph),
        k => bail!("{path} holds {k} graphs, expected exactly one"),
    }
}

fn print_graph(g: &Graph, format: GraphOut) {
    match format {
        GraphOut::Edgelist => out!("{}", to_edge_list(g)),
        GraphOut::Graph6 => outln!("{}", to_graph6(g)),
    }
}

fn oracle_word(b: bool) -> &'static str {
    if b {
        "3-polytope"
    } else {
        "not a 3-polytope"
    }
}

fn decide(graph: &str, with: Option<(ProductKind, &str)>, oracle_check: bool, opts: &ClassifyOptions) -> Result<ExitCode> {
    let h = load_graph(graph)?;
    let (verdict, built): (Verdict, Graph) = match with {
        Some((kind, spec)) => {
            let j = load_graph(spec)?;
            (classify_product_with(&h, &j, kind, opts), product(&h, &j, kind))
        }
        None => {
            let k2 = Graph::from_edge_list(2, &[(0, 1)])?;
            (classify_kronecker_factor_with(&h, opts), kronecker(&h, &k2))
        }
    };
    out!("{}", verdict.to_text());
    if !oracle_check {
        return Ok(ExitCode::SUCCESS);
    }
    let oracle = is_3_polytope(&built);
    if oracle == verdict.accepted {
        outln!("oracle: agree ({})", oracle_word(oracle));
        Ok(ExitCode::SUCCESS)
    } else {
        outln!("oracle: disagree ({})", oracle_word(oracle));
        Ok(ExitCode::from(1))
    }
}

fn generate(base: &str, max_m: usize, sample: Option<usize>, seed: u64, format: PlanOut, cap: usize) -> Result<()> {
    let g = load_graph(base)?;
    let plans: Vec<AugmentationPlan> = enumerate_plans_with_cap(&g, max_m, cap)?;
    let embeddings = if g.is_k_connected(3) {
        1
    } else {
        enumerate_embeddings(&g, cap).map(|e| e.len()).unwrap_or(0)
    };
    let total = plans.len();
    let plans = match sample {
        Some(count) => sample_plans(&g, max_m, count, seed)?,
        None => plans,
    };
    eprintln!("embeddings: {embeddings}, plans: {total}, printed: {}", plans.len());
    for (i, plan) in plans.iter().enumerate() {
        match format {
            PlanOut::Graph6 => outln!("{}", to_graph6(&plan.apply())),
            PlanOut::Text => {
                if i > 0 {
                    outln!();
                }
                out!("{}", plan.to_text());
                outln!("result: {}", to_graph6(&plan.apply()));
            }
        }
    }
    Ok(())
}

fn run_census(format: InputFormat, mode: &CensusMode, timing: bool, lenient: bool, opts: &ClassifyOptions) -> Result<ExitCode> {
    let mut input = String::new();
    std::io::stdin().read_to_string(&mut input).context("reading stdin")?;
    let outcome = read_graphs(&input, format, lenient)?;
    for skipped in &outcome.skipped {
        eprintln!("skipped {skipped}");
    }
    let graphs: Vec<Graph> = outcome.graphs.into_iter().map(|r| r.graph).collect();
    let report = census(&graphs, mode, opts).map_err(|e| anyhow!(e))?;
    out!("{}", report.to_csv(timing));
    eprint!("{}", report.summary());
    if !outcome.skipped.is_empty() {
        eprintln!("skipped: {}", outcome.skipped.len());
    }
    Ok(if report.disagreements() == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let opts = ClassifyOptions {
        embed_cap: cli.embed_cap,
    };
    match cli.command {
        Command::Product {
            kind,
            left,
            right,
            out_format,
            verdict,
        } => {
            let (a, b) = (load_graph(&left)?, load_graph(&right)?);
            let p = product(&a, &b, kind);
            print_graph(&p, out_format);
            if verdict {
                outln!("# verdict: {}", classify_product_with(&a, &b, kind, &opts).headline());
                outln!("# oracle: {}", oracle_word(is_3_polytope(&p)));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Classify { graph } => {
            let g = load_graph(&graph)?;
            outln!("n: {}", g.n());
            outln!("m: {}", g.m());
            outln!("min degree: {}", g.min_degree());
            outln!("connectivity: {}", g.vertex_connectivity());
            outln!("bipartite: {}", g.is_bipartite());
            outln!("planar: {}", planar_embedding(&g).is_some());
            outln!("3-polytope: {}", is_3_polytope(&g));
            Ok(ExitCode::SUCCESS)
        }
        Command::Decide {
            graph,
            kind,
            with,
            oracle_check,
        } => {
            let with = kind.zip(with.as_deref());
            decide(&graph, with, oracle_check, &opts)
        }
        Command::Generate {
            base,
            max_m,
            sample,
            seed,
            out_format,
        } => {
            generate(&base, max_m, sample, seed, out_format, opts.embed_cap)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census {
            format,
            mode,
            timing,
            lenient,
        } => run_census(format, &mode, timing, lenient, &opts),
        Command::Render { graph, out } => {
            let g = load_graph(&graph)?;
            let emb = planar_embedding(&g).ok_or_else(|| anyhow!("graph is not planar"))?;
            export_embedding_svg(&emb, &out).with_context(|| format!("writing {}", out.display()))?;
            eprintln!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
