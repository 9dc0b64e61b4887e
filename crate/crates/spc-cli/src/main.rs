//! Command-line front end for signed product cordial labelings.
//!
//! Exit codes are stable across subcommands: 0 for success (and, where a
//! verdict is involved, for SPC), 1 for a valid run with a negative verdict,
//! 2 for usage or input errors.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use spc_core::dot::render_dot;
use spc_core::families::FamilySpec;
use spc_core::graph::Graph;
use spc_core::labeling::{evaluate, CordialityReport, SignedLabeling};
use spc_core::schemes::{self, HelmDumbbellVariant, SchemeError, SchemeOutput};
use spc_core::search::{search_spc, SearchMode, SearchOptions, DEFAULT_MAX_VERTICES};

#[derive(Parser)]
#[command(
    name = "spc",
    version,
    about = "Signed product cordial labelings: build graph families, apply labeling schemes, \
             verify labelings, search exhaustively, tabulate counts, and export DOT"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a family graph and emit it as JSON
    Build(BuildArgs),
    /// Apply a closed-form labeling scheme and report its counts
    Scheme(SchemeArgs),
    /// Evaluate a labeling file against a graph file
    Verify(VerifyArgs),
    /// Exhaustively search a graph for SPC labelings
    Search(SearchArgs),
    /// Tabulate scheme counts over a parameter range
    Table(TableArgs),
    /// Render a graph, optionally labeled, as Graphviz DOT
    Export(ExportArgs),
}

#[derive(Args)]
struct BuildArgs {
    /// Family spec: path:n, cycle:n, star:n, wheel:n, helm:n, bull,
    /// psquare:n, spltg(<spec>), corona(<spec>,m), helmdumbbell:k
    spec: String,
    /// Write the graph JSON here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SchemeArgs {
    #[command(subcommand)]
    scheme: SchemeCommand,
}

#[derive(Subcommand)]
enum SchemeCommand {
    /// Splitting graph of the star on n leaves
    #[command(name = "spltg-star")]
    SpltgStar {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        io: SchemeIo,
    },
    /// Splitting graph of the bull
    #[command(name = "spltg-bull")]
    SpltgBull {
        #[command(flatten)]
        io: SchemeIo,
    },
    /// Square of the path on n vertices
    #[command(name = "psquare")]
    Psquare {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        io: SchemeIo,
    },
    /// Corona of the n-cycle with three pendants per vertex
    #[command(name = "corona-c-3k1")]
    CoronaC3K1 {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        io: SchemeIo,
    },
    /// Two helms joined by a path on k vertices
    #[command(name = "helm-dumbbell")]
    HelmDumbbell {
        #[arg(long)]
        k: usize,
        /// Reading of the contradictory instructions: literal or
        /// endpoints-positive
        #[arg(long, default_value = "literal")]
        variant: String,
        #[command(flatten)]
        io: SchemeIo,
    },
}

#[derive(Args)]
struct SchemeIo {
    /// Write the scheme graph as JSON
    #[arg(long)]
    graph_out: Option<PathBuf>,
    /// Write the scheme labeling as JSON
    #[arg(long)]
    labeling_out: Option<PathBuf>,
    /// Print the report as a single JSON line instead of a text table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph JSON file
    #[arg(long)]
    graph: PathBuf,
    /// Labeling JSON file ({"signs": [1, -1, ...]})
    #[arg(long)]
    labeling: PathBuf,
    /// Print the report as a single JSON line instead of a text table
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    /// Graph JSON file to search
    #[arg(long)]
    graph: PathBuf,
    /// Decide existence and stop at the first witness (default)
    #[arg(long, group = "mode")]
    exists: bool,
    /// Count all SPC labelings exactly
    #[arg(long, group = "mode")]
    count: bool,
    /// Count and gather every SPC labeling
    #[arg(long, group = "mode")]
    collect: bool,
    /// Fix the first vertex positive and double counts back
    /// (defaults: true for --exists, false for --count/--collect)
    #[arg(long)]
    fix: Option<bool>,
    /// Disable the delta-bound pruning
    #[arg(long)]
    no_prune: bool,
    /// Vertex cap guarding against runaway searches
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
    /// Write the witness labeling as JSON
    #[arg(long)]
    witness_out: Option<PathBuf>,
    /// Print the result as a single JSON line
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Scheme family: spltg-star, psquare, corona-c-3k1, or helm-dumbbell
    family: String,
    /// Inclusive parameter range, e.g. 1..10 or 3..=8
    #[arg(long)]
    n: String,
    /// Reading to use for helm-dumbbell rows
    #[arg(long, default_value = "literal")]
    variant: String,
    /// Also write the rows as CSV
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct ExportArgs {
    /// Graph JSON file
    #[arg(long)]
    graph: PathBuf,
    /// Optional labeling JSON file; adds sign labels, fills, and edge styles
    #[arg(long)]
    labeling: Option<PathBuf>,
    /// Write the DOT text here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Build(args) => cmd_build(args),
        Command::Scheme(args) => cmd_scheme(args.scheme),
        Command::Verify(args) => cmd_verify(args),
        Command::Search(args) => cmd_search(args),
        Command::Table(args) => cmd_table(args),
        Command::Export(args) => cmd_export(args),
    }
}

fn load_graph(path: &Path) -> Result<Graph> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing graph file {}", path.display()))
}

fn load_labeling(path: &Path) -> Result<SignedLabeling> {
    let text =
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text)
        .with_context(|| format!("parsing labeling file {}", path.display()))
}

fn write_json_file<T: Serialize>(value: &T, path: &Path) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn write_text_file(text: &str, path: &Path) -> Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

/// Two-row table mirroring the conventional count columns.
fn report_table(report: &CordialityReport) -> String {
    let verdict = if report.is_spc { "SPC" } else { "not SPC" };
    let headers = ["v_α(1)", "v_α(-1)", "e_α*(1)", "e_α*(-1)", "Δv", "Δe", "verdict"];
    let values = [
        report.v_pos.to_string(),
        report.v_neg.to_string(),
        report.e_pos.to_string(),
        report.e_neg.to_string(),
        report.vertex_delta.to_string(),
        report.edge_delta.to_string(),
        verdict.to_owned(),
    ];
    let mut header_line = String::new();
    let mut value_line = String::new();
    for (header, value) in headers.iter().zip(&values) {
        let width = header.chars().count().max(value.chars().count());
        if !header_line.is_empty() {
            header_line.push_str("  ");
            value_line.push_str("  ");
        }
        header_line.push_str(&pad_left(header, width));
        value_line.push_str(&pad_left(value, width));
    }
    format!("{header_line}\n{value_line}\n")
}

fn pad_left(text: &str, width: usize) -> String {
    let chars = text.chars().count();
    format!("{}{}", " ".repeat(width.saturating_sub(chars)), text)
}

fn cmd_build(args: BuildArgs) -> Result<u8> {
    let spec: FamilySpec = args.spec.parse()?;
    let graph = spec.build()?;
    match &args.out {
        Some(path) => {
            write_json_file(&graph, path)?;
            println!("vertices: {}", graph.num_vertices());
            println!("edges: {}", graph.num_edges());
        }
        None => {
            println!("{}", serde_json::to_string_pretty(&graph)?);
            eprintln!(
                "vertices: {}  edges: {}",
                graph.num_vertices(),
                graph.num_edges()
            );
        }
    }
    Ok(0)
}

fn scheme_output_for(cmd: &SchemeCommand) -> Result<(SchemeOutput, &SchemeIo)> {
    match cmd {
        SchemeCommand::SpltgStar { n, io } => Ok((schemes::spltg_star_scheme(*n)?, io)),
        SchemeCommand::SpltgBull { io } => Ok((schemes::spltg_bull_scheme(), io)),
        SchemeCommand::Psquare { n, io } => Ok((schemes::path_square_scheme(*n)?, io)),
        SchemeCommand::CoronaC3K1 { n, io } => Ok((schemes::corona_scheme(*n)?, io)),
        SchemeCommand::HelmDumbbell { k, variant, io } => {
            let variant: HelmDumbbellVariant = variant.parse()?;
            Ok((schemes::helm_dumbbell_scheme(*k, variant)?, io))
        }
    }
}

fn cmd_scheme(cmd: SchemeCommand) -> Result<u8> {
    let (output, io) = scheme_output_for(&cmd)?;
    if let Some(path) = &io.graph_out {
        write_json_file(&output.graph, path)?;
    }
    if let Some(path) = &io.labeling_out {
        write_json_file(&output.labeling, path)?;
    }
    if io.json {
        println!("{}", serde_json::to_string(&output.report)?);
    } else {
        println!(
            "graph: {} vertices, {} edges",
            output.graph.num_vertices(),
            output.graph.num_edges()
        );
        print!("{}", report_table(&output.report));
        if let Some(expected) = &output.expected {
            println!(
                "expected: v {}/{}, e {}/{} -- {}",
                expected.v_pos, expected.v_neg, expected.e_pos, expected.e_neg,
                expected.provenance
            );
            let note = expected
                .discrepancy(&output.report)
                .or_else(|| expected.orientation_note(&output.report));
            if let Some(note) = note {
                println!("note: {note}");
            }
        }
    }
    Ok(if output.report.is_spc { 0 } else { 1 })
}

fn cmd_verify(args: VerifyArgs) -> Result<u8> {
    let graph = load_graph(&args.graph)?;
    let labeling = load_labeling(&args.labeling)?;
    let report = evaluate(&graph, &labeling)?;
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!(
            "graph: {} vertices, {} edges",
            graph.num_vertices(),
            graph.num_edges()
        );
        print!("{}", report_table(&report));
    }
    Ok(if report.is_spc { 0 } else { 1 })
}

fn cmd_search(args: SearchArgs) -> Result<u8> {
    let graph = load_graph(&args.graph)?;
    let mut opts = if args.count {
        SearchOptions::count()
    } else if args.collect {
        SearchOptions::collect()
    } else {
        SearchOptions::exists()
    };
    if let Some(fix) = args.fix {
        opts.fix_first_vertex = fix;
    }
    opts.prune = !args.no_prune;
    opts.max_vertices = args.max_vertices;

    let result = search_spc(&graph, &opts)?;
    if let (Some(path), Some(witness)) = (&args.witness_out, &result.witness) {
        write_json_file(witness, path)?;
    }
    if args.json {
        println!("{}", serde_json::to_string(&result)?);
    } else {
        println!("exists: {}", result.exists);
        if let Some(count) = result.count {
            println!("count: {count}");
        }
        println!("nodes explored: {}", result.nodes_explored);
        println!("symmetry factor: {}", result.symmetry_factor);
        if let Some(witness) = &result.witness {
            println!("witness: {}", serde_json::to_string(witness)?);
        }
        if opts.mode == SearchMode::Collect {
            println!("labelings collected: {}", result.labelings.len());
        }
    }
    Ok(if result.exists { 0 } else { 1 })
}

struct TableRow {
    n: usize,
    parity: &'static str,
    report: CordialityReport,
    note: Option<String>,
    provenance: Option<String>,
}

fn parse_range(text: &str) -> Result<(usize, usize)> {
    let (lo, hi) = text
        .split_once("..")
        .with_context(|| format!("range {text:?} must look like 3..10 or 3..=10"))?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().with_context(|| format!("range start {lo:?}"))?;
    let hi: usize = hi.trim().parse().with_context(|| format!("range end {hi:?}"))?;
    if lo > hi {
        bail!("empty range {text:?}");
    }
    Ok((lo, hi))
}

fn cmd_table(args: TableArgs) -> Result<u8> {
    let (lo, hi) = parse_range(&args.n)?;
    let variant: HelmDumbbellVariant = args.variant.parse()?;
    let build: Box<dyn Fn(usize) -> Result<SchemeOutput, SchemeError>> =
        match args.family.as_str() {
            "spltg-star" => Box::new(schemes::spltg_star_scheme),
            "psquare" => Box::new(schemes::path_square_scheme),
            "corona-c-3k1" => Box::new(schemes::corona_scheme),
            "helm-dumbbell" => Box::new(move |k| schemes::helm_dumbbell_scheme(k, variant)),
            other => bail!(
                "unknown table family {other:?} \
                 (expected spltg-star, psquare, corona-c-3k1, or helm-dumbbell)"
            ),
        };

    let mut rows = Vec::with_capacity(hi - lo + 1);
    for n in lo..=hi {
        let output = build(n)?;
        let note = output.expected.as_ref().and_then(|e| {
            e.discrepancy(&output.report)
                .or_else(|| e.orientation_note(&output.report))
        });
        rows.push(TableRow {
            n,
            parity: if n % 2 == 0 { "even" } else { "odd" },
            report: output.report,
            note,
            provenance: output.expected.map(|e| e.provenance),
        });
    }

    println!("{:>4}  {:<6}  {:>5}  {:>5}  {:>4}  {:>5}  {:>5}  {:>4}  {:<8}  note",
             "n", "parity", "v_pos", "v_neg", "|Δv|", "e_pos", "e_neg", "|Δe|", "verdict");
    for row in &rows {
        let r = &row.report;
        let verdict = if r.is_spc { "SPC" } else { "NOT SPC" };
        println!(
            "{:>4}  {:<6}  {:>5}  {:>5}  {:>4}  {:>5}  {:>5}  {:>4}  {:<8}  {}",
            row.n,
            row.parity,
            r.v_pos,
            r.v_neg,
            r.vertex_delta.abs(),
            r.e_pos,
            r.e_neg,
            r.edge_delta.abs(),
            verdict,
            row.note.as_deref().unwrap_or("")
        );
    }
    let mut sources: Vec<&String> = Vec::new();
    for row in &rows {
        if let Some(source) = &row.provenance {
            if !sources.contains(&source) {
                sources.push(source);
            }
        }
    }
    for source in sources {
        println!("expected values: {source}");
    }

    if let Some(path) = &args.csv {
        let mut csv =
            String::from("n,v_pos,v_neg,vertex_delta_abs,e_pos,e_neg,edge_delta_abs,parity\n");
        for row in &rows {
            let r = &row.report;
            csv.push_str(&format!(
                "{},{},{},{},{},{},{},{}\n",
                row.n,
                r.v_pos,
                r.v_neg,
                r.vertex_delta.abs(),
                r.e_pos,
                r.e_neg,
                r.edge_delta.abs(),
                row.parity
            ));
        }
        write_text_file(&csv, path)?;
    }
    Ok(0)
}

fn cmd_export(args: ExportArgs) -> Result<u8> {
    let graph = load_graph(&args.graph)?;
    let labeling = match &args.labeling {
        Some(path) => Some(load_labeling(path)?),
        None => None,
    };
    let dot = render_dot(&graph, labeling.as_ref())?;
    match &args.out {
        Some(path) => write_text_file(&dot, path)?,
        None => print!("{dot}"),
    }
    Ok(0)
}
