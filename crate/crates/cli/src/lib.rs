//! `planar-turan`: exact planar Turán values for small orders, extremal
//! constructions, and face/block analysis of user graphs.
//!
//! [`run`] is the whole program; the binary only wires it to the process
//! streams, so tests can drive it in-process.

pub mod report;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use turan_core::constructions::{extremal_graph, named_graph, turan_candidates};
use turan_core::embedding::{face_stats, kuratowski_subgraph, planarity_embed};
use turan_core::face_blocks::{block_report, rv_identity};
use turan_core::graph::parse_edge_list;
use turan_core::patterns::{find_pattern, Pattern};
use turan_core::search::{exact_ex_p, lemma_harness, LemmaId, SearchOptions, Strategy};
use turan_core::{graph6, Error, Graph};

use report::*;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "planar-turan", version, about = "Planar Turán numbers of linked and disjoint cycle pairs")]
struct Cli {
    /// Worker threads for searches and sweeps (default: all cores).
    #[arg(long, global = true, env = "TURAN_JOBS")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFormat {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Graph6,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum StrategyArg {
    Augment,
    Sweep,
}

fn parse_pattern(s: &str) -> Result<Pattern, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_lemma(s: &str) -> Result<LemmaId, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

#[derive(Debug, Args)]
struct Input {
    /// Edge-list file (`n m` header, then `u v` lines); stdin when omitted.
    file: Option<PathBuf>,
    /// Read graph6 instead of an edge list.
    #[arg(long)]
    graph6: bool,
    /// Use a built-in graph such as `prism`, `wheel:5` or `b2_c34`.
    #[arg(long, conflicts_with_all = ["file", "graph6"])]
    named: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute ex_P(n, H) exactly for each n and compare with the closed forms.
    Verify {
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
        #[arg(long)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        n_min: usize,
        #[arg(long, value_enum, default_value = "augment")]
        strategy: StrategyArg,
        /// Time limit per order, in seconds.
        #[arg(long)]
        budget_secs: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: TableFormat,
    },
    /// Emit an extremal graph.
    Extremal {
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: GraphFormat,
    },
    /// Test a graph for a pattern and print a witness if it has one.
    Check {
        #[arg(long, value_parser = parse_pattern)]
        pattern: Pattern,
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Embed a graph and report its 3-face-blocks.
    Blocks {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Embed a graph and report face statistics.
    Faces {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
    /// Run a lemma check over every small graph of its class.
    Harness {
        #[arg(long, value_parser = parse_lemma)]
        lemma: LemmaId,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: ReportFormat,
    },
}

/// Failure that maps to exit code 2.
struct Usage(String);

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<(String, u8), Usage>;

fn status(pass: bool) -> u8 {
    if pass {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn millis(d: Duration) -> u64 {
    d.as_millis().try_into().unwrap_or(u64::MAX)
}

/// Runs the program on `args` (including the program name) and returns the
/// exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{text}");
                EXIT_OK
            };
        }
    };
    let result = load_input(&cli.command, stdin).and_then(|graph| match cli.jobs {
        Some(0) => Err(Usage("--jobs must be at least 1".into())),
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, graph)),
            Err(e) => Err(Usage(format!("cannot start {j} threads: {e}"))),
        },
        None => dispatch(cli.command, graph),
    });
    match result {
        Ok((text, code)) => {
            if out.write_all(text.as_bytes()).is_err() {
                return EXIT_FAIL;
            }
            code
        }
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn load_input(cmd: &Command, stdin: &mut dyn Read) -> Result<Option<Graph>, Usage> {
    match cmd {
        Command::Check { input, .. } | Command::Blocks { input, .. } | Command::Faces { input, .. } => {
            read_graph(input, stdin).map(Some)
        }
        _ => Ok(None),
    }
}

fn dispatch(cmd: Command, graph: Option<Graph>) -> Outcome {
    let g = || graph.as_ref().expect("input loaded");
    match cmd {
        Command::Verify { pattern, n_max, n_min, strategy, budget_secs, format } => {
            verify(pattern, n_min, n_max, strategy, budget_secs, format)
        }
        Command::Extremal { pattern, n, format } => extremal(pattern, n, format),
        Command::Check { pattern, format, .. } => check(pattern, g(), format),
        Command::Blocks { format, .. } => blocks(g(), format),
        Command::Faces { format, .. } => faces(g(), format),
        Command::Harness { lemma, n_max, format } => harness(lemma, n_max, format),
    }
}

fn read_graph(input: &Input, stdin: &mut dyn Read) -> Result<Graph, Usage> {
    if let Some(name) = &input.named {
        return Ok(named_graph(name)?);
    }
    let text = match &input.file {
        Some(path) => std::fs::read_to_string(path).map_err(|e| Usage(format!("cannot read {}: {e}", path.display())))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Usage(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    if input.graph6 {
        let line = text.lines().map(str::trim).find(|l| !l.is_empty()).ok_or_else(|| Usage("empty graph6 input".into()))?;
        Ok(graph6::decode(line)?)
    } else {
        Ok(parse_edge_list(&text)?)
    }
}

fn verify(
    pattern: Pattern,
    n_min: usize,
    n_max: usize,
    strategy: StrategyArg,
    budget: Option<u64>,
    format: TableFormat,
) -> Outcome {
    let start = Instant::now();
    if n_min > n_max {
        return Err(Usage(format!("--n-min {n_min} exceeds --n-max {n_max}")));
    }
    let opts = SearchOptions {
        strategy: match strategy {
            StrategyArg::Augment => Strategy::Augment,
            StrategyArg::Sweep => Strategy::Sweep,
        },
        time_limit: budget.map(Duration::from_secs),
    };
    let mut rows = Vec::new();
    let mut discrepancies = Vec::new();
    for n in n_min..=n_max {
        let candidates = turan_candidates(n, &pattern)?;
        let row_start = Instant::now();
        let row = match exact_ex_p(n, &pattern, &opts) {
            Ok(r) => VerifyRow {
                n,
                computed: Some(r.value),
                formula: candidates[0].value,
                matches: r.value == candidates[0].value,
                formula_expr: candidates[0].formula,
                candidates: CandidateCheck::against(&candidates, Some(r.value)),
                bracket: None,
                witness: Some(GraphOut::of(&r.witness)),
                graphs_examined: r.graphs_examined,
                classes: r.classes,
                elapsed_ms: millis(r.elapsed),
            },
            Err(Error::BudgetExhausted { lower, upper }) => VerifyRow {
                n,
                computed: None,
                formula: candidates[0].value,
                matches: false,
                formula_expr: candidates[0].formula,
                candidates: CandidateCheck::against(&candidates, None),
                bracket: Some([lower, upper]),
                witness: None,
                graphs_examined: 0,
                classes: Vec::new(),
                elapsed_ms: millis(row_start.elapsed()),
            },
            Err(e) => return Err(e.into()),
        };
        if let Some(v) = row.computed {
            if row.candidates.iter().any(|c| !c.matches) {
                discrepancies.push(Discrepancy { n, computed: v, candidates: CandidateCheck::against(&candidates, Some(v)) });
            }
        }
        rows.push(row);
    }
    let pass = discrepancies.is_empty() && rows.iter().all(|r| r.computed.is_some());
    let report = VerifyReport {
        command: "verify",
        tool_version: TOOL_VERSION,
        pattern: pattern.short_name(),
        strategy: opts.strategy.to_string(),
        n_min,
        n_max,
        rows,
        discrepancies,
        pass,
        elapsed_ms: millis(start.elapsed()),
    };
    let text = match format {
        TableFormat::Text => report.text(),
        TableFormat::Json => json(&report),
        TableFormat::Csv => report.csv().map_err(|e| Usage(e.to_string()))?,
    };
    Ok((text, status(pass)))
}

fn extremal(pattern: Pattern, n: usize, format: GraphFormat) -> Outcome {
    let candidates = turan_candidates(n, &pattern)?;
    let g = extremal_graph(n, &pattern)?;
    let planar = planarity_embed(&g).is_planar();
    let free = find_pattern(&g, &pattern)?.is_none();
    let checks = CandidateCheck::against(&candidates, Some(g.m()));
    let pass = planar && free && checks.iter().any(|c| c.matches);
    let text = match format {
        GraphFormat::Edgelist => g.to_edge_list_text(),
        GraphFormat::Graph6 => format!("{}\n", graph6::encode(&g)),
        GraphFormat::Json => json(&ExtremalReport {
            command: "extremal",
            tool_version: TOOL_VERSION,
            pattern: pattern.short_name(),
            n,
            graph: GraphOut::of(&g),
            edge_list: g.edges().map(|(u, v)| [u, v]).collect(),
            candidates: checks,
            planar,
            free,
            pass,
        }),
    };
    Ok((text, status(pass)))
}

fn check(pattern: Pattern, g: &Graph, format: ReportFormat) -> Outcome {
    let witness = find_pattern(g, &pattern)?;
    let report = CheckReport {
        command: "check",
        tool_version: TOOL_VERSION,
        pattern: pattern.short_name(),
        graph: GraphOut::of(g),
        planar: planarity_embed(g).is_planar(),
        free: witness.is_none(),
        witness,
    };
    let text = match format {
        ReportFormat::Text => report.text(),
        ReportFormat::Json => json(&report),
    };
    Ok((text, status(report.free)))
}

fn blocks(g: &Graph, format: ReportFormat) -> Outcome {
    let mut report = BlocksReport {
        command: "blocks",
        tool_version: TOOL_VERSION,
        graph: GraphOut::of(g),
        planar: false,
        kuratowski: None,
        rotation: Vec::new(),
        blocks: Vec::new(),
        rv_total: 0,
        three_f3: 0,
        identity_ok: false,
    };
    match planarity_embed(g).embedding() {
        Some(rs) => {
            let pg = rs.trace_faces();
            let (total, three_f3) = rv_identity(&pg);
            report.planar = true;
            report.rotation = rotation_of(&pg);
            report.blocks = block_report(&pg);
            report.rv_total = total;
            report.three_f3 = three_f3;
            report.identity_ok = total == three_f3;
        }
        None => report.kuratowski = kuratowski_subgraph(g).map(|k| k.edges().map(|(u, v)| [u, v]).collect()),
    }
    let code = status(report.planar && report.identity_ok);
    let text = match format {
        ReportFormat::Text => report.text(),
        ReportFormat::Json => json(&report),
    };
    Ok((text, code))
}

fn faces(g: &Graph, format: ReportFormat) -> Outcome {
    let Some(rs) = planarity_embed(g).embedding() else {
        let report = FacesReport {
            command: "faces",
            tool_version: TOOL_VERSION,
            graph: GraphOut::of(g),
            planar: false,
            rotation: Vec::new(),
            faces: Vec::new(),
            plane_face_sizes: Vec::new(),
            f: Default::default(),
            e: Default::default(),
            e_pairs: Default::default(),
            euler_ok: false,
            property1_ok: false,
            property1_violations: Vec::new(),
        };
        let text = match format {
            ReportFormat::Text => report.text(None),
            ReportFormat::Json => json(&report),
        };
        return Ok((text, EXIT_FAIL));
    };
    let pg = rs.trace_faces();
    let st = face_stats(&pg);
    let report = FacesReport::from_plane(GraphOut::of(g), &pg, &st);
    let code = status(report.euler_ok && report.property1_ok);
    let text = match format {
        ReportFormat::Text => report.text(Some(&st)),
        ReportFormat::Json => json(&report),
    };
    Ok((text, code))
}

fn harness(lemma: LemmaId, n_max: usize, format: ReportFormat) -> Outcome {
    let start = Instant::now();
    let report = lemma_harness(lemma, n_max)?;
    let out = HarnessOut {
        command: "harness",
        tool_version: TOOL_VERSION,
        examined: report.embeddings,
        report,
        elapsed_ms: millis(start.elapsed()),
    };
    let code = status(out.report.passed());
    let text = match format {
        ReportFormat::Text => out.text(),
        ReportFormat::Json => json(&out),
    };
    Ok((text, code))
}
