//! The `kegraph` command line, callable in-process through [`run_from`].

mod corpus;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};
use std::time::Duration;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use kegraph::classify::classify;
use kegraph::io::{parse, sniff_format, Format};
use kegraph::report::{InvariantReport, SCHEMA_VERSION};
use kegraph::search::{search, Objective, SearchOptions, SearchReport};
use kegraph::theorems::{
    self, parse_ids, verify_corpus, CorpusReport, Status, Tally, TheoremId, VerifyOptions,
    Violation,
};
use kegraph::Graph;
use serde::Serialize;

use corpus::{CorpusArgs, UsageError};

pub const EXIT_USAGE: u8 = 2;
pub const EXIT_VIOLATION: u8 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "kegraph",
    version,
    about = "König-Egerváry graph invariants and theorem checking"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum InputFormat {
    Auto,
    Edges,
    Graph6,
    Dimacs,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the invariant report of one graph as JSON.
    Analyze {
        /// Input file, or `-` for stdin.
        input: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: InputFormat,
        #[arg(long)]
        pretty: bool,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print only the classification verdict of one graph.
    Classify {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: InputFormat,
    },
    /// Run catalog checkers on one graph.
    Check {
        input: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        format: InputFormat,
        /// Comma-separated theorem ids; all when omitted.
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Check theorems over one or more corpora.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Comma-separated theorem ids.
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        theorem: Option<String>,
        /// Check the full catalog.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the JSON report here and print a summary to stdout instead.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Witness file written when a violation is found.
        #[arg(long, default_value = "kegraph-witnesses.json")]
        witnesses: PathBuf,
        /// Violations kept per corpus.
        #[arg(long, default_value_t = 64)]
        max_witnesses: usize,
        /// Abort after this many seconds.
        #[arg(long)]
        time_budget: Option<u64>,
        /// Suppress the summary table and timing lines.
        #[arg(long)]
        quiet: bool,
    },
    /// Scan corpora for tight or extremal instances.
    Search {
        #[arg(long)]
        objective: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Findings kept per corpus.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List catalog ids with their statements.
    Theorems,
}

fn read_graph(input: &Path, format: InputFormat) -> Result<Graph> {
    let text = if input == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading stdin")?;
        s
    } else {
        std::fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?
    };
    let format = match format {
        InputFormat::Auto => sniff_format(&text),
        InputFormat::Edges => Format::EdgeList,
        InputFormat::Graph6 => Format::Graph6,
        InputFormat::Dimacs => Format::Dimacs,
    };
    parse(&text, format).map_err(|e| UsageError(format!("{}: {e}", input.display())).into())
}

fn to_json<T: Serialize>(value: &T, pretty: bool) -> Result<String> {
    let mut s = if pretty {
        serde_json::to_string_pretty(value)?
    } else {
        serde_json::to_string(value)?
    };
    s.push('\n');
    Ok(s)
}

fn emit(json: &str, out: Option<&Path>) -> Result<()> {
    match out {
        Some(path) => {
            std::fs::write(path, json).with_context(|| format!("writing {}", path.display()))
        }
        None => std::io::stdout()
            .write_all(json.as_bytes())
            .context("writing stdout"),
    }
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    schema_version: u32,
    theorems: &'a [TheoremId],
    totals: Vec<Tally>,
    reports: &'a [CorpusReport],
}

#[derive(Serialize)]
struct WitnessFile<'a> {
    schema_version: u32,
    violations: Vec<&'a Violation>,
}

#[derive(Serialize)]
struct SearchOutput<'a> {
    schema_version: u32,
    objective: Objective,
    reports: &'a [SearchReport],
}

fn totals(ids: &[TheoremId], reports: &[CorpusReport]) -> Vec<Tally> {
    ids.iter()
        .enumerate()
        .map(|(i, &theorem)| {
            let mut t = Tally {
                theorem,
                holds: 0,
                violated: 0,
                not_applicable: 0,
            };
            for r in reports {
                let x = &r.tallies[i];
                t.holds += x.holds;
                t.violated += x.violated;
                t.not_applicable += x.not_applicable;
            }
            t
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
fn verify(
    corpus: &CorpusArgs,
    theorem: Option<&str>,
    jobs: usize,
    out: Option<&Path>,
    witnesses: &Path,
    max_witnesses: usize,
    time_budget: Option<u64>,
    quiet: bool,
) -> Result<u8> {
    let ids = match theorem {
        Some(list) => parse_ids(list).map_err(|e| UsageError(e.to_string()))?,
        None => TheoremId::ALL.to_vec(),
    };
    let descriptors = corpus.descriptors()?;
    let options = VerifyOptions {
        jobs,
        time_budget: time_budget.map(Duration::from_secs),
        max_witnesses,
    };
    let mut reports = Vec::new();
    for d in &descriptors {
        let r = verify_corpus(d, &ids, &options)?;
        if !quiet {
            eprintln!("{} graphs in {:.2?}", r.graphs, r.duration);
        }
        reports.push(r);
    }
    let totals = totals(&ids, &reports);
    let violated: u64 = totals.iter().map(|t| t.violated).sum();
    let output = VerifyOutput {
        schema_version: SCHEMA_VERSION,
        theorems: &ids,
        totals,
        reports: &reports,
    };
    emit(&to_json(&output, true)?, out)?;
    if out.is_some() && !quiet {
        for t in &output.totals {
            println!(
                "{:<22} holds {:>8}  violated {:>6}  not-applicable {:>8}",
                t.theorem.as_str(),
                t.holds,
                t.violated,
                t.not_applicable
            );
        }
    }
    if violated == 0 {
        return Ok(0);
    }
    let file = WitnessFile {
        schema_version: SCHEMA_VERSION,
        violations: reports.iter().flat_map(|r| &r.violations).collect(),
    };
    std::fs::write(witnesses, to_json(&file, true)?)
        .with_context(|| format!("writing {}", witnesses.display()))?;
    eprintln!(
        "{violated} violations; witnesses written to {}",
        witnesses.display()
    );
    Ok(EXIT_VIOLATION)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Analyze {
            input,
            format,
            pretty,
            out,
        } => {
            let g = read_graph(&input, format)?;
            emit(
                &to_json(&InvariantReport::compute(&g)?, pretty)?,
                out.as_deref(),
            )?;
            Ok(0)
        }
        Command::Classify { input, format } => {
            let g = read_graph(&input, format)?;
            emit(&to_json(&classify(&g), false)?, None)?;
            Ok(0)
        }
        Command::Check {
            input,
            format,
            theorem,
        } => {
            let g = read_graph(&input, format)?;
            let results = match theorem {
                Some(list) => {
                    let ids = parse_ids(&list).map_err(|e| UsageError(e.to_string()))?;
                    ids.into_iter()
                        .map(|id| theorems::check(id, &g))
                        .collect::<Result<Vec<_>, _>>()?
                }
                None => theorems::check_all(&g)?,
            };
            emit(&to_json(&results, true)?, None)?;
            let violated = results.iter().any(|r| r.status == Status::Violated);
            Ok(if violated { EXIT_VIOLATION } else { 0 })
        }
        Command::Verify {
            corpus,
            theorem,
            all: _,
            jobs,
            out,
            witnesses,
            max_witnesses,
            time_budget,
            quiet,
        } => verify(
            &corpus,
            theorem.as_deref(),
            jobs,
            out.as_deref(),
            &witnesses,
            max_witnesses,
            time_budget,
            quiet,
        ),
        Command::Search {
            objective,
            corpus,
            jobs,
            limit,
            out,
        } => {
            let objective: Objective = objective
                .parse()
                .map_err(|e: kegraph::search::SearchError| UsageError(e.to_string()))?;
            let options = SearchOptions { jobs, limit };
            let reports = corpus
                .descriptors()?
                .iter()
                .map(|d| search(d, objective, &options))
                .collect::<Result<Vec<_>, _>>()?;
            let output = SearchOutput {
                schema_version: SCHEMA_VERSION,
                objective,
                reports: &reports,
            };
            emit(&to_json(&output, true)?, out.as_deref())?;
            Ok(0)
        }
        Command::Theorems => {
            for id in TheoremId::ALL {
                println!("{:<22} {}", id.as_str(), id.summary());
            }
            Ok(0)
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code. Diagnostics go to stderr.
pub fn run_from<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // help and version requests print to stdout and exit 0
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { 0 };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let usage = e.chain().any(|c| c.is::<UsageError>());
            if usage {
                EXIT_USAGE
            } else {
                1
            }
        }
    }
}
