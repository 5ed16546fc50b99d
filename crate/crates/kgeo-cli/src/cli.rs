//! Command-line interface.
//!
//! Exit codes: 0 success / search complete, 1 usage error, 2 input parse
//! error (digraph files, checkpoint files), 3 search truncated by a budget,
//! 4 audit failures detected.

use crate::checkpoint::CheckpointError;
use crate::dot::export_dot;
use crate::report::{to_json, AuditReport, CheckReport, SearchSummary};
use crate::runner::{run_search, RunnerConfig, RunnerError};
use crate::text::{emit_digraph, parse_digraph};
use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use kgeo_core::audit::{
    audit_identical_neighbourhoods, audit_neighbourhood_lemma, audit_outlier_regularity,
    audit_pair_positions, AuditVerdict,
};
use kgeo_core::cages::{left_cage, right_cage};
use kgeo_core::{build_pair_config, classify, Digraph, SearchParams};
use std::fs;
use std::io::Read as _;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_TRUNCATED: i32 = 3;
pub const EXIT_AUDIT_FAILS: i32 = 4;

#[derive(Parser)]
#[command(
    name = "kgeo",
    version,
    about = "Analyze and exhaustively generate k-geodetic digraphs near the directed Moore bound"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a digraph: degrees, geodecity, Moore bound, excess, outliers
    Check {
        /// Input digraph file (`-` for standard input)
        file: String,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
    },
    /// Run every structural audit on a digraph
    Audit {
        /// Input digraph file (`-` for standard input)
        file: String,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
    },
    /// Exhaustively generate all (d,k,+e) digraphs up to isomorphism
    Search {
        #[arg(short)]
        d: usize,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        e: usize,
        /// Restrict to diregular digraphs (in-degree d everywhere)
        #[arg(long)]
        diregular: bool,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Tree depth at which the search splits into parallel tasks
        #[arg(long, default_value_t = kgeo_core::search::DEFAULT_SPLIT_DEPTH)]
        split_depth: usize,
        /// Node budget; exceeding it stops the search with exit code 3
        #[arg(long)]
        max_nodes: Option<u64>,
        /// Wall-clock budget in seconds
        #[arg(long, value_name = "SECONDS")]
        time_budget: Option<u64>,
        /// Checkpoint file to write and resume from
        #[arg(long, value_name = "PATH")]
        checkpoint: Option<PathBuf>,
        /// Directory for result digraphs and the summary report
        #[arg(long, value_name = "DIR")]
        out: Option<PathBuf>,
    },
    /// Print the embedded order-9 geodetic cages
    Cages {
        #[arg(long, value_enum, default_value_t = CageChoice::Both)]
        emit: CageChoice,
    },
    /// Convert a digraph file to another format
    Export {
        /// Input digraph file (`-` for standard input)
        file: String,
        #[arg(long, value_enum)]
        format: ExportFormat,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CageChoice {
    Left,
    Right,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ExportFormat {
    Dot,
}

/// Entry point used by `main` and by tests; returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = err.print();
            return code;
        }
    };
    match cli.command {
        Command::Check { file, d, k } => cmd_check(&file, d, k),
        Command::Audit { file, d, k } => cmd_audit(&file, d, k),
        Command::Search {
            d,
            k,
            e,
            diregular,
            jobs,
            split_depth,
            max_nodes,
            time_budget,
            checkpoint,
            out,
        } => cmd_search(SearchCmd {
            d,
            k,
            e,
            diregular,
            jobs,
            split_depth,
            max_nodes,
            time_budget,
            checkpoint,
            out,
        }),
        Command::Cages { emit } => cmd_cages(emit),
        Command::Export { file, format } => cmd_export(&file, format),
    }
}

fn read_input(file: &str) -> Result<String, String> {
    if file == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(buf)
    } else {
        fs::read_to_string(file).map_err(|e| format!("reading {file}: {e}"))
    }
}

fn load_digraph(file: &str) -> Result<Digraph, String> {
    let text = read_input(file)?;
    parse_digraph(&text).map_err(|e| format!("{file}: {e}"))
}

fn cmd_check(file: &str, d: usize, k: usize) -> i32 {
    let g = match load_digraph(file) {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    let moore = match classify(&g, d, k) {
        Ok(m) => m,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    print!("{}", CheckReport::build(&g, &moore).to_text());
    EXIT_OK
}

/// Runs the full audit battery; pair-position audits run for every
/// unique-common-out-neighbour pair when the digraph is 2-out-regular.
pub fn run_all_audits(g: &Digraph, d: usize, k: usize) -> Vec<AuditVerdict> {
    let mut verdicts = audit_neighbourhood_lemma(g, d, k);
    verdicts.extend(audit_identical_neighbourhoods(g, k));
    verdicts.push(audit_outlier_regularity(g, d, k));
    if g.order() > 0 && g.out_degrees().all(|deg| deg == 2) {
        for (u, v, _) in g.unique_common_outneighbour_pairs() {
            let cfg = build_pair_config(g, u, v).expect("enumerated pairs are valid");
            verdicts
                .extend(audit_pair_positions(g, &cfg, k).expect("configs built here are consistent"));
        }
    }
    verdicts
}

fn cmd_audit(file: &str, d: usize, k: usize) -> i32 {
    let g = match load_digraph(file) {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    if k < 1 {
        eprintln!("error: k must be at least 1");
        return EXIT_USAGE;
    }
    let verdicts = run_all_audits(&g, d, k);
    let report = AuditReport::build(d, k, &verdicts);
    print!("{}", report.to_text());
    if report.any_fails() {
        EXIT_AUDIT_FAILS
    } else {
        EXIT_OK
    }
}

struct SearchCmd {
    d: usize,
    k: usize,
    e: usize,
    diregular: bool,
    jobs: usize,
    split_depth: usize,
    max_nodes: Option<u64>,
    time_budget: Option<u64>,
    checkpoint: Option<PathBuf>,
    out: Option<PathBuf>,
}

fn cmd_search(cmd: SearchCmd) -> i32 {
    let mut params = SearchParams::new(cmd.d, cmd.k, cmd.e).diregular(cmd.diregular);
    params.max_nodes = cmd.max_nodes;
    params.time_budget_secs = cmd.time_budget;
    params.split_depth = cmd.split_depth;
    params.checkpoint_path = cmd.checkpoint.map(|p| p.to_string_lossy().to_string());
    let config = RunnerConfig { jobs: cmd.jobs.max(1), ..Default::default() };

    let outcome = match run_search(&params, &config) {
        Ok(outcome) => outcome,
        Err(RunnerError::Checkpoint(err @ CheckpointError::ParamsMismatch)) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
        Err(RunnerError::Checkpoint(err)) => {
            eprintln!("error: {err}");
            return EXIT_PARSE;
        }
        Err(RunnerError::Search(err)) => {
            eprintln!("error: {err}");
            return EXIT_USAGE;
        }
    };

    let summary = SearchSummary::build(&outcome);
    if let Some(dir) = &cmd.out {
        if let Err(e) = write_search_outputs(dir, &outcome, &summary) {
            eprintln!("error: writing results to {}: {e}", dir.display());
            return EXIT_PARSE;
        }
    } else {
        for g in &outcome.results {
            print!("{}", emit_digraph(g));
        }
    }
    print!("{}", summary.to_text());
    if outcome.complete {
        EXIT_OK
    } else {
        EXIT_TRUNCATED
    }
}

fn write_search_outputs(
    dir: &Path,
    outcome: &kgeo_core::SearchOutcome,
    summary: &SearchSummary,
) -> std::io::Result<()> {
    fs::create_dir_all(dir)?;
    for (i, g) in outcome.results.iter().enumerate() {
        fs::write(dir.join(format!("result-{i:03}.dg")), emit_digraph(g))?;
    }
    fs::write(dir.join("summary.txt"), summary.to_text())?;
    fs::write(dir.join("summary.json"), to_json(summary))?;
    Ok(())
}

fn cmd_cages(emit: CageChoice) -> i32 {
    match emit {
        CageChoice::Left => print!("{}", emit_digraph(&left_cage())),
        CageChoice::Right => print!("{}", emit_digraph(&right_cage())),
        CageChoice::Both => {
            print!("{}", emit_digraph(&left_cage()));
            print!("{}", emit_digraph(&right_cage()));
        }
    }
    EXIT_OK
}

fn cmd_export(file: &str, format: ExportFormat) -> i32 {
    let g = match load_digraph(file) {
        Ok(g) => g,
        Err(msg) => {
            eprintln!("error: {msg}");
            return EXIT_PARSE;
        }
    };
    match format {
        ExportFormat::Dot => print!("{}", export_dot(&g)),
    }
    EXIT_OK
}
