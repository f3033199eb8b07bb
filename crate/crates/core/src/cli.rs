//! Command-line front end.
//!
//! Exit codes: 0 ok, 1 input error, 2 a check failed, 3 a witness did not
//! match its target fingerprint.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};

use crate::corpus::{reports_json, run_corpus, summary_csv, write_atomic, write_outputs};
use crate::error::GroupError;
use crate::file::{read_group_file, serialize_group_file, GroupFile};
use crate::graph::build_commuting_graph;
use crate::group::{set_max_order, FiniteGroup};
use crate::verify::analyze_group;
use crate::witness::build_witness;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CHECK_FAILED: i32 = 2;
pub const EXIT_FINGERPRINT: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "agc",
    version,
    about = "Commuting graphs of finite groups: diameters and structural checks"
)]
pub struct Cli {
    /// Largest group order to enumerate.
    #[arg(long, global = true, env = "AGC_MAX_ORDER")]
    pub max_order: Option<usize>,

    /// Worker threads for corpus runs.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one group file and run every check on it.
    Analyze {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run every check on each group file in a directory.
    Corpus {
        dir: PathBuf,
        /// Directory for per-group reports, report.json and summary.csv.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Treat unreadable files as an error.
        #[arg(long)]
        strict: bool,
    },
    /// Rebuild a witness group and write it as a group file.
    Witness {
        name: String,
        #[arg(long)]
        emit: PathBuf,
    },
    /// Export the commuting graph of a group file.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn load_group(path: &Path) -> Result<(String, FiniteGroup), GroupError> {
    let file = read_group_file(path)?;
    let name = file.name.clone().unwrap_or_else(|| {
        path.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    });
    Ok((name, file.to_group()?))
}

fn emit(out: &Option<PathBuf>, text: &str, stdout: &mut dyn Write) -> Result<(), GroupError> {
    match out {
        Some(path) => write_atomic(path, text),
        None => stdout.write_all(text.as_bytes()).map_err(GroupError::from),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = write!(stderr, "{e}");
            return code;
        }
    };
    if let Some(cap) = cli.max_order {
        set_max_order(cap);
    }
    let jobs = cli.jobs.unwrap_or_else(|| {
        std::thread::available_parallelism().map_or(1, |n| n.get())
    });
    match execute(cli.command, jobs, stdout, stderr) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &GroupError) -> i32 {
    match e {
        GroupError::FingerprintMismatch { .. } => EXIT_FINGERPRINT,
        _ => EXIT_INPUT,
    }
}

fn execute(
    command: Command,
    jobs: usize,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> Result<i32, GroupError> {
    match command {
        Command::Analyze { file, out, format } => {
            let (name, g) = load_group(&file)?;
            let report = analyze_group(&name, &g);
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
                Format::Csv => summary_csv(std::slice::from_ref(&report)),
                Format::Dot => {
                    return Err(GroupError::FormatError("analyze supports json and csv".into()))
                }
            };
            emit(&out, &text, stdout)?;
            for c in report.failures() {
                writeln!(stderr, "check failed: {} {}", c.id, c.witness)?;
            }
            Ok(if report.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Corpus {
            dir,
            out,
            format,
            strict,
        } => {
            let outcome = run_corpus(&dir, jobs)?;
            for s in &outcome.skipped {
                writeln!(stderr, "skipped {}: {}", s.path, s.error)?;
            }
            match &out {
                Some(path) => {
                    write_outputs(path, &outcome)?;
                    let failed = outcome.reports.iter().filter(|r| !r.all_pass()).count();
                    writeln!(
                        stdout,
                        "groups: {}, failed: {}, skipped: {}",
                        outcome.reports.len(),
                        failed,
                        outcome.skipped.len()
                    )?;
                }
                None => {
                    let text = match format {
                        Format::Csv => summary_csv(&outcome.reports),
                        _ => reports_json(&outcome.reports),
                    };
                    stdout.write_all(text.as_bytes())?;
                }
            }
            if strict && !outcome.skipped.is_empty() {
                return Ok(EXIT_INPUT);
            }
            Ok(if outcome.all_pass() { EXIT_OK } else { EXIT_CHECK_FAILED })
        }
        Command::Witness { name, emit: path } => {
            let w = build_witness(&name)?;
            let file = GroupFile::from_group(&w.group, Some(&w.name));
            write_atomic(&path, &(serialize_group_file(&file) + "\n"))?;
            writeln!(stdout, "{}: {}", w.name, w.target)?;
            writeln!(
                stdout,
                "recipe: {}",
                serde_json::to_string(&w.recipe).expect("recipe serializes")
            )?;
            Ok(EXIT_OK)
        }
        Command::Graph { file, format, out } => {
            let (_, g) = load_group(&file)?;
            let graph = build_commuting_graph(&g);
            let text = match format {
                Format::Dot => graph.to_dot(&g),
                Format::Json => graph.to_json() + "\n",
                Format::Csv => {
                    return Err(GroupError::FormatError("graph supports dot and json".into()))
                }
            };
            emit(&out, &text, stdout)?;
            Ok(EXIT_OK)
        }
    }
}
