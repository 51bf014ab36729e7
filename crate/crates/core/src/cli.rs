//! Command-line front end for the `bary` binary.
//!
//! Exit codes: 0 success, 1 verification failure or I/O error, 2 usage error,
//! 3 resource cap exceeded.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::counting::CountCache;
use crate::error::Error;
use crate::lattice::{self, DEFAULT_NODE_CAP};
use crate::oracle;
use crate::partition::{Basis, Partition};
use crate::tree;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "bary", version, about = "Partitions of an integer into powers of a base")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of b-ary partitions of n.
    Count {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = CountMethod::Recurrence)]
        method: CountMethod,
        #[arg(long, value_enum, default_value_t = OutputFormat::Lines)]
        format: OutputFormat,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the b-ary partitions of n in tree level order.
    Enum {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = OutputFormat::Lines)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Emit the covering diagram of the lattice of partitions of n.
    Hasse {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
        #[arg(long, value_enum, default_value_t = HasseMethod::Direct)]
        method: HasseMethod,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Dump levels 0..=n of the enumeration tree.
    Tree {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = OutputFormat::Lines)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Greatest lower bound of two partitions of n.
    Meet(PairArgs),
    /// Least upper bound of two partitions of n.
    Join(PairArgs),
    /// Whether P lies below Q, i.e. P is reachable from Q by firings.
    Leq(PairArgs),
    /// Shot vector of a partition of n.
    Shots {
        #[command(flatten)]
        target: Target,
        /// Partition as p0,p1,... (lowest power first).
        partition: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Cross-validate every construction against brute force.
    Verify {
        #[arg(short = 'b', long = "base", value_parser = parse_basis)]
        base: Basis,
        #[arg(long = "max-n", default_value_t = 40)]
        max_n: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct Target {
    #[arg(short = 'b', long = "base", value_parser = parse_basis)]
    pub base: Basis,
    #[arg(long = "n")]
    pub n: u64,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write to FILE instead of standard output.
    #[arg(long, value_name = "FILE")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct PairArgs {
    #[command(flatten)]
    pub target: Target,
    pub p: String,
    pub q: String,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Lines,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Recurrence,
    Sum,
    Pi,
    Oracle,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum HasseMethod {
    Direct,
    Incremental,
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    let b: u64 = s.parse().map_err(|e| format!("{e}"))?;
    Basis::new(b).map_err(|e| e.to_string())
}

/// A failed command with its exit code.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::Overflow(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        CliError { code, message: e.to_string() }
    }
}

/// Text produced by a successful command, and its exit code (nonzero only
/// when `verify` finds a failure).
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

fn ok(text: String) -> Result<Outcome, CliError> {
    Ok(Outcome { text, code: EXIT_OK })
}

fn reject_format(format: OutputFormat, allowed: &[OutputFormat], command: &str) -> Result<(), CliError> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(CliError::usage(format!("{command} does not support --format {format:?}").to_lowercase()))
    }
}

fn parse_partition(text: &str, target: &Target) -> Result<Partition, CliError> {
    let p = Partition::parse(text, target.base)?;
    let found = p.value()?;
    if found != target.n {
        return Err(Error::InconsistentValue { expected: target.n, found }.into());
    }
    Ok(p)
}

fn output_path(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Count { output, .. }
        | Command::Enum { output, .. }
        | Command::Hasse { output, .. }
        | Command::Tree { output, .. }
        | Command::Shots { output, .. }
        | Command::Verify { output, .. } => output.output.as_ref(),
        Command::Meet(a) | Command::Join(a) | Command::Leq(a) => a.output.output.as_ref(),
    }
}

/// Runs a parsed command and returns its output text.
pub fn execute(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Count { target, method, format, .. } => {
            reject_format(*format, &[OutputFormat::Lines, OutputFormat::Json], "count")?;
            let mut cache = CountCache::new(target.base);
            let value = match method {
                CountMethod::Recurrence => cache.count(target.n),
                CountMethod::Sum => cache.count_sum_form(target.n),
                CountMethod::Pi => cache.count_via_pi(target.n),
                CountMethod::Oracle => oracle::brute_count(target.n, target.base)?.into(),
            };
            let text = match format {
                OutputFormat::Json => json!({
                    "basis": target.base.get(),
                    "n": target.n,
                    "method": format!("{method:?}").to_lowercase(),
                    "count": value.to_string(),
                })
                .to_string(),
                _ => value.to_string(),
            };
            ok(text + "\n")
        }
        Command::Enum { target, format, cap, .. } => {
            reject_format(*format, &[OutputFormat::Lines, OutputFormat::Json], "enum")?;
            let mut text = String::new();
            match format {
                OutputFormat::Json => {
                    let mut all: Vec<Vec<u64>> = Vec::new();
                    tree::for_each(target.n, target.base, *cap, |parts| all.push(parts.to_vec()))?;
                    text = serde_json::to_string(&all).expect("serializes") + "\n";
                }
                _ => {
                    let mut line = Vec::new();
                    tree::for_each(target.n, target.base, *cap, |parts| {
                        line.clear();
                        line.extend_from_slice(parts);
                        text.push_str(&Partition::new(line.clone(), target.base).to_text());
                        text.push('\n');
                    })?;
                }
            }
            ok(text)
        }
        Command::Hasse { target, format, method, cap, .. } => {
            reject_format(*format, &[OutputFormat::Json, OutputFormat::Dot], "hasse")?;
            let diagram = match method {
                HasseMethod::Direct => lattice::build_hasse(target.n, target.base, *cap)?,
                HasseMethod::Incremental => {
                    lattice::build_hasse_incremental(target.n, target.base, *cap)?
                }
            };
            match format {
                OutputFormat::Dot => ok(diagram.to_dot()),
                _ => ok(diagram.to_json() + "\n"),
            }
        }
        Command::Tree { target, format, cap, .. } => {
            let levels = tree::levels(target.base, target.n)
                .with_cap(*cap)
                .collect::<Result<Vec<_>, _>>()?;
            ok(render_tree(&levels, *format))
        }
        Command::Meet(a) | Command::Join(a) | Command::Leq(a) => {
            let p = parse_partition(&a.p, &a.target)?;
            let q = parse_partition(&a.q, &a.target)?;
            let text = match command {
                Command::Meet(_) => lattice::meet(&p, &q, a.target.n)?.to_text(),
                Command::Join(_) => lattice::join(&p, &q, a.target.n)?.to_text(),
                _ => lattice::leq(&p, &q, a.target.n)?.to_string(),
            };
            ok(text + "\n")
        }
        Command::Shots { target, partition, .. } => {
            let p = parse_partition(partition, target)?;
            ok(p.shot_vector(target.n)?.to_text() + "\n")
        }
        Command::Verify { base, max_n, .. } => {
            let report = verify::run(*base, *max_n);
            let code = if report.passed() { EXIT_OK } else { EXIT_FAILURE };
            Ok(Outcome { text: report.to_string(), code })
        }
    }
}

fn render_tree(levels: &[tree::Level], format: OutputFormat) -> String {
    match format {
        OutputFormat::Lines => {
            let mut out = String::new();
            for level in levels {
                let members: Vec<String> = level.members.iter().map(Partition::to_text).collect();
                let _ = writeln!(out, "{}: {}", level.depth, members.join(" "));
            }
            out
        }
        OutputFormat::Json => {
            let doc: Vec<Vec<&[u64]>> = levels
                .iter()
                .map(|l| l.members.iter().map(Partition::parts).collect())
                .collect();
            serde_json::to_string(&doc).expect("serializes") + "\n"
        }
        OutputFormat::Dot => {
            let mut out = String::from("digraph tree {\n");
            let mut offset = 0usize;
            for (d, level) in levels.iter().enumerate() {
                for (k, t) in level.members.iter().enumerate() {
                    let _ = writeln!(out, "  t{} [label=\"{}\"];", offset + k, t.to_text());
                }
                if let Some(next) = levels.get(d + 1) {
                    let mut child = offset + level.members.len();
                    for (k, t) in level.members.iter().enumerate() {
                        for son in 0..=t.leading() {
                            let _ = writeln!(out, "  t{} -> t{} [label=\"{}\"];", offset + k, child, son);
                            child += 1;
                        }
                    }
                    debug_assert_eq!(child, offset + level.members.len() + next.members.len());
                }
                offset += level.members.len();
            }
            out.push_str("}\n");
            out
        }
    }
}

/// Parses `args`, runs the command and writes its output. Returns the exit
/// code.
pub fn main_with_args<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                stdout.write_all(rendered.as_bytes())
            } else {
                stderr.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    let outcome = match execute(&cli.command) {
        Ok(outcome) => outcome,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message);
            return e.code;
        }
    };
    let written = match output_path(&cli.command) {
        Some(path) => std::fs::write(path, outcome.text.as_bytes()),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: {e}");
        return EXIT_FAILURE;
    }
    outcome.code
}
