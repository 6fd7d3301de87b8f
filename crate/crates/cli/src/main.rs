//! `fourg`: per-genus reports, atlas sweeps and exceptional searches.
//!
//! Exit codes: 0 ok, 1 usage, 2 input format, 3 invariant violation.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use fourg::check::{run_checks, CheckReport};
use fourg::groups::{from_permutations, from_table};
use fourg::report::{atlas, exceptional_section, report};
use fourg::{Error, FiniteGroup, ReportOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Command {
    /// Full pipeline for one genus.
    Report,
    /// One report per genus in a range, plus a summary.
    Atlas,
    /// Search groups of order 4g for actions off the main family.
    Exceptional,
}

#[derive(Debug, Parser)]
#[command(
    name = "fourg",
    version,
    about = "Riemann surfaces of genus g with 4g automorphisms"
)]
struct Cli {
    /// Defaults to `report` with --genus and `atlas` with --range.
    #[arg(value_enum)]
    command: Option<Command>,
    #[arg(long, short)]
    genus: Option<u64>,
    /// Inclusive genus range, `a..b`.
    #[arg(long)]
    range: Option<String>,
    #[arg(long, conflicts_with = "markdown")]
    json: bool,
    #[arg(long)]
    markdown: bool,
    /// Directory of group tables (`order n`) or permutation files (`perm ...`).
    #[arg(long)]
    tables: Option<PathBuf>,
    /// Run the invariant suites; violations exit with 3.
    #[arg(long)]
    check: bool,
    /// Largest group order taken from the built-in catalog.
    #[arg(long)]
    max_order: Option<usize>,
    #[arg(long)]
    threads: Option<usize>,
    /// key = value settings; flags take precedence.
    #[arg(long)]
    config: Option<PathBuf>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields, rename_all = "kebab-case")]
struct Config {
    command: Option<Command>,
    genus: Option<u64>,
    range: Option<String>,
    format: Option<Format>,
    tables: Option<PathBuf>,
    check: Option<bool>,
    max_order: Option<usize>,
    threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Markdown,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Input(String),
    Invariant(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Input(_) => 2,
            Failure::Invariant(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage: {m}"),
            Failure::Input(m) => write!(f, "input: {m}"),
            Failure::Invariant(m) => write!(f, "invariant violated: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Invariant(_) | Error::NonIntegralGenus(_) => Failure::Invariant(e.to_string()),
            Error::Syntax { .. }
            | Error::Format { .. }
            | Error::NotAGroup(_)
            | Error::WrongOrder { .. } => Failure::Input(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

/// Flags merged over the config file.
#[derive(Debug)]
struct Settings {
    command: Command,
    genus: Option<u64>,
    range: Option<(u64, u64)>,
    format: Format,
    tables: Option<PathBuf>,
    check: bool,
    opts: ReportOptions,
    threads: usize,
}

fn parse_range(text: &str) -> Result<(u64, u64), Failure> {
    let bad = || Failure::Usage(format!("range '{text}' is not of the form a..b"));
    let (a, b) = text
        .split_once("..=")
        .or_else(|| text.split_once(".."))
        .or_else(|| text.split_once('-'))
        .ok_or_else(bad)?;
    let a = a.trim().parse().map_err(|_| bad())?;
    let b = b.trim().parse().map_err(|_| bad())?;
    if a < 2 || a > b {
        return Err(Failure::Usage(format!(
            "range {a}..{b} must satisfy 2 <= a <= b"
        )));
    }
    Ok((a, b))
}

fn settings(cli: Cli) -> Result<Settings, Failure> {
    let cfg = match &cli.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            toml::from_str::<Config>(&text)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        None => Config::default(),
    };
    let genus = cli.genus.or(cfg.genus);
    let range = cli
        .range
        .or(cfg.range)
        .map(|r| parse_range(&r))
        .transpose()?;
    let command = match (cli.command.or(cfg.command), genus, range) {
        (Some(c), ..) => c,
        (None, Some(_), None) => Command::Report,
        (None, None, Some(_)) => Command::Atlas,
        _ => {
            return Err(Failure::Usage(
                "give a command, or exactly one of --genus and --range".into(),
            ))
        }
    };
    match command {
        Command::Atlas if range.is_none() => {
            return Err(Failure::Usage("atlas needs --range".into()))
        }
        Command::Report | Command::Exceptional if genus.is_none() => {
            return Err(Failure::Usage("this command needs --genus".into()))
        }
        _ => {}
    }
    if let Some(g) = genus {
        if g < 2 {
            return Err(Failure::Usage(format!("genus must be at least 2, got {g}")));
        }
    }
    let format = if cli.json {
        Format::Json
    } else if cli.markdown {
        Format::Markdown
    } else {
        cfg.format.unwrap_or(Format::Markdown)
    };
    let mut opts = ReportOptions::default();
    if let Some(m) = cli.max_order.or(cfg.max_order) {
        opts.max_order = m;
    }
    let threads = cli
        .threads
        .or(cfg.threads)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    Ok(Settings {
        command,
        genus,
        range,
        format,
        tables: cli.tables.or(cfg.tables),
        check: cli.check || cfg.check.unwrap_or(false),
        opts,
        threads: threads.max(1),
    })
}

/// Every regular file in `dir`, sorted by name, parsed by its first keyword.
fn ingest(dir: &Path) -> Result<Vec<FiniteGroup>, Failure> {
    let read_err = |e: std::io::Error| Failure::Usage(format!("{}: {e}", dir.display()));
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(read_err)?
        .map(|e| e.map(|e| e.path()))
        .collect::<Result<_, _>>()
        .map_err(read_err)?;
    paths.retain(|p| p.is_file());
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p)
                .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
            let first = text
                .lines()
                .map(|l| l.split('#').next().unwrap_or("").trim())
                .find(|l| !l.is_empty())
                .unwrap_or("");
            let parsed = if first.starts_with("perm") {
                from_permutations(&text)
            } else {
                from_table(&text)
            };
            parsed.map_err(|e| match Failure::from(e) {
                Failure::Input(m) => Failure::Input(format!("{}: {m}", p.display())),
                other => other,
            })
        })
        .collect()
}

fn emit<T: Serialize>(value: &T, markdown: impl FnOnce(&T) -> String, format: Format) {
    match format {
        Format::Json => println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        ),
        Format::Markdown => print!("{}", markdown(value)),
    }
}

fn checks(genera: impl Iterator<Item = u64>, s: &Settings) -> Result<(), Failure> {
    let reports: Vec<CheckReport> = genera
        .map(|g| run_checks(g, &s.opts, s.threads))
        .collect::<Result<_, _>>()?;
    let mut bad = Vec::new();
    for r in &reports {
        for suite in &r.suites {
            eprintln!(
                "check g={} {}: {} cases, {} violations",
                r.genus,
                suite.name,
                suite.cases,
                suite.violations.len()
            );
            bad.extend(
                suite
                    .violations
                    .iter()
                    .map(|v| format!("g={} {}: {v}", r.genus, suite.name)),
            );
        }
    }
    if bad.is_empty() {
        Ok(())
    } else {
        Err(Failure::Invariant(bad.join("; ")))
    }
}

fn run(s: Settings) -> Result<(), Failure> {
    let tables = s
        .tables
        .as_deref()
        .map(ingest)
        .transpose()?
        .unwrap_or_default();
    match s.command {
        Command::Report => {
            let g = s.genus.expect("checked");
            emit(&report(g, &s.opts)?, |r| r.to_markdown(), s.format);
            if s.check {
                checks(std::iter::once(g), &s)?;
            }
        }
        Command::Atlas => {
            let (lo, hi) = s.range.expect("checked");
            emit(&atlas(lo, hi, &s.opts)?, |a| a.to_markdown(), s.format);
            if s.check {
                checks(lo..=hi, &s)?;
            }
        }
        Command::Exceptional => {
            let g = s.genus.expect("checked");
            let section = exceptional_section(g, &tables, s.opts.max_order)?;
            for w in &section.warnings {
                eprintln!("warning: {w}");
            }
            emit(&section, |x| x.to_markdown(), s.format);
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let result = settings(cli).and_then(|s| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(s.threads)
            .build()
            .map_err(|e| Failure::Usage(e.to_string()))?;
        pool.install(|| run(s))
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("fourg: {f}");
            ExitCode::from(f.code())
        }
    }
}
