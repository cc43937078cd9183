//! Command-line surface: `gen`, `compute`, `verify`.
//!
//! Exit codes: 0 success, 1 usage/parse/configuration error, 2 strict-mode
//! deviation from a pinned expectations file, 3 internal self-consistency
//! failure (two routes for the same quantity disagreed).

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::closed_forms::{ParamName, TheoremId};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::indices::{compute, IndexKind, IndexValue};
use crate::verifier::{run_suite, Expectations, Report, SweepConfig, VerifyError};
use crate::IndexInt;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{count} record(s) deviate from the pinned expectations")]
    StrictDeviation { count: usize },
    #[error("internal self-consistency failure: {0}")]
    SelfCheck(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::StrictDeviation { .. } => 2,
            CliError::SelfCheck(_) => 3,
        }
    }

    fn usage(err: impl std::fmt::Display) -> Self {
        CliError::Usage(err.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(err: VerifyError) -> Self {
        if err.is_self_check() {
            CliError::SelfCheck(err.to_string())
        } else {
            CliError::Usage(err.to_string())
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "fgraph",
    version,
    about = "Generate graph families, compute exact degree-based indices, and verify closed forms"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a family graph and write it in edge-list format.
    Gen {
        /// Family spec, e.g. "cycle:n=4" or "tadpole:n=4,k=3|subdivide,line_graph".
        spec: String,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute indices for a graph given as a family spec or edge-list file.
    Compute {
        /// Family spec (anything containing ':') or path to an edge-list file.
        input: String,
        /// Comma-separated subset of M1,M2,F,M1_co,M2_co,F_co, or "all".
        #[arg(long, default_value = "all")]
        indices: String,
        #[arg(long, value_enum, default_value_t = ComputeFormat::Text)]
        format: ComputeFormat,
    },
    /// Sweep parameter grids and compare closed forms against direct computation.
    Verify {
        /// Restrict to these theorem ids (repeatable); all fourteen when omitted.
        #[arg(long = "theorem")]
        theorems: Vec<String>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Md)]
        format: ReportFormat,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Expectations file pinning MATCH/MISMATCH per theorem; any
        /// deviation makes the run exit with status 2.
        #[arg(long)]
        strict: Option<PathBuf>,
        /// Range override "A..B" (or a single value) for parameter n.
        #[arg(long)]
        n: Option<String>,
        /// Range override for parameter k.
        #[arg(long)]
        k: Option<String>,
        /// Range override for parameter m.
        #[arg(long)]
        m: Option<String>,
        /// Range override for parameter p.
        #[arg(long)]
        p: Option<String>,
        /// Range override for parameter q.
        #[arg(long)]
        q: Option<String>,
        /// Worker threads for the sweep; defaults to the rayon global pool.
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ComputeFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Csv,
    Json,
    Md,
}

/// Parses argv and runs; returns the process exit code.
pub fn main_from_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    let stdout = io::stdout();
    match run(cli.command, &mut stdout.lock()) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}

/// Executes one subcommand, writing primary output to `stdout`.
pub fn run(command: Command, stdout: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Gen { spec, out } => cmd_gen(&spec, out.as_deref(), stdout),
        Command::Compute {
            input,
            indices,
            format,
        } => cmd_compute(&input, &indices, format, stdout),
        Command::Verify {
            theorems,
            format,
            out,
            strict,
            n,
            k,
            m,
            p,
            q,
            jobs,
        } => {
            let flags = VerifyFlags {
                theorems,
                format,
                out,
                strict,
                n,
                k,
                m,
                p,
                q,
                jobs,
            };
            cmd_verify(flags, stdout)
        }
    }
}

fn cmd_gen(spec: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    let spec: FamilySpec = spec.parse().map_err(CliError::usage)?;
    let graph = spec.generate().map_err(CliError::usage)?;
    emit(&graph.to_edge_list(), out, stdout)
}

fn cmd_compute(
    input: &str,
    indices: &str,
    format: ComputeFormat,
    stdout: &mut dyn Write,
) -> Result<(), CliError> {
    let graph = load_graph(input)?;
    let kinds = parse_index_subset(indices)?;
    let mut values = Vec::with_capacity(kinds.len());
    for kind in kinds {
        let value = compute::<IndexInt>(&graph, kind).map_err(|err| match err {
            crate::indices::IndexError::SelfCheck { .. } => CliError::SelfCheck(err.to_string()),
            other => CliError::usage(other),
        })?;
        values.push(IndexValue { index: kind, value });
    }
    let text = match format {
        ComputeFormat::Text => {
            let mut line = values
                .iter()
                .map(|v| format!("{}={}", v.index, v.value))
                .collect::<Vec<_>>()
                .join(" ");
            line.push('\n');
            line
        }
        ComputeFormat::Json => {
            let mut text = serde_json::to_string_pretty(&values).expect("values serialize");
            text.push('\n');
            text
        }
    };
    write_stdout(stdout, &text)
}

struct VerifyFlags {
    theorems: Vec<String>,
    format: ReportFormat,
    out: Option<PathBuf>,
    strict: Option<PathBuf>,
    n: Option<String>,
    k: Option<String>,
    m: Option<String>,
    p: Option<String>,
    q: Option<String>,
    jobs: Option<usize>,
}

fn cmd_verify(flags: VerifyFlags, stdout: &mut dyn Write) -> Result<(), CliError> {
    let theorems = parse_theorem_filter(&flags.theorems)?;
    let mut overrides = BTreeMap::new();
    for (name, raw) in [
        (ParamName::N, &flags.n),
        (ParamName::K, &flags.k),
        (ParamName::M, &flags.m),
        (ParamName::P, &flags.p),
        (ParamName::Q, &flags.q),
    ] {
        if let Some(raw) = raw {
            overrides.insert(name, parse_range(raw)?);
        }
    }
    let config = SweepConfig::new(&theorems, &overrides).map_err(CliError::usage)?;

    // Read the expectations before the sweep so a bad file fails fast.
    let expectations = match &flags.strict {
        None => None,
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|err| {
                CliError::usage(format!(
                    "cannot read expectations file {}: {err}",
                    path.display()
                ))
            })?;
            Some(Expectations::parse(&text).map_err(CliError::usage)?)
        }
    };

    let report = match flags.jobs {
        None => run_suite(&config)?,
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(CliError::usage)?;
            pool.install(|| run_suite(&config))?
        }
    };

    let rendered = render_report(&report, flags.format);
    emit(&rendered, flags.out.as_deref(), stdout)?;

    if let Some(expectations) = expectations {
        let deviations = expectations.deviations(&report);
        if !deviations.is_empty() {
            for record in &deviations {
                eprintln!(
                    "deviation: {} {} is {}",
                    record.theorem_id,
                    record.params_display(),
                    record.status
                );
            }
            return Err(CliError::StrictDeviation {
                count: deviations.len(),
            });
        }
    }
    Ok(())
}

pub fn render_report(report: &Report, format: ReportFormat) -> String {
    match format {
        ReportFormat::Csv => report.to_csv(),
        ReportFormat::Json => report.to_json(),
        ReportFormat::Md => report.to_markdown(),
    }
}

fn load_graph(input: &str) -> Result<Graph, CliError> {
    if input.contains(':') {
        let spec: FamilySpec = input.parse().map_err(CliError::usage)?;
        spec.generate().map_err(CliError::usage)
    } else {
        let text = fs::read_to_string(input)
            .map_err(|err| CliError::usage(format!("cannot read {input}: {err}")))?;
        Graph::from_edge_list(&text).map_err(|err| CliError::usage(format!("{input}: {err}")))
    }
}

fn parse_index_subset(raw: &str) -> Result<Vec<IndexKind>, CliError> {
    if raw.trim().eq_ignore_ascii_case("all") {
        return Ok(IndexKind::ALL.to_vec());
    }
    let mut kinds = Vec::new();
    for piece in raw.split(',') {
        let kind: IndexKind = piece.trim().parse().map_err(CliError::Usage)?;
        if !kinds.contains(&kind) {
            kinds.push(kind);
        }
    }
    Ok(kinds)
}

fn parse_theorem_filter(raw: &[String]) -> Result<Vec<TheoremId>, CliError> {
    if raw.is_empty() {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut requested = Vec::new();
    for piece in raw {
        let id: TheoremId = piece.parse().map_err(CliError::usage)?;
        if !requested.contains(&id) {
            requested.push(id);
        }
    }
    // Canonical report order regardless of flag order.
    Ok(TheoremId::ALL
        .into_iter()
        .filter(|id| requested.contains(id))
        .collect())
}

fn parse_range(raw: &str) -> Result<RangeInclusive<u32>, CliError> {
    let parse = |s: &str| {
        s.parse::<u32>()
            .map_err(|_| CliError::Usage(format!("invalid range bound '{s}' in '{raw}'")))
    };
    match raw.split_once("..") {
        Some((lo, hi)) => Ok(parse(lo)?..=parse(hi)?),
        None => {
            let v = parse(raw)?;
            Ok(v..=v)
        }
    }
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|err| CliError::usage(format!("cannot write {}: {err}", path.display()))),
        None => write_stdout(stdout, text),
    }
}

// A closed pipe on stdout (e.g. piping into `head`) is not an error.
fn write_stdout(stdout: &mut dyn Write, text: &str) -> Result<(), CliError> {
    match stdout.write_all(text.as_bytes()) {
        Err(err) if err.kind() != io::ErrorKind::BrokenPipe => Err(CliError::usage(err)),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(command: Command) -> Result<String, CliError> {
        let mut buf = Vec::new();
        run(command, &mut buf)?;
        Ok(String::from_utf8(buf).unwrap())
    }

    #[test]
    fn gen_cycle_to_stdout() {
        let out = run_capture(Command::Gen {
            spec: "cycle:n=4".into(),
            out: None,
        })
        .unwrap();
        assert_eq!(out, "4 4\n0 1\n0 3\n1 2\n2 3\n");
    }

    #[test]
    fn gen_transformed_cycle_is_c8() {
        let out = run_capture(Command::Gen {
            spec: "cycle:n=4|subdivide,line_graph".into(),
            out: None,
        })
        .unwrap();
        assert!(out.starts_with("8 8\n"), "{out}");
    }

    #[test]
    fn gen_domain_error_exits_nonzero() {
        let err = run_capture(Command::Gen {
            spec: "tadpole:n=2,k=1".into(),
            out: None,
        })
        .unwrap_err();
        assert_eq!(err.exit_code(), 1);
        assert!(err.to_string().contains("n >= 3"), "{err}");
    }

    #[test]
    fn compute_wheel_f() {
        let out = run_capture(Command::Compute {
            input: "wheel:n=3|subdivide,line_graph".into(),
            indices: "F".into(),
            format: ComputeFormat::Text,
        })
        .unwrap();
        assert_eq!(out, "F=324\n");
    }

    #[test]
    fn compute_cycle_fco() {
        let out = run_capture(Command::Compute {
            input: "cycle:n=4|subdivide,line_graph".into(),
            indices: "F_co".into(),
            format: ComputeFormat::Text,
        })
        .unwrap();
        assert_eq!(out, "F_co=160\n");
    }

    #[test]
    fn compute_all_indices_in_canonical_order() {
        let dir = std::env::temp_dir().join(format!("fgraph-cli-test-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("k3.edges");
        fs::write(&path, "3 3\n0 1\n0 2\n1 2\n").unwrap();
        let out = run_capture(Command::Compute {
            input: path.to_string_lossy().into_owned(),
            indices: "all".into(),
            format: ComputeFormat::Text,
        })
        .unwrap();
        assert_eq!(out, "M1=12 M2=12 F=24 M1_co=0 M2_co=0 F_co=0\n");
        fs::remove_dir_all(&dir).ok();
    }

    #[test]
    fn compute_json_shape() {
        let out = run_capture(Command::Compute {
            input: "cycle:n=3".into(),
            indices: "m1,f".into(),
            format: ComputeFormat::Json,
        })
        .unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(parsed[0]["index"], "M1");
        assert_eq!(parsed[0]["value"], 12);
        assert_eq!(parsed[1]["index"], "F");
        assert_eq!(parsed[1]["value"], 24);
    }

    #[test]
    fn verify_filtered_csv() {
        let out = run_capture(Command::Verify {
            theorems: vec!["CYCLE_F".into()],
            format: ReportFormat::Csv,
            out: None,
            strict: None,
            n: Some("3..10".into()),
            k: None,
            m: None,
            p: None,
            q: None,
            jobs: Some(2),
        })
        .unwrap();
        let match_rows = out.lines().filter(|l| l.ends_with("MATCH,yes")).count();
        assert_eq!(match_rows, 8);
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("3..10").unwrap(), 3..=10);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn theorem_filter_restores_canonical_order() {
        let ids = parse_theorem_filter(&["STAR_F".to_string(), "CYCLE_F".to_string()]).unwrap();
        assert_eq!(ids, vec![TheoremId::CycleF, TheoremId::StarF]);
        assert!(parse_theorem_filter(&["NOPE".to_string()]).is_err());
    }

    #[test]
    fn index_subset_parsing() {
        assert_eq!(parse_index_subset("all").unwrap(), IndexKind::ALL.to_vec());
        assert_eq!(
            parse_index_subset("f, m1").unwrap(),
            vec![IndexKind::F, IndexKind::M1]
        );
        assert!(parse_index_subset("wiener").is_err());
    }
}
