//! The `rainbow-lab` command line.
//!
//! Output is JSON by default (one object per line) or a plain text table
//! with `--format text`. Exit status: 0 success, 1 domain error (for
//! instance `k > n`), 2 input, I/O or usage error, 3 internal contract
//! violation.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bipartite::BipartiteGraph;
use crate::coloring::{
    build_extremal_coloring, find_rainbow, normalize_orientation, rb_value,
    ColoredCompleteBipartite,
};
use crate::extremal::{build_extremal_graph, ext_value, inspect};
use crate::oracle::{
    brute_force_f_parallel, count_rainbow_free_partitions_parallel, sweep_verify, DEFAULT_LIMIT,
};
use crate::Error;

/// Environment variable overriding the default oracle edge limit.
pub const LIMIT_ENV: &str = "RAINBOW_LAB_LIMIT";

#[derive(Debug, Parser)]
#[command(
    name = "rainbow-lab",
    version,
    about = "Extremal and rainbow numbers for matchings in complete bipartite graphs"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rainbow number rb(K_{m,n}, kK2)
    Rb { m: usize, n: usize, k: usize },
    /// Extremal number ext(m, n, kK2); with --input, inspect a graph against it
    Ext {
        m: usize,
        n: usize,
        k: usize,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// The extremal graph K_{m,k-1}
    BuildExtremalGraph {
        m: usize,
        n: usize,
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// A coloring of K_{m,n} with m(k-2)+1 colors and no rainbow kK2
    BuildExtremalColoring {
        m: usize,
        n: usize,
        k: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search a colored K_{m,n} for a rainbow matching of size k
    FindRainbow {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        input: PathBuf,
    },
    /// Compare the closed form against the brute-force oracle
    Verify {
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Brute-force f(K_{m,n}, kK2) over all edge partitions
    Oracle {
        m: usize,
        n: usize,
        k: usize,
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Count rainbow-free partitions with exactly this many classes instead
        #[arg(long)]
        classes: Option<usize>,
    },
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Input(String),
    Contract(String),
}

impl Failure {
    fn exit_code(&self) -> i32 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Input(_) => 2,
            Failure::Contract(_) => 3,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Domain(e) => write!(f, "{e}"),
            Failure::Input(msg) => f.write_str(msg),
            Failure::Contract(msg) => write!(f, "contract violation: {msg}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit status. The oracle limit falls back to
/// `RAINBOW_LAB_LIMIT`, then to [`DEFAULT_LIMIT`].
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let env_limit = std::env::var(LIMIT_ENV).ok();
    run_with_env(args, env_limit.as_deref(), out, err)
}

pub fn run_with_env<I, T>(
    args: I,
    env_limit: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli, env_limit, out) {
        Ok(()) => 0,
        Err(failure) => {
            let _ = writeln!(err, "error: {failure}");
            failure.exit_code()
        }
    }
}

fn execute(cli: &Cli, env_limit: Option<&str>, out: &mut dyn Write) -> Result<(), Failure> {
    let mut emit = |value: Value| -> Result<(), Failure> {
        let line = match cli.format {
            Format::Json => value.to_string(),
            Format::Text => text_line(&value),
        };
        writeln!(out, "{line}").map_err(|e| Failure::Input(format!("writing output: {e}")))
    };

    match &cli.command {
        &Command::Rb { m, n, k } => {
            let (m, n, swapped) = normalize_orientation(m, n);
            let rb = rb_value(m, n, k)?;
            emit(json!({
                "m": m, "n": n, "k": k, "swapped": swapped,
                "rb": rb.value, "regime": rb.regime.as_str(),
            }))
        }
        Command::Ext { m, n, k, input } => {
            let (m, n, swapped) = normalize_orientation(*m, *n);
            let ext = ext_value(m, n, *k)?;
            let mut value = json!({ "m": m, "n": n, "k": k, "swapped": swapped, "ext": ext });
            if let Some(path) = input {
                let mut g = BipartiteGraph::from_json(&read(path)?)?;
                if g.m() < g.n() {
                    g = g.transposed()?;
                }
                if (g.m(), g.n()) != (m, n) {
                    return Err(Failure::Input(format!(
                        "graph has parts {} and {}, expected {m} and {n}",
                        g.m(),
                        g.n()
                    )));
                }
                let report = inspect(&g, *k)?;
                value["edges"] = json!(g.edge_count());
                value["is_extremal"] = json!(report.is_extremal);
                value["isomorphic_to_canonical"] = json!(report.isomorphic_to_canonical);
                value["witness"] = json!(report.witness.map(|w| w.pairs));
            }
            emit(value)
        }
        Command::BuildExtremalGraph { m, n, k, output } => {
            let (m, n, swapped) = normalize_orientation(*m, *n);
            let g = build_extremal_graph(m, n, *k)?;
            let summary = json!({
                "m": m, "n": n, "k": k, "swapped": swapped, "edge_count": g.edge_count(),
            });
            write_or_emit(output.as_deref(), &g.to_json(), summary, &mut emit)
        }
        Command::BuildExtremalColoring { m, n, k, output } => {
            let (m, n, swapped) = normalize_orientation(*m, *n);
            let c = build_extremal_coloring(m, n, *k)?;
            let summary = json!({
                "m": m, "n": n, "k": k, "swapped": swapped, "color_count": c.color_count(),
            });
            write_or_emit(output.as_deref(), &c.to_json(), summary, &mut emit)
        }
        &Command::FindRainbow { k, ref input } => {
            let c = ColoredCompleteBipartite::from_json(&read(input)?)?;
            let found = find_rainbow(&c, k);
            let mut value = json!({
                "found": found.is_some(), "k": k, "color_count": c.color_count(),
            });
            if let Some(cert) = found {
                if !cert.is_valid_for(&c) || cert.matching.len() != k {
                    return Err(Failure::Contract(
                        "finder returned an invalid certificate".into(),
                    ));
                }
                value["matching"] = json!(cert.matching.pairs);
                value["colors"] = json!(cert.colors_used);
            }
            emit(value)
        }
        &Command::Verify { limit, jobs } => {
            let limit = resolve_limit(limit, env_limit)?;
            let rows = sweep_verify(limit, jobs.max(1))?;
            let disagreements = rows.iter().filter(|r| !r.agree).count();
            for row in &rows {
                emit(serde_json::to_value(row).expect("row serializes"))?;
            }
            if disagreements > 0 {
                return Err(Failure::Contract(format!(
                    "{disagreements} parameter triples disagree with the oracle"
                )));
            }
            Ok(())
        }
        &Command::Oracle {
            m,
            n,
            k,
            limit,
            jobs,
            classes,
        } => {
            let limit = resolve_limit(limit, env_limit)?;
            let jobs = jobs.max(1);
            let (m, n, _) = normalize_orientation(m, n);
            match classes {
                Some(c) => {
                    let count = count_rainbow_free_partitions_parallel(m, n, k, c, limit, jobs)?;
                    emit(json!({ "m": m, "n": n, "k": k, "classes": c, "rainbow_free": count }))
                }
                None => {
                    let r = brute_force_f_parallel(m, n, k, limit, jobs)?;
                    emit(json!({
                        "m": r.m, "n": r.n, "k": r.k, "f": r.f_exact, "rb": r.rb_exact,
                        "partitions": r.partitions_scanned, "witness": r.witness_partition,
                    }))
                }
            }
        }
    }
}

fn resolve_limit(flag: Option<usize>, env_limit: Option<&str>) -> Result<usize, Failure> {
    match (flag, env_limit) {
        (Some(limit), _) => Ok(limit),
        (None, Some(text)) => text
            .trim()
            .parse()
            .map_err(|_| Failure::Input(format!("{LIMIT_ENV} must be an integer, got {text:?}"))),
        (None, None) => Ok(DEFAULT_LIMIT),
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write_or_emit(
    output: Option<&Path>,
    document: &str,
    mut summary: Value,
    emit: &mut dyn FnMut(Value) -> Result<(), Failure>,
) -> Result<(), Failure> {
    match output {
        Some(path) => {
            fs::write(path, document)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            summary["output"] = json!(path.display().to_string());
            emit(summary)
        }
        None => emit(serde_json::from_str(document).expect("document is JSON")),
    }
}

/// `key=value` pairs separated by spaces, in field order.
fn text_line(value: &Value) -> String {
    match value {
        Value::Object(map) => map
            .iter()
            .map(|(key, v)| match v {
                Value::String(s) => format!("{key}={s}"),
                other => format!("{key}={other}"),
            })
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    }
}
