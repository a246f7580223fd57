//! Command-line front end. [`run`] takes its inputs and output streams as
//! arguments so it can be driven from tests.
//!
//! Exit codes: 0 success or Accept, 1 Reject, 2 precondition or no strategy,
//! 3 parse error, 4 budget exceeded, 5 construction failure (state dumped).

use std::collections::BTreeMap;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{Duration, SystemTime, UNIX_EPOCH};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::certificate::{verify_certificate, Certificate, Verdict};
use crate::construct::{color_choice, hypothesis_report, Strategy};
use crate::error::Error;
use crate::generators::{generate, Family, GenSpec};
use crate::graph::Graph;
use crate::io::{parse_auto, read_certificate, write_certificate, write_dimacs, write_graph6};
use crate::oracle::{exact_b_chromatic, BChromatic, SearchLimits};

pub const EXIT_OK: u8 = 0;
pub const EXIT_REJECT: u8 = 1;
pub const EXIT_PRECONDITION: u8 = 2;
pub const EXIT_PARSE: u8 = 3;
pub const EXIT_BUDGET: u8 = 4;
pub const EXIT_CONSTRUCTION: u8 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "bchrome",
    version,
    about = "b-colorings of regular girth-5 graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    G6,
    Dimacs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StrategyArg {
    Auto,
    NoC6,
    BoundedC6,
    TwoBunch,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a graph.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 3)]
        d: usize,
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        girth_min: usize,
        #[arg(long, value_enum, default_value = "g6")]
        format: Format,
    },
    /// Structural summary: regularity, girth, six-cycle counts, closed bunches.
    Info {
        file: String,
        #[arg(long)]
        vertex: Option<usize>,
    },
    /// Per-vertex hypothesis report with scope flags.
    Hypcheck { file: String },
    /// Build and self-verify a certificate.
    Color {
        file: String,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        #[arg(long)]
        vertex: Option<usize>,
        /// Certificate destination; without it the certificate goes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a certificate against a graph.
    Verify { file: String, cert: PathBuf },
    /// Exact b-chromatic number by exhaustive search.
    Bchrom {
        file: String,
        /// Seconds per probed k.
        #[arg(long)]
        time_budget: Option<f64>,
        #[arg(long)]
        node_budget: Option<u64>,
        #[arg(long)]
        max_vertices: Option<usize>,
    },
}

/// Where a failure is reported and with which exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::MalformedGraph6 { .. }
            | Error::MalformedDimacs { .. }
            | Error::SchemaViolation { .. } => EXIT_PARSE,
            Error::ConstructionFailed { .. }
            | Error::RepairStuck { .. }
            | Error::HallFailure { .. }
            | Error::InternalInvariantViolation(_) => EXIT_CONSTRUCTION,
            _ => EXIT_PRECONDITION,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(what: &str, e: io::Error) -> Failure {
    Failure {
        code: EXIT_PARSE,
        message: format!("{what}: {e}"),
    }
}

struct Context<'a, R, O, E> {
    stdin: Option<R>,
    out: &'a mut O,
    err: &'a mut E,
}

impl<R, O, E> Context<'_, R, O, E>
where
    R: FnOnce() -> io::Result<Vec<u8>>,
    O: Write,
    E: Write,
{
    fn read_bytes(&mut self, path: &str) -> Result<Vec<u8>, Failure> {
        if path == "-" {
            let reader = self.stdin.take().ok_or(Failure {
                code: EXIT_PARSE,
                message: "stdin already consumed".into(),
            })?;
            reader().map_err(|e| io_failure("stdin", e))
        } else {
            std::fs::read(path).map_err(|e| io_failure(path, e))
        }
    }

    fn read_graph(&mut self, path: &str) -> Result<(Graph, String), Failure> {
        let bytes = self.read_bytes(path)?;
        let digest = hex::encode(Sha256::digest(&bytes));
        let text = String::from_utf8(bytes).map_err(|_| Failure {
            code: EXIT_PARSE,
            message: format!("{path}: input is not UTF-8"),
        })?;
        Ok((parse_auto(&text)?, format!("sha256:{digest}")))
    }

    fn print(&mut self, text: &str) -> Result<(), Failure> {
        writeln!(self.out, "{text}").map_err(|e| io_failure("stdout", e))
    }

    fn note(&mut self, text: &str) {
        let _ = writeln!(self.err, "{text}");
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value).map_err(|e| Failure {
        code: EXIT_PARSE,
        message: e.to_string(),
    })
}

/// Runs the command line `args` (program name first) and returns the exit
/// code. `stdin` is called at most once, when a file argument is `-`.
pub fn run<R, O, E>(args: &[String], stdin: R, out: &mut O, err: &mut E) -> u8
where
    R: FnOnce() -> io::Result<Vec<u8>>,
    O: Write,
    E: Write,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    let mut ctx = Context {
        stdin: Some(stdin),
        out,
        err,
    };
    match dispatch(cli.command, &mut ctx) {
        Ok(code) => code,
        Err(f) => {
            ctx.note(&format!("error: {}", f.message));
            f.code
        }
    }
}

fn dispatch<R, O, E>(command: Command, ctx: &mut Context<'_, R, O, E>) -> Result<u8, Failure>
where
    R: FnOnce() -> io::Result<Vec<u8>>,
    O: Write,
    E: Write,
{
    match command {
        Command::Gen {
            family,
            d,
            n,
            seed,
            girth_min,
            format,
        } => {
            let spec = GenSpec {
                family: family.parse::<Family>()?,
                d,
                n,
                girth_min,
                seed,
                max_attempts: 50,
            };
            let g = generate(&spec)?;
            let text = match format {
                Format::G6 => write_graph6(&g)?,
                Format::Dimacs => write_dimacs(&g),
            };
            ctx.print(text.trim_end())?;
            Ok(EXIT_OK)
        }
        Command::Info { file, vertex } => {
            let (g, _) = ctx.read_graph(&file)?;
            if let Some(v) = vertex {
                g.check_vertex(v)?;
            }
            ctx.print(&to_json(&info(&g, vertex))?)?;
            Ok(EXIT_OK)
        }
        Command::Hypcheck { file } => {
            let (g, _) = ctx.read_graph(&file)?;
            ctx.print(&to_json(&hypothesis_report(&g))?)?;
            Ok(EXIT_OK)
        }
        Command::Color {
            file,
            strategy,
            vertex,
            out,
        } => {
            let (g, digest) = ctx.read_graph(&file)?;
            let chosen = match strategy {
                StrategyArg::Auto => None,
                StrategyArg::NoC6 => Some(Strategy::NoC6),
                StrategyArg::BoundedC6 => Some(Strategy::BoundedC6),
                StrategyArg::TwoBunch => Some(Strategy::TwoBunch),
            };
            let result = color_choice(&g, chosen, vertex);
            let mut cert = match result {
                Ok(cert) => cert,
                Err(
                    e @ (Error::ConstructionFailed { .. }
                    | Error::RepairStuck { .. }
                    | Error::HallFailure { .. }
                    | Error::InternalInvariantViolation(_)),
                ) => {
                    match dump_failure(&g, &e) {
                        Ok(path) => ctx.note(&format!("state dumped to {}", path.display())),
                        Err(io) => ctx.note(&format!("could not write failure dump: {io}")),
                    }
                    return Err(e.into());
                }
                Err(e) => return Err(e.into()),
            };
            cert.provenance = Some(digest);
            if let Verdict::Reject(reason) = verify_certificate(&cert, &g) {
                return Err(Failure {
                    code: EXIT_CONSTRUCTION,
                    message: format!("constructed certificate rejected: {reason}"),
                });
            }
            let json = write_certificate(&cert)?;
            let table = b_vertex_table(&cert);
            match out {
                Some(path) => {
                    std::fs::write(&path, json + "\n")
                        .map_err(|e| io_failure(&path.display().to_string(), e))?;
                    ctx.print(table.trim_end())?;
                }
                None => {
                    ctx.print(&json)?;
                    ctx.note(table.trim_end());
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { file, cert } => {
            let (g, _) = ctx.read_graph(&file)?;
            let text = std::fs::read_to_string(&cert)
                .map_err(|e| io_failure(&cert.display().to_string(), e))?;
            let cert = read_certificate(&text)?;
            match verify_certificate(&cert, &g) {
                Verdict::Accept => {
                    ctx.print(&format!("Accept (k = {})", cert.k))?;
                    Ok(EXIT_OK)
                }
                Verdict::Reject(reason) => {
                    ctx.print(&format!("Reject: {reason}"))?;
                    Ok(EXIT_REJECT)
                }
            }
        }
        Command::Bchrom {
            file,
            time_budget,
            node_budget,
            max_vertices,
        } => {
            let (g, _) = ctx.read_graph(&file)?;
            let mut lim = SearchLimits::default();
            if let Some(s) = time_budget {
                lim.time_budget = Duration::try_from_secs_f64(s).map_err(|e| {
                    Failure::from(Error::InvalidParameter(format!("time budget: {e}")))
                })?;
            }
            if let Some(n) = node_budget {
                lim.node_budget = n;
            }
            if let Some(n) = max_vertices {
                lim.max_vertices = n;
            }
            match exact_b_chromatic(&g, &lim) {
                BChromatic::Exact(k) => {
                    ctx.print(&k.to_string())?;
                    Ok(EXIT_OK)
                }
                BChromatic::LowerBoundOnly(k) => {
                    ctx.print(&format!("LowerBoundOnly({k})"))?;
                    Ok(EXIT_BUDGET)
                }
            }
        }
    }
}

fn b_vertex_table(cert: &Certificate) -> String {
    let mut s = format!(
        "strategy {} center {} k {}\nclass  b-vertex\n",
        cert.strategy, cert.center, cert.k
    );
    for (class, v) in &cert.b_vertices {
        s.push_str(&format!("{class:>5}  {v}\n"));
    }
    s
}

#[derive(Serialize)]
struct VertexInfo {
    vertex: usize,
    c6_through: usize,
    c6_in_n2: Option<usize>,
    closed_bunches: Option<usize>,
}

#[derive(Serialize)]
struct Info {
    n: usize,
    m: usize,
    regular: bool,
    degree: Option<usize>,
    girth: Option<usize>,
    /// Number of vertices with each closed-bunch count.
    closed_bunch_census: BTreeMap<usize, usize>,
    vertices: Vec<VertexInfo>,
}

fn info(g: &Graph, vertex: Option<usize>) -> Info {
    let report = hypothesis_report(g);
    let mut census = BTreeMap::new();
    for v in &report.vertices {
        if let Some(c) = v.closed_bunches {
            *census.entry(c).or_insert(0) += 1;
        }
    }
    Info {
        n: report.n,
        m: report.m,
        regular: report.degree.is_some(),
        degree: report.degree,
        girth: report.girth,
        closed_bunch_census: census,
        vertices: report
            .vertices
            .into_iter()
            .filter(|v| vertex.is_none_or(|x| x == v.vertex))
            .map(|v| VertexInfo {
                vertex: v.vertex,
                c6_through: v.c6_through,
                c6_in_n2: v.c6_in_n2,
                closed_bunches: v.closed_bunches,
            })
            .collect(),
    }
}

/// Writes the graph and the failure log next to the working directory, or
/// under `BCHROME_DUMP_DIR` when set.
fn dump_failure(g: &Graph, e: &Error) -> io::Result<PathBuf> {
    let dir = std::env::var_os("BCHROME_DUMP_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| Path::new(".").to_path_buf());
    let stamp = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_millis())
        .unwrap_or(0);
    let path = dir.join(format!(
        "bchrome-failure-{stamp}-{}.txt",
        std::process::id()
    ));
    let mut text = String::new();
    text.push_str(write_graph6(g).unwrap_or_default().trim_end());
    text.push('\n');
    text.push_str(&format!("error: {e}\n"));
    if let Error::ConstructionFailed { log, .. } = e {
        for line in log {
            text.push_str(line);
            text.push('\n');
        }
    }
    std::fs::write(&path, text)?;
    Ok(path)
}
