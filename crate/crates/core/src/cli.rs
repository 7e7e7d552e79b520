//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 for domain, capacity and validation errors
//! (and for a failed `verify`), 2 for usage errors. Error messages are a
//! single line on stderr: `error[<kind>]: <message>`.

use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::css::CssState;
use crate::document::{parse_model, serialize_model, DocumentError, ModelDocument};
use crate::duality::{p_grid, sweep_stability, verify_duality, NoiseKind};
use crate::error::Error;
use crate::zoo;

#[derive(Parser, Debug)]
#[command(
    name = "hypercss",
    version,
    about = "Spin-model / CSS-state duality on hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Io {
    /// Model document to read; standard input when absent or `-`.
    input: Option<PathBuf>,
    /// Output path; standard output when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct ModelOverrides {
    /// Uniform coupling overriding the document's couplings.
    #[arg(long = "J", allow_negative_numbers = true)]
    coupling: Option<f64>,
    /// Inverse temperature overriding the document's beta.
    #[arg(long)]
    beta: Option<f64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write the dual hypergraph.
    Dual(Io),
    /// Write the orthogonal hypergraph.
    Ortho(Io),
    /// Qubit count, X rank and weight distributions of the CSS state on the hypergraph.
    CssInfo(Io),
    /// Exact partition function.
    Partition {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        model: ModelOverrides,
    },
    /// Check Z against the CSS overlap on the dual hypergraph.
    Verify {
        #[command(flatten)]
        io: Io,
        #[command(flatten)]
        model: ModelOverrides,
    },
    /// Stability probability of the dual CSS state over a grid of p.
    Sweep {
        #[command(flatten)]
        io: Io,
        #[arg(long, value_enum)]
        noise: NoiseArg,
        #[arg(long)]
        pmin: f64,
        #[arg(long)]
        pmax: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Emit a model document for a named family.
    Zoo {
        #[arg(value_enum)]
        family: Family,
        /// Size parameters of the family.
        params: Vec<usize>,
        #[command(flatten)]
        model: ModelOverrides,
        /// Output path; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum NoiseArg {
    Bitflip,
    Phaseflip,
}

impl From<NoiseArg> for NoiseKind {
    fn from(n: NoiseArg) -> Self {
        match n {
            NoiseArg::Bitflip => NoiseKind::BitFlip,
            NoiseArg::Phaseflip => NoiseKind::PhaseFlip,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Format {
    Csv,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Family {
    /// Ising model on a ring: N.
    Cycle,
    /// Ising model on a periodic square lattice: LX LY.
    SquareTorus,
    /// Ising model on a periodic cubic lattice: L.
    CubicTorus,
    /// Toric-code hypergraph of a ring: N.
    ToricCycle,
    /// Toric-code hypergraph of a square torus: LX LY.
    ToricSquare,
    /// Toric-code hypergraph of a cubic torus: L.
    ToricCubic,
    /// Hexagonal 2-colex (faces as hyperedges): LX LY.
    HexColex,
    /// Dual of the hexagonal 2-colex, a triangular lattice of 3-body terms: LX LY.
    Triangular,
}

impl Family {
    fn arity(self) -> usize {
        match self {
            Family::Cycle | Family::CubicTorus | Family::ToricCycle | Family::ToricCubic => 1,
            Family::SquareTorus | Family::ToricSquare | Family::HexColex | Family::Triangular => 2,
        }
    }
}

enum Failure {
    Usage(String),
    Domain { kind: &'static str, message: String },
    /// Output already written; exit with this code.
    Exit(i32),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain {
            kind: e.kind(),
            message: e.to_string(),
        }
    }
}

impl From<DocumentError> for Failure {
    fn from(e: DocumentError) -> Self {
        let kind = match e {
            DocumentError::Syntax { .. } => "syntax",
            DocumentError::Validation(_) => "validation",
            DocumentError::Missing(_) => "missing-field",
        };
        Failure::Domain {
            kind,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Domain {
            kind: "io",
            message: e.to_string(),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs the CLI on `argv` (program name first) and returns the exit code.
pub fn run(
    argv: &[String],
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let shown = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = stdout.write_all(shown.as_bytes());
                    0
                }
                _ => {
                    let _ = stderr.write_all(shown.as_bytes());
                    2
                }
            };
        }
    };
    match execute(cli.command, stdin, stdout) {
        Ok(()) => 0,
        Err(Failure::Exit(code)) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error[usage]: {}", one_line(&msg));
            2
        }
        Err(Failure::Domain { kind, message }) => {
            let _ = writeln!(stderr, "error[{kind}]: {}", one_line(&message));
            1
        }
    }
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn read_document(input: &Option<PathBuf>, stdin: &mut dyn Read) -> Result<ModelDocument, Failure> {
    let text = match input {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_model(&text)?)
}

fn emit(out: &Option<PathBuf>, stdout: &mut dyn Write, text: &str) -> Outcome {
    match out {
        Some(path) => fs::write(path, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

/// Shortest representation that round-trips to the same `f64`.
fn fmt_float(x: f64) -> String {
    format!("{x:?}")
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("results always serialize");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct CssInfo {
    n_qubits: usize,
    m_x: usize,
    x_weight_distribution: Vec<u64>,
    z_weight_distribution: Vec<u64>,
}

#[derive(Serialize)]
struct SweepRecord {
    p: f64,
    value: f64,
    noise: NoiseKind,
    n_qubits: usize,
    m_rank: usize,
}

fn execute(command: Command, stdin: &mut dyn Read, stdout: &mut dyn Write) -> Outcome {
    match command {
        Command::Dual(io) => {
            let h = read_document(&io.input, stdin)?.hypergraph()?;
            let doc = ModelDocument::from_hypergraph(&h.dual()?);
            emit(&io.out, stdout, &(serialize_model(&doc) + "\n"))
        }
        Command::Ortho(io) => {
            let h = read_document(&io.input, stdin)?.hypergraph()?;
            let doc = ModelDocument::from_hypergraph(&h.orthogonal()?);
            emit(&io.out, stdout, &(serialize_model(&doc) + "\n"))
        }
        Command::CssInfo(io) => {
            let h = read_document(&io.input, stdin)?.hypergraph()?;
            let css = CssState::from_hypergraph(h)?;
            let info = CssInfo {
                n_qubits: css.num_qubits(),
                m_x: css.x_rank(),
                x_weight_distribution: css.x_weight_distribution()?.counts().to_vec(),
                z_weight_distribution: css.z_weight_distribution()?.counts().to_vec(),
            };
            emit(&io.out, stdout, &to_json(&info))
        }
        Command::Partition { io, model } => {
            let m = read_document(&io.input, stdin)?.spin_model(model.coupling, model.beta)?;
            let z = m.partition_function()?;
            emit(&io.out, stdout, &(fmt_float(z) + "\n"))
        }
        Command::Verify { io, model } => {
            let m = read_document(&io.input, stdin)?.spin_model(model.coupling, model.beta)?;
            let report = verify_duality(&m)?;
            emit(&io.out, stdout, &to_json(&report))?;
            if report.passed() {
                Ok(())
            } else {
                Err(Failure::Exit(1))
            }
        }
        Command::Sweep {
            io,
            noise,
            pmin,
            pmax,
            steps,
            format,
        } => {
            let h = read_document(&io.input, stdin)?.hypergraph()?;
            let curve = sweep_stability(&h, &p_grid(pmin, pmax, steps), noise.into())?;
            let text = match format {
                Format::Csv => {
                    let mut s = String::from("p,value,noise,n_qubits,m_rank\n");
                    for r in &curve.rows {
                        s.push_str(&format!(
                            "{},{},{},{},{}\n",
                            fmt_float(r.p),
                            fmt_float(r.value),
                            curve.noise,
                            curve.n_qubits,
                            curve.m_rank
                        ));
                    }
                    s
                }
                Format::Json => {
                    let records: Vec<SweepRecord> = curve
                        .rows
                        .iter()
                        .map(|r| SweepRecord {
                            p: r.p,
                            value: r.value,
                            noise: curve.noise,
                            n_qubits: curve.n_qubits,
                            m_rank: curve.m_rank,
                        })
                        .collect();
                    to_json(&records)
                }
            };
            emit(&io.out, stdout, &text)
        }
        Command::Zoo {
            family,
            params,
            model,
            out,
        } => {
            if params.len() != family.arity() {
                return Err(Failure::Usage(format!(
                    "{family:?} takes {} size parameter(s), got {}",
                    family.arity(),
                    params.len()
                )));
            }
            let doc = zoo_document(family, &params, &model)?;
            emit(&out, stdout, &(serialize_model(&doc) + "\n"))
        }
    }
}

fn zoo_document(
    family: Family,
    params: &[usize],
    model: &ModelOverrides,
) -> Result<ModelDocument, Failure> {
    let coupling = model.coupling.unwrap_or(1.0);
    let beta = model.beta.unwrap_or(1.0);
    let ising = |g: zoo::Graph| -> Result<ModelDocument, Failure> {
        Ok(ModelDocument::from_spin_model(&zoo::ising_model(&g, coupling, beta)?))
    };
    let structure = |h: crate::Hypergraph| -> ModelDocument {
        let mut doc = ModelDocument::from_hypergraph(&h);
        if let Some(j) = model.coupling {
            doc.couplings = Some(vec![j; h.num_edges()]);
        }
        doc.beta = model.beta;
        doc
    };
    Ok(match family {
        Family::Cycle => ising(zoo::cycle_graph(params[0])?)?,
        Family::SquareTorus => ising(zoo::square_torus(params[0], params[1])?)?,
        Family::CubicTorus => ising(zoo::cubic_torus(params[0])?)?,
        Family::ToricCycle => structure(zoo::toric_code_hypergraph(&zoo::cycle_graph(params[0])?)?),
        Family::ToricSquare => structure(zoo::toric_code_hypergraph(&zoo::square_torus(
            params[0], params[1],
        )?)?),
        Family::ToricCubic => structure(zoo::toric_code_hypergraph(&zoo::cubic_torus(params[0])?)?),
        Family::HexColex => structure(zoo::hexagonal_2colex(params[0], params[1])?),
        Family::Triangular => structure(zoo::hexagonal_2colex(params[0], params[1])?.dual()?),
    })
}
