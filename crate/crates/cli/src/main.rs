use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use splitq::parse::{parse_literal, Literal};
use splitq::{Approx, Exact, Scalar, SplitQuaternion};

mod commands;
mod render;

use commands::Outcome;

/// Split-quaternion algebra from the command line.
///
/// Quaternions are written like `1+3i-1/2j+k`. Integer and fractional
/// coefficients are computed exactly; a decimal point anywhere switches to
/// floating point unless `--backend` says otherwise.
#[derive(Parser, Debug)]
#[command(name = "splitq", version)]
struct Cli {
    /// Print a JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Scalar backend; chosen from the literals when omitted.
    #[arg(long, global = true, value_enum)]
    backend: Option<Backend>,

    /// Absolute tolerance of the floating-point backend.
    #[arg(long, global = true, env = "SPLITQ_EPS")]
    eps: Option<f64>,

    /// Seed for witness searches.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Exact,
    Approx,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Causal class, I(q), K(q) and related predicates.
    Classify {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Moore-Penrose inverse.
    Pinv {
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// All n-th roots of a zero divisor.
    Roots {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(short)]
        n: u32,
    },
    /// n-th power.
    Power {
        #[arg(allow_hyphen_values = true)]
        q: String,
        #[arg(short)]
        n: u32,
    },
    /// Solve a x b = d for zero divisors a, b.
    SolveAxb {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Solve a x = 0 for a zero divisor a.
    SolveAx0 {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Solve a x = d for a zero divisor a.
    SolveAxd {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Solve x a = d for a zero divisor a.
    SolveXad {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        d: String,
    },
    /// Decide similarity and print a witness q with q a = b q.
    Similar {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// All solutions of x a = b x.
    SimSolve {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Canonical representative of the similarity class.
    Canonical {
        #[arg(allow_hyphen_values = true)]
        a: String,
    },
    /// Decide consimilarity and print a witness x with x a = b x̄.
    Consimilar {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// All solutions of x a = b x̄.
    ConsimSolve {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Real 4x4 matrices: L(q), R(q), T(a,b) = R(a) - L(b), S(a,b) = R(a) - L(b)F.
    Matrix {
        #[arg(value_enum)]
        kind: MatrixKind,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: Option<String>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    #[value(name = "L")]
    L,
    #[value(name = "R")]
    R,
    #[value(name = "T")]
    T,
    #[value(name = "S")]
    S,
}

impl MatrixKind {
    fn arity(self) -> usize {
        match self {
            MatrixKind::L | MatrixKind::R => 1,
            MatrixKind::T | MatrixKind::S => 2,
        }
    }
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Classify { .. } => "classify",
            Command::Pinv { .. } => "pinv",
            Command::Roots { .. } => "roots",
            Command::Power { .. } => "power",
            Command::SolveAxb { .. } => "solve-axb",
            Command::SolveAx0 { .. } => "solve-ax0",
            Command::SolveAxd { .. } => "solve-axd",
            Command::SolveXad { .. } => "solve-xad",
            Command::Similar { .. } => "similar",
            Command::SimSolve { .. } => "sim-solve",
            Command::Canonical { .. } => "canonical",
            Command::Consimilar { .. } => "consimilar",
            Command::ConsimSolve { .. } => "consim-solve",
            Command::Matrix { .. } => "matrix",
        }
    }

    fn operands(&self) -> Vec<&str> {
        match self {
            Command::Classify { q }
            | Command::Pinv { q }
            | Command::Roots { q, .. }
            | Command::Power { q, .. } => vec![q],
            Command::SolveAx0 { a } | Command::Canonical { a } => vec![a],
            Command::SolveAxb { a, b, d } => vec![a, b, d],
            Command::SolveAxd { a, d } | Command::SolveXad { a, d } => vec![a, d],
            Command::Similar { a, b }
            | Command::SimSolve { a, b }
            | Command::Consimilar { a, b }
            | Command::ConsimSolve { a, b } => vec![a, b],
            Command::Matrix { a, b, .. } => {
                std::iter::once(a).chain(b).map(String::as_str).collect()
            }
        }
    }
}

fn fail(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    if let Command::Matrix { kind, .. } = &cli.command {
        let given = cli.command.operands().len();
        if given != kind.arity() {
            return fail(format_args!(
                "matrix {kind:?} takes {} operand(s), got {given}",
                kind.arity()
            ));
        }
    }
    if let Some(eps) = cli.eps {
        if !(eps > 0.0 && eps.is_finite()) {
            return fail(format_args!("--eps must be a positive number, got {eps}"));
        }
    }

    let texts = cli.command.operands();
    let mut literals = Vec::with_capacity(texts.len());
    for text in &texts {
        match parse_literal(text) {
            Ok(lit) => literals.push(lit),
            Err(e) => return fail(format_args!("cannot parse '{text}': {e}")),
        }
    }
    let backend = cli
        .backend
        .unwrap_or(if literals.iter().any(|l| l.has_decimal) {
            Backend::Approx
        } else {
            Backend::Exact
        });

    let outcome = match backend {
        Backend::Exact => {
            let qs: Vec<SplitQuaternion<Exact>> =
                literals.iter().map(Literal::to_quaternion).collect();
            commands::run(&cli.command, &qs, cli.seed)
        }
        Backend::Approx => {
            let qs: Vec<SplitQuaternion<Approx>> = literals
                .iter()
                .map(|l| {
                    let q = l.to_quaternion::<Approx>();
                    match cli.eps {
                        Some(eps) => q.map(|c| Approx::with_eps(c.value(), eps)),
                        None => q,
                    }
                })
                .collect();
            commands::run(&cli.command, &qs, cli.seed)
        }
    };
    let outcome = match outcome {
        Ok(o) => o,
        Err(e) => return fail(e),
    };

    emit(&cli, backend, &texts, &outcome);
    if !outcome.verified {
        eprintln!("warning: the result did not pass its substitution check");
    }
    match outcome.verdict {
        Some(false) => ExitCode::from(1),
        _ => ExitCode::SUCCESS,
    }
}

fn backend_name(backend: Backend) -> &'static str {
    match backend {
        Backend::Exact => Exact::NAME,
        Backend::Approx => Approx::NAME,
    }
}

fn emit(cli: &Cli, backend: Backend, inputs: &[&str], outcome: &Outcome) {
    if cli.json {
        let doc = json!({
            "op": cli.command.name(),
            "inputs": inputs,
            "result": outcome.result,
            "backend": backend_name(backend),
            "verified": outcome.verified,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&doc).expect("JSON value")
        );
    } else {
        let Value::Object(fields) = &outcome.result else {
            unreachable!("results are objects")
        };
        for line in render::text_lines(fields) {
            println!("{line}");
        }
        println!("verified: {}", outcome.verified);
    }
}
