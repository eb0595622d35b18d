//! `superalg`: build superalgebras, check identities, analyze structure and
//! run verification suites. Exit status 0 means pass, 1 means a check ran and
//! failed (the witness is in the output), 2 means a usage or input error.

mod build;
mod parse;

use std::io::Read;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};
use superalg::analysis::{centroid, centroid_is_field, ideal_generated, is_simple, peirce, u_grading};
use superalg::construct::{grassmann_envelope, kantor_double};
use superalg::json::{
    algebra_from_json, algebra_to_json, bracket_from_json, certificate_value, element_value, render, report_value,
    subspace_value, suite_value,
};
use superalg::verifier::run_suite;
use superalg::{Characteristic, Exec, Identity, Superalgebra};

#[derive(Parser)]
#[command(name = "superalg", version, about = "Exact computations with finite-dimensional superalgebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the structure constants of a standard algebra.
    Build(BuildArgs),
    /// Check an identity on an algebra file.
    Check {
        /// Algebra JSON file, or `-` for standard input.
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        identity: String,
        /// Evaluate on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Structural analysis of an algebra file.
    Analyze(AnalyzeArgs),
    /// Run a verification suite.
    Suite {
        name: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Grassmann envelope of an algebra file.
    Envelope {
        #[arg(default_value = "-")]
        file: String,
        #[arg(long)]
        m: usize,
    },
    /// Kantor double of an algebra file and a bracket file.
    Double {
        file: String,
        #[arg(long)]
        bracket: String,
    },
}

#[derive(Args)]
pub struct BuildArgs {
    pub name: String,
    #[arg(long = "char", default_value_t = 0)]
    pub characteristic: u64,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Parameter of the `dt` family, e.g. `1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub t: Option<String>,
    /// Symmetric matrix, rows separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    pub gram: Option<String>,
    /// Skew matrix for the odd part of a superform algebra.
    #[arg(long, allow_hyphen_values = true)]
    pub skew: Option<String>,
    #[arg(long)]
    pub input: Option<String>,
    /// `poisson` or `vector`.
    #[arg(long)]
    pub bracket: Option<String>,
    /// Variable differentiated by the vector-type bracket.
    #[arg(long)]
    pub var: Option<usize>,
}

#[derive(Args)]
#[command(group(ArgGroup::new("mode").required(true).args(["centroid", "simple", "ideal", "peirce", "ugrading"])))]
struct AnalyzeArgs {
    #[arg(default_value = "-")]
    file: String,
    #[arg(long)]
    centroid: bool,
    #[arg(long)]
    simple: bool,
    /// Generator of the ideal: coefficients `1,0,0` or terms `e1 + x`.
    #[arg(long, allow_hyphen_values = true)]
    ideal: Option<String>,
    /// An even idempotent.
    #[arg(long, allow_hyphen_values = true)]
    peirce: Option<String>,
    /// Elements separated by `;`.
    #[arg(long, allow_hyphen_values = true)]
    ugrading: Option<String>,
}

pub fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("reading standard input: {e}"))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn load(path: &str) -> Result<Superalgebra, String> {
    let text = read_source(path)?;
    algebra_from_json(&text).map_err(|e| format!("{path}: {e}"))
}

fn err(e: superalg::Error) -> String {
    e.to_string()
}

/// Output document and whether the check passed.
fn run(cli: Cli) -> Result<(String, bool), String> {
    match cli.command {
        Command::Build(args) => {
            let ch = Characteristic::new(args.characteristic).map_err(err)?;
            Ok((build::build(&args, ch)?, true))
        }
        Command::Check { file, identity, sequential } => {
            let id = Identity::from_name(&identity).ok_or_else(|| {
                let names: Vec<&str> = Identity::ALL.iter().map(|i| i.name()).collect();
                format!("unknown identity {identity:?}; expected one of {}", names.join(", "))
            })?;
            let a = load(&file)?;
            let exec = if sequential { Exec::Sequential } else { Exec::default() };
            let r = id.check(&a, exec);
            Ok((render(&report_value(&r)), r.passed()))
        }
        Command::Analyze(args) => analyze(args),
        Command::Suite { name, seed } => {
            let r = run_suite(&name, seed).map_err(err)?;
            Ok((render(&suite_value(&r)), r.passed))
        }
        Command::Envelope { file, m } => {
            let a = load(&file)?;
            Ok((algebra_to_json(&grassmann_envelope(&a, m).map_err(err)?), true))
        }
        Command::Double { file, bracket } => {
            let a = load(&file)?;
            let br = bracket_from_json(&a, &read_source(&bracket)?).map_err(|e| format!("{bracket}: {e}"))?;
            Ok((algebra_to_json(&kantor_double(&br).map_err(err)?), true))
        }
    }
}

fn matrix_value(m: &superalg::linalg::Matrix) -> Value {
    let rows: Vec<Vec<String>> =
        (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_fraction_string()).collect()).collect();
    json!(rows)
}

fn analyze(args: AnalyzeArgs) -> Result<(String, bool), String> {
    let a = load(&args.file)?;
    if args.simple {
        let s = is_simple(&a).map_err(err)?;
        return Ok((render(&certificate_value(&s)), s.simple));
    }
    if args.centroid {
        let c = centroid(&a).map_err(err)?;
        let field = match centroid_is_field(&c) {
            Ok(b) => json!(b),
            Err(superalg::Error::Undecided(_)) => Value::Null,
            Err(e) => return Err(e.to_string()),
        };
        let basis: Vec<Value> = c.iter().map(|op| matrix_value(op.matrix())).collect();
        return Ok((render(&json!({ "centroid_dim": c.len(), "is_field": field, "basis": basis })), true));
    }
    if let Some(v) = args.ideal {
        let x = parse::element(&a, &v)?;
        let s = ideal_generated(&a, &x).map_err(err)?;
        let doc = json!({ "generator": element_value(&x), "dim": s.dim(), "proper": !s.is_zero() && !s.is_full(), "ideal": subspace_value(&s) });
        return Ok((render(&doc), true));
    }
    if let Some(v) = args.peirce {
        let e = parse::element(&a, &v)?;
        let p = peirce(&a, &e).map_err(err)?;
        let doc = json!({
            "idempotent": element_value(&e),
            "zero": subspace_value(&p.zero),
            "half": subspace_value(&p.half),
            "one": subspace_value(&p.one),
        });
        return Ok((render(&doc), true));
    }
    if let Some(v) = args.ugrading {
        let vs = parse::elements(&a, &v)?;
        let g = u_grading(&a, &vs).map_err(err)?;
        let parts: Vec<Value> = g
            .parts
            .iter()
            .map(|(t, s)| json!({ "tag": t.to_string(), "monomial": t.monomial(), "basis": subspace_value(s) }))
            .collect();
        return Ok((render(&json!({ "parts": parts })), true));
    }
    unreachable!("clap requires one mode")
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((doc, passed)) => {
            println!("{doc}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("superalg: {msg}");
            ExitCode::from(2)
        }
    }
}
