//! `kleinian`: command-line front end for the deformation library.
//!
//! Every verb prints one JSON value on standard output. Exit status is 0 on
//! success, 2 when the input cannot be parsed or violates a precondition,
//! and 1 when `verify` finds a failing check.

mod commands;

use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use serde_json::json;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    DeriveP,
    DeriveQ,
    Reduce,
    Commutator,
    Center,
    IsCentral,
    Diamond,
    Degree,
    IsoD,
    IsoH,
    Aut,
    Orbit,
    Moduli,
    Semiclassical,
    Verify,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlgebraArg {
    H,
    D,
}

#[derive(Debug, Parser)]
#[command(name = "kleinian", version, about = "Exact computations in deformations of type D Kleinian singularities")]
pub struct Cli {
    /// Operation to run.
    #[arg(value_enum)]
    pub verb: Verb,

    /// Presentation: H(P, gamma) or D(Q, gamma).
    #[arg(long, value_enum, default_value = "d")]
    pub algebra: AlgebraArg,

    /// Polynomial Q in t (monic, degree >= 3).
    #[arg(long, allow_hyphen_values = true)]
    pub q: Option<String>,

    /// Polynomial P in t (leading term n t^(n-1)).
    #[arg(long, allow_hyphen_values = true)]
    pub p: Option<String>,

    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub gamma: String,

    /// Word expression in u, v, w.
    #[arg(long, allow_hyphen_values = true)]
    pub expr: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub expr2: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub q2: Option<String>,

    #[arg(long, allow_hyphen_values = true)]
    pub p2: Option<String>,

    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    pub gamma2: String,

    /// Seed for `verify`.
    #[arg(long, default_value_t = 20240601)]
    pub seed: u64,

    /// Largest standard degree of random elements in `verify`.
    #[arg(long, default_value_t = 20)]
    pub max_degree: u64,

    /// Run batch work on the calling thread only.
    #[arg(long)]
    pub sequential: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let message = e.render().to_string();
            println!("{}", json!({ "error": { "kind": "Usage", "message": message.trim() } }));
            return ExitCode::from(2);
        }
    };
    match commands::run(&cli) {
        Ok((value, ok)) => {
            println!("{value}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!("{}", json!({ "error": { "kind": e.kind(), "message": e.to_string() } }));
            ExitCode::from(2)
        }
    }
}
