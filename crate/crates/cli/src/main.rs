//! `matpoly`: exact solutions of `p(X) = A` from the command line.
//!
//! Polynomials are JSON coefficient lists, low to high (`[0,0,1]` is λ²).
//! Matrices are `{"rows": [["1","1/2"], ...]}`, given inline, as a file path,
//! or as `-` for stdin. Every number is an exact rational string or integer.
//!
//! Exit codes: 0 success / true, 2 no_solution / false, 3 unknown_derogatory,
//! 1 input or arithmetic error.

use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use matpoly::arith::factor;
use matpoly::canonical::companion_jordan_form;
use matpoly::format::{
    decomposition_to_json, element_to_json, factorization_to_json, outcome_to_json, parse_matrix_text,
    parse_poly_text,
};
use matpoly::numfield::roots_in_extension;
use matpoly::solver::{solve, verify};
use matpoly::{QMatrix, QPoly, SolveStatus};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "matpoly", version, about = "Exact rational solutions of p(X) = A")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Write the JSON result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Find the rational solutions X of p(X) = A.
    Solve {
        /// Coefficients of p, low to high, e.g. '[0,0,1]'.
        #[arg(long)]
        poly: String,
        /// A as inline JSON, a file path, or '-' for stdin.
        #[arg(long)]
        matrix: String,
        /// List every solution rather than only the first.
        #[arg(long)]
        emit_all: bool,
    },
    /// Companion-Jordan form of A with T_inv·A·T block diagonal.
    Cjform {
        #[arg(long)]
        matrix: String,
    },
    /// Roots μ of p(μ) = λ̄ in ℚ[λ]/(g).
    Roots {
        #[arg(long)]
        poly: String,
        /// The monic irreducible g, low to high.
        #[arg(long)]
        modulus: String,
    },
    /// Factor a polynomial over ℚ.
    Factor {
        #[arg(long)]
        poly: String,
    },
    /// Check p(X) = A exactly.
    Verify {
        #[arg(long)]
        poly: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        matrix: String,
    },
}

fn read_source(arg: &str) -> Result<String> {
    let trimmed = arg.trim_start();
    if arg == "-" {
        let mut buf = String::new();
        io::stdin().read_to_string(&mut buf).context("reading stdin")?;
        Ok(buf)
    } else if trimmed.starts_with('{') || trimmed.starts_with('[') {
        Ok(arg.to_string())
    } else {
        fs::read_to_string(arg).with_context(|| format!("reading {arg}"))
    }
}

fn poly_arg(arg: &str) -> Result<QPoly> {
    Ok(parse_poly_text(&read_source(arg)?).context("parsing --poly")?)
}

fn matrix_arg(arg: &str, flag: &str) -> Result<QMatrix> {
    Ok(parse_matrix_text(&read_source(arg)?).with_context(|| format!("parsing {flag}"))?)
}

fn run(command: &Command) -> Result<(Value, u8)> {
    match command {
        Command::Solve { poly, matrix, emit_all } => {
            let p = poly_arg(poly)?;
            let a = matrix_arg(matrix, "--matrix")?;
            if !a.is_square() {
                bail!("--matrix must be square, got {}×{}", a.rows(), a.cols());
            }
            let outcome = solve(&p, &a)?;
            let code = match outcome.status {
                SolveStatus::SolutionsFound => 0,
                SolveStatus::NoSolution => 2,
                SolveStatus::UnknownDerogatory => 3,
            };
            Ok((outcome_to_json(&outcome, *emit_all), code))
        }
        Command::Cjform { matrix } => {
            let a = matrix_arg(matrix, "--matrix")?;
            Ok((decomposition_to_json(&companion_jordan_form(&a)?), 0))
        }
        Command::Roots { poly, modulus } => {
            let p = poly_arg(poly)?;
            let g = poly_arg(modulus)?;
            if !g.is_monic() {
                bail!("--modulus must be monic");
            }
            let roots = roots_in_extension(&p, &g)?;
            Ok((json!({ "roots": roots.iter().map(element_to_json).collect::<Vec<_>>() }), 0))
        }
        Command::Factor { poly } => Ok((factorization_to_json(&factor(&poly_arg(poly)?)?), 0)),
        Command::Verify { poly, x, matrix } => {
            let p = poly_arg(poly)?;
            let x = matrix_arg(x, "--x")?;
            let a = matrix_arg(matrix, "--matrix")?;
            if !x.is_square() {
                bail!("--x must be square");
            }
            let ok = verify(&p, &x, &a)?;
            Ok((json!({ "verified": ok }), if ok { 0 } else { 2 }))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli.command).and_then(|(value, code)| {
        let text = serde_json::to_string_pretty(&value)? + "\n";
        match &cli.output {
            Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
            None => print!("{text}"),
        }
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
