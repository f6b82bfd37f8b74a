//! Command line front end. Every command prints one JSON document; element
//! strings use the same grammar accepted on input.

use crate::error::{Error, Result};
use crate::hecke::{eigenspace_in_w_multi, HeckeEngine};
use crate::hurwitz::{expand, Mat2};
use crate::linalg::{Matrix, Scalar, SubspaceBasis};
use crate::periods::cusp_matrix;
use crate::quadfield::{parse_elem, parse_kappa, Field, QuadElem, QuadInt};
use crate::relations::wkk_basis;
use crate::verify::run_verify;
use crate::MAX_WEIGHT;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use std::fmt::Display;
use std::path::PathBuf;

#[derive(Parser, Debug)]
#[command(name = "bianchi", version, about = "Exact Bianchi period and Hecke computations")]
pub struct Cli {
    /// Write the JSON result to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug)]
pub struct FieldArg {
    /// Discriminant parameter D of Q(sqrt(-D)), one of 1, 2, 3, 7, 11.
    #[arg(long = "d", allow_hyphen_values = true)]
    pub d: i64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hurwitz continued fraction of a cusp.
    Cf {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
    },
    /// Basis of W_{k,k} and its quotient by the coboundary line.
    Wkk {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        k: usize,
    },
    /// The cusp matrix M(kappa) on period coordinates.
    Transport {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        kappa: String,
    },
    /// The Hecke matrix A(n).
    Hecke {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
    },
    /// Joint eigenspace inside W_{k,k} for pairs "n1:lambda1,n2:lambda2".
    Eigen {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        pairs: String,
    },
    /// Run the self-checks for one field up to weight k.
    Verify {
        #[command(flatten)]
        field: FieldArg,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 20)]
        norm_bound: u64,
    },
}

#[derive(Serialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<String>>,
}

fn matrix_json<T: Scalar + Display>(m: &Matrix<T>) -> MatrixJson {
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.to_rows().iter().map(|r| strings(r)).collect(),
    }
}

fn strings<T: Display>(v: &[T]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn basis_json(b: &SubspaceBasis) -> Vec<Vec<String>> {
    b.vectors.iter().map(|v| strings(v)).collect()
}

fn mat2_json(g: &Mat2) -> [[String; 2]; 2] {
    [[g.a.to_string(), g.b.to_string()], [g.c.to_string(), g.d.to_string()]]
}

#[derive(Serialize)]
struct ConvergentJson {
    n: isize,
    mu: String,
    nu: String,
}

#[derive(Serialize)]
struct CfJson {
    d: u32,
    kappa: String,
    betas: Vec<String>,
    convergents: Vec<ConvergentJson>,
    matrices: Vec<[[String; 2]; 2]>,
}

#[derive(Serialize)]
struct WkkJson {
    d: u32,
    k: usize,
    dim_w: usize,
    dim_w_tilde: usize,
    basis: Vec<Vec<String>>,
    basis_w_tilde: Vec<Vec<String>>,
    coboundary_in_w: bool,
}

#[derive(Serialize)]
struct TransportJson {
    d: u32,
    k: usize,
    kappa: String,
    matrix: MatrixJson,
}

#[derive(Serialize)]
struct DivisorJson {
    d: String,
    cofactor: String,
    residues: Vec<String>,
}

#[derive(Serialize)]
struct HeckeJson {
    d: u32,
    k: usize,
    n: String,
    matrix: MatrixJson,
    representative_log: Vec<DivisorJson>,
}

#[derive(Serialize)]
struct PairJson {
    n: String,
    lambda: String,
}

#[derive(Serialize)]
struct EigenJson {
    d: u32,
    k: usize,
    pairs: Vec<PairJson>,
    dim: usize,
    basis_periods: Vec<Vec<String>>,
    basis_monomial: Vec<Vec<String>>,
    w_tilde_image: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct ErrorJson<'a> {
    error: ErrorBody<'a>,
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    kind: &'a str,
    message: String,
}

/// Structured error document written to standard error.
pub fn error_json(err: &Error) -> String {
    let body = ErrorJson { error: ErrorBody { kind: err.kind(), message: err.to_string() } };
    serde_json::to_string(&body).expect("error serializes")
}

fn check_weight(k: usize) -> Result<usize> {
    if k > MAX_WEIGHT {
        Err(Error::WeightOutOfRange(k))
    } else {
        Ok(k)
    }
}

fn parse_integer(field: Field, text: &str) -> Result<QuadInt> {
    parse_elem(field, text)?
        .to_integer()
        .ok_or_else(|| Error::Parse { what: "ring integer", input: text.to_string() })
}

fn parse_pairs(field: Field, text: &str) -> Result<Vec<(QuadInt, QuadElem)>> {
    let bad = || Error::Parse { what: "eigen pairs", input: text.to_string() };
    let pairs: Vec<_> = text
        .split(',')
        .map(|item| {
            let (n, lambda) = item.split_once(':').ok_or_else(bad)?;
            let n = parse_integer(field, n)?;
            if n.is_zero() {
                return Err(Error::ZeroArgument("eigenspace_in_w"));
            }
            Ok((n, parse_kappa(field, lambda)?))
        })
        .collect::<Result<_>>()?;
    if pairs.is_empty() {
        return Err(bad());
    }
    Ok(pairs)
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output serializes")
}

/// Outcome of a successful command: the JSON text and whether the command
/// considers its result a pass (only `verify` can report `false`).
pub struct Outcome {
    pub json: String,
    pub ok: bool,
}

pub fn execute(command: &Command) -> Result<Outcome> {
    let done = |json: String| Ok(Outcome { json, ok: true });
    match command {
        Command::Cf { field, kappa } => {
            let field = Field::from_d(field.d)?;
            let kappa = parse_kappa(field, kappa)?;
            let cf = expand(&kappa);
            let convergents = cf
                .convergents
                .iter()
                .enumerate()
                .map(|(i, (mu, nu))| ConvergentJson {
                    n: i as isize - 2,
                    mu: mu.to_string(),
                    nu: nu.to_string(),
                })
                .collect();
            done(to_json(&CfJson {
                d: field.d(),
                kappa: kappa.to_string(),
                betas: strings(&cf.betas),
                convergents,
                matrices: cf.matrices.iter().map(mat2_json).collect(),
            }))
        }
        Command::Wkk { field, k } => {
            let field = Field::from_d(field.d)?;
            let w = wkk_basis(field, check_weight(*k)?);
            done(to_json(&WkkJson {
                d: field.d(),
                k: *k,
                dim_w: w.w.dim(),
                dim_w_tilde: w.w_tilde.dim(),
                basis: basis_json(&w.w),
                basis_w_tilde: basis_json(&w.w_tilde),
                coboundary_in_w: w.contains_coboundary,
            }))
        }
        Command::Transport { field, k, kappa } => {
            let field = Field::from_d(field.d)?;
            let k = check_weight(*k)?;
            let kappa = parse_kappa(field, kappa)?;
            done(to_json(&TransportJson {
                d: field.d(),
                k,
                kappa: kappa.to_string(),
                matrix: matrix_json(&cusp_matrix(&kappa, k)),
            }))
        }
        Command::Hecke { field, k, n } => {
            let field = Field::from_d(field.d)?;
            let k = check_weight(*k)?;
            let n = parse_integer(field, n)?;
            let h = HeckeEngine::new(field, k).hecke_matrix(&n)?;
            done(to_json(&HeckeJson {
                d: field.d(),
                k,
                n: h.n.to_string(),
                matrix: matrix_json(&h.matrix),
                representative_log: h
                    .representative_log
                    .iter()
                    .map(|t| DivisorJson {
                        d: t.d.to_string(),
                        cofactor: t.cofactor.to_string(),
                        residues: strings(&t.residues),
                    })
                    .collect(),
            }))
        }
        Command::Eigen { field, k, pairs } => {
            let field = Field::from_d(field.d)?;
            let k = check_weight(*k)?;
            let pairs = parse_pairs(field, pairs)?;
            let space = eigenspace_in_w_multi(&HeckeEngine::new(field, k), &pairs)?;
            done(to_json(&EigenJson {
                d: field.d(),
                k,
                pairs: pairs
                    .iter()
                    .map(|(n, l)| PairJson { n: n.to_string(), lambda: l.to_string() })
                    .collect(),
                dim: space.periods.dim(),
                basis_periods: basis_json(&space.periods),
                basis_monomial: basis_json(&space.in_w),
                w_tilde_image: basis_json(&space.w_tilde_image),
            }))
        }
        Command::Verify { field, k, norm_bound } => {
            let field = Field::from_d(field.d)?;
            let report = run_verify(field, check_weight(*k)?, *norm_bound);
            Ok(Outcome { json: to_json(&report), ok: report.all_passed() })
        }
    }
}

/// Configure the worker pool from `BIANCHI_WORKERS` when it is set.
pub fn configure_workers() {
    if let Some(n) = std::env::var("BIANCHI_WORKERS").ok().and_then(|v| v.parse::<usize>().ok()) {
        // a second initialisation attempt is harmless
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}
