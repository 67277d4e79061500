//! `schurq`: projective Schur functions and BKP tau functions from the command line.
//!
//! Exit status: 0 on success or all checks passing, 1 if an identity check
//! fails, 2 on usage or input errors.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use schurq::gseries::BiSeries;
use schurq::ops::check_linear_eq_n1;
use schurq::partition::{count_shifted_syt, Partition, StrictPartition};
use schurq::pfaffian::{check_pfaffian_r, check_pfaffian_s};
use schurq::qschur::{q_lambda, schur_s};
use schurq::rational::{int, parse_rational};
use schurq::rspec::{check_reflection, hook_star, shipped_specs};
use schurq::tau::{
    check_cauchy, check_one_var, check_scalar_tau, check_square, check_symmetry_scaling, check_tinfty_reduction,
    hyper_one_var, render_pair, tau_bkp, tau_hyper_tinfty,
};
use schurq::{RSpec, Rational, TauReport};

#[derive(Parser)]
#[command(name = "schurq", version, about = "Projective Schur Q-functions and BKP hypergeometric tau functions")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Q_lambda(t/2) for a strict partition.
    Qfun {
        #[arg(long, value_parser = parse_parts)]
        lambda: Parts,
        #[arg(long)]
        weight: u32,
    },
    /// Schur function s_mu at odd times.
    Schur {
        #[arg(long, value_parser = parse_parts)]
        mu: Parts,
        #[arg(long)]
        weight: u32,
    },
    /// BKP hypergeometric tau function as a series in t and t*.
    Tau {
        #[arg(long)]
        r: RSpec,
        #[arg(long)]
        weight: u32,
        /// Truncation in t*; defaults to --weight.
        #[arg(long)]
        wstar: Option<u32>,
    },
    /// Hypergeometric series: one-variable coefficients, or the series in t at t* = t_infty.
    Hyper {
        #[arg(long, value_parser = parse_rationals, default_value = "")]
        a: Rationals,
        #[arg(long, value_parser = parse_rationals, default_value = "")]
        b: Rationals,
        /// Coefficients of x^0..x^order.
        #[arg(long, conflicts_with = "weight")]
        order: Option<u32>,
        /// Series in t truncated at this weight.
        #[arg(long)]
        weight: Option<u32>,
    },
    /// Identity suites; prints one report per check.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 8)]
        weight: u32,
        /// Restrict spec-dependent suites to one spec (default: all shipped specs).
        #[arg(long)]
        r: Option<RSpec>,
        /// Scaling parameter of the symmetry suite.
        #[arg(long, value_parser = parse_rational_arg, default_value = "2")]
        a: Rational,
    },
    /// Pfaffian representations: S (symbolic, cleared denominators) or R (sampled points).
    PfaffianCheck {
        #[arg(long)]
        r: RSpec,
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Matrix::S)]
        matrix: Matrix,
        /// Total degree in x, y for the S check.
        #[arg(long, default_value_t = 10)]
        degree: u32,
        /// Weight in t* for the R check.
        #[arg(long, default_value_t = 8)]
        weight: u32,
    },
    /// Linear equation for tau at one point x.
    LinearCheck {
        #[arg(long)]
        r: RSpec,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = 8)]
        order: u32,
        /// Weight in t*; defaults to --order.
        #[arg(long)]
        weight: Option<u32>,
    },
    /// Shifted standard tableaux count and shifted hook product.
    Tableaux {
        #[arg(long, value_parser = parse_parts)]
        lambda: Parts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Cauchy,
    Square,
    Symmetry,
    Tinfty,
    OneVar,
    Scalar,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Matrix {
    S,
    R,
}

#[derive(Clone)]
struct Parts(Vec<u32>);

#[derive(Clone)]
struct Rationals(Vec<Rational>);

fn parse_parts(s: &str) -> Result<Parts, String> {
    if s.trim().is_empty() {
        return Ok(Parts(vec![]));
    }
    s.split(',')
        .map(|p| p.trim().parse::<u32>().map_err(|e| format!("{p:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(Parts)
}

fn parse_rationals(s: &str) -> Result<Rationals, String> {
    if s.trim().is_empty() {
        return Ok(Rationals(vec![]));
    }
    s.split(',').map(|p| parse_rational(p.trim()).map_err(|e| e.to_string())).collect::<Result<_, _>>().map(Rationals)
}

fn parse_rational_arg(s: &str) -> Result<Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Identity,
}

impl From<schurq::Error> for Failure {
    fn from(e: schurq::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn render_bi(s: &BiSeries) -> String {
    if s.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = s
        .terms()
        .map(|((m, ms), c)| {
            let mono = render_pair(m, ms);
            if mono == "1" {
                c.to_string()
            } else if *c == int(1) {
                mono
            } else {
                format!("{c}*{mono}")
            }
        })
        .collect();
    terms.join(" + ").replace("+ -", "- ")
}

fn emit(json: bool, value: &impl Serialize, text: String) {
    if json {
        println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
    } else {
        println!("{text}");
    }
}

fn emit_reports(json: bool, reports: &[TauReport]) -> Result<(), Failure> {
    if json {
        println!("{}", serde_json::to_string_pretty(reports).expect("serializable"));
    } else {
        for r in reports {
            println!("{}", r.summary());
        }
    }
    if reports.iter().all(|r| r.pass) {
        Ok(())
    } else {
        Err(Failure::Identity)
    }
}

fn bkp_specs(only: &Option<RSpec>) -> Vec<RSpec> {
    match only {
        Some(s) => vec![s.clone()],
        None => shipped_specs().into_iter().filter(|s| check_reflection(s, 20)).collect(),
    }
}

fn verify(suite: Suite, weight: u32, only: &Option<RSpec>, a: &Rational) -> Result<Vec<TauReport>, Failure> {
    let mut out = Vec::new();
    let all = matches!(suite, Suite::All);
    if all || matches!(suite, Suite::Cauchy) {
        out.push(check_cauchy(weight));
    }
    if all || matches!(suite, Suite::Square) {
        for s in bkp_specs(only) {
            out.push(check_square(&s, weight)?);
        }
    }
    if all || matches!(suite, Suite::Symmetry) {
        for s in bkp_specs(only) {
            out.push(check_symmetry_scaling(&s, a, weight)?);
        }
    }
    if all || matches!(suite, Suite::Tinfty) {
        let closed = bkp_specs(only)
            .into_iter()
            .filter(|s| matches!(s, RSpec::RationalPS { .. } | RSpec::SymmetricRational { .. }));
        for s in closed {
            out.push(check_tinfty_reduction(&s, weight)?);
        }
    }
    if all || matches!(suite, Suite::OneVar) {
        out.push(check_one_var(&[], &[], weight)?);
        out.push(check_one_var(&[int(1)], &[int(2)], weight)?);
    }
    if all || matches!(suite, Suite::Scalar) {
        // the scalar-product route is quadratic in the number of monomials
        for s in bkp_specs(only) {
            out.push(check_scalar_tau(&s, weight.min(6))?);
        }
    }
    Ok(out)
}

fn run(cli: Cli) -> Result<(), Failure> {
    let json = cli.json;
    match cli.command {
        Command::Qfun { lambda, weight } => {
            let lambda = StrictPartition::new(lambda.0)?;
            let q = q_lambda(&lambda, weight)?;
            emit(json, &q, q.render("t"));
        }
        Command::Schur { mu, weight } => {
            let mu = Partition::new(mu.0)?;
            let s = schur_s(&mu, weight)?;
            emit(json, &s, s.render("t"));
        }
        Command::Tau { r, weight, wstar } => {
            let tau = tau_bkp(&r, weight, wstar.unwrap_or(weight))?;
            emit(json, &tau, render_bi(&tau));
        }
        Command::Hyper { a, b, order, weight } => match (order, weight) {
            (Some(order), None) => {
                let c = hyper_one_var(&a.0, &b.0, order)?;
                let strings: Vec<String> = c.iter().map(|v| v.to_string()).collect();
                emit(json, &json!({ "coefficients": strings }), strings.join(" "));
            }
            (None, Some(weight)) => {
                let s = tau_hyper_tinfty(&a.0, &b.0, weight)?;
                emit(json, &s, s.render("t"));
            }
            _ => return Err(Failure::Usage("hyper needs exactly one of --order or --weight".into())),
        },
        Command::Verify { suite, weight, r, a } => {
            let reports = verify(suite, weight, &r, &a)?;
            emit_reports(json, &reports)?;
        }
        Command::PfaffianCheck { r, n, matrix, degree, weight } => {
            let report = match matrix {
                Matrix::S => check_pfaffian_s(&r, n, degree)?,
                Matrix::R => check_pfaffian_r(&r, n, weight, cli.seed)?,
            };
            emit_reports(json, &[report])?;
        }
        Command::LinearCheck { r, m, order, weight } => {
            let report = check_linear_eq_n1(&r, m, order, weight.unwrap_or(order))?;
            emit_reports(json, &[report])?;
        }
        Command::Tableaux { lambda } => {
            let lambda = StrictPartition::new(lambda.0)?;
            let count = count_shifted_syt(&lambda)?;
            let hook = hook_star(&lambda).to_string();
            let value = json!({ "count": count, "hook_star": hook });
            println!("{}", serde_json::to_string(&value).expect("serializable"));
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Identity) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
