//! Command-line front end. Every command prints a short summary and, with
//! `--report`, writes the full JSON report.
//!
//! Exit codes: 0 success, 1 an equivalence failed (a bug surface), 2 bad
//! input or a precondition not met.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::enumerate_quantum_binomial;
use crate::error::{Error, Result};
use crate::harness::{run_suite, Scope};
use crate::io::report::{self, envelope, to_text, DEFAULT_BOUND};
use crate::io::{read_presentation, Presentation};
use crate::pbw::DegLexOrder;

#[derive(Debug, Parser)]
#[command(name = "quadalg", version, about = "Quadratic sets, quantum binomial algebras and PBW bases")]
pub struct Cli {
    /// Write the JSON report to this file
    #[arg(long, global = true)]
    pub report: Option<PathBuf>,
    /// Degree bound for dimensions and Hilbert coefficients
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Seed for random sampling
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Predicates of (X, r) and the quantum binomial verdict
    Check { file: PathBuf },
    /// Orbits of the group D_m on words of length m
    Orbits {
        file: PathBuf,
        #[arg(long, default_value_t = 3)]
        degree: usize,
    },
    /// dim A_m by rank and by orbit counting, Koszul dual dimensions
    Dims {
        file: PathBuf,
        #[arg(long)]
        max: Option<usize>,
    },
    /// Groebner basis check for one enumeration, or a search over all
    Pbw {
        file: PathBuf,
        /// e.g. `t>x>z>y` or `y<z<x<t`
        #[arg(long)]
        order: Option<String>,
        #[arg(long)]
        search: bool,
    },
    /// Graphs of normal words and obstructions, growth, global dimension
    Graphs {
        file: PathBuf,
        #[arg(long)]
        order: String,
    },
    /// Equivalence matrices
    Harness { file: PathBuf },
    /// Census of quantum binomial sets up to isomorphism
    Classify {
        #[arg(long)]
        n: usize,
    },
    /// Every analysis of one presentation
    Report { file: PathBuf },
    /// Run a property suite
    Suite {
        #[arg(long, value_enum, default_value_t = SuiteScope::Fixtures)]
        scope: SuiteScope,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        /// Write one presentation file per failure here
        #[arg(long)]
        witness_dir: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteScope {
    Fixtures,
    ExhaustiveN3,
    Sampled,
    CensusN4,
}

fn load(file: &Path) -> Result<Presentation> {
    read_presentation(file)
}

fn order_arg(p: &Presentation, text: &str) -> Result<DegLexOrder> {
    DegLexOrder::parse(p.names(), text)
}

/// Runs one command, writing the summary to `out`. Returns the exit code
/// for outcomes that are not errors.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    let bound = cli.bound.unwrap_or(DEFAULT_BOUND);
    let mut code = 0;
    let value = match &cli.command {
        Command::Check { file } => {
            let p = load(file)?;
            envelope("check", p.names(), report::check_section(&p)?)
        }
        Command::Orbits { file, degree } => {
            let p = load(file)?;
            envelope("orbits", p.names(), report::orbits_section(&p, *degree)?)
        }
        Command::Dims { file, max } => {
            let p = load(file)?;
            envelope("dims", p.names(), report::dims_section(&p, max.unwrap_or(bound))?)
        }
        Command::Pbw { file, order, search } => {
            let p = load(file)?;
            let mut body = serde_json::Map::new();
            if order.is_some() || !search {
                let ord = match order {
                    Some(text) => order_arg(&p, text)?,
                    None => DegLexOrder::natural(p.n()),
                };
                body.extend(as_map(report::pbw_order_section(&p, &ord)?));
            }
            if *search {
                body.extend(as_map(report::pbw_search_section(&p)?));
            }
            envelope("pbw", p.names(), Value::Object(body))
        }
        Command::Graphs { file, order } => {
            let p = load(file)?;
            let ord = order_arg(&p, order)?;
            envelope("graphs", p.names(), report::graphs_section(&p, &ord, bound)?)
        }
        Command::Harness { file } => {
            let p = load(file)?;
            envelope("harness", p.names(), report::harness_section(&p, bound)?)
        }
        Command::Classify { n } => {
            let census = enumerate_quantum_binomial(*n)?;
            let mut v = as_map(report::census_section(&census));
            v.insert("format".into(), json!(report::FORMAT));
            v.insert("command".into(), json!("classify"));
            Value::Object(v)
        }
        Command::Report { file } => report::full_report(&load(file)?, bound)?,
        Command::Suite {
            scope,
            samples,
            witness_dir,
        } => {
            let scope = match scope {
                SuiteScope::Fixtures => Scope::Fixtures,
                SuiteScope::ExhaustiveN3 => Scope::ExhaustiveN3,
                SuiteScope::Sampled => Scope::Sampled {
                    samples: *samples,
                    seed: cli.seed,
                },
                SuiteScope::CensusN4 => Scope::CensusN4,
            };
            let suite = run_suite(scope)?;
            if !suite.passed() {
                code = 1;
            }
            if let Some(dir) = witness_dir {
                write_witnesses(dir, &suite)?;
            }
            let mut v = as_map(report::suite_section(&suite));
            v.insert("format".into(), json!(report::FORMAT));
            v.insert("command".into(), json!("suite"));
            Value::Object(v)
        }
    };
    summarize(&value, out)?;
    if let Some(path) = &cli.report {
        std::fs::write(path, to_text(&value))
            .map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(code)
}

fn as_map(v: Value) -> serde_json::Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("sections are objects"),
    }
}

fn write_witnesses(dir: &Path, suite: &crate::harness::SuiteReport) -> Result<()> {
    let io_err = |e: std::io::Error| Error::InvalidInput(format!("cannot write witnesses: {e}"));
    std::fs::create_dir_all(dir).map_err(io_err)?;
    for (i, (check, w)) in suite.failures().enumerate() {
        let slug: String = check
            .chars()
            .map(|c| if c.is_ascii_alphanumeric() { c } else { '-' })
            .collect();
        let text = format!("# {check}: {}\n{}", w.message.replace('\n', " "), w.presentation);
        std::fs::write(dir.join(format!("{i:03}-{slug}.qb")), text).map_err(io_err)?;
    }
    Ok(())
}

/// One line per top-level key, values in compact JSON.
fn summarize(v: &Value, out: &mut dyn Write) -> Result<()> {
    let io_err = |e: std::io::Error| Error::InvalidInput(format!("cannot write output: {e}"));
    if let Value::Object(m) = v {
        for (k, val) in m {
            if k == "format" {
                continue;
            }
            let text = match val {
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            writeln!(out, "{k}: {text}").map_err(io_err)?;
        }
    }
    Ok(())
}

/// Maps an outcome to the process exit code, reporting errors on stderr.
pub fn exit_code(result: Result<i32>) -> i32 {
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_violation() {
                1
            } else {
                2
            }
        }
    }
}
