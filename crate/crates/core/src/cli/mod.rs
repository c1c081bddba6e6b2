//! The `modrad` command line: a small expression language for rings,
//! modules, ideals and submodules, plus front ends to the harness.

mod ast;
mod commands;
mod eval;
mod parse;

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::harness::{self, CorpusSpec};

pub use ast::{Elem, Expr, ExprKind, Span};
pub use commands::{check, info, predicate_names, rad, CheckError, Checked, Record};
pub use eval::{eval, evaluate, Value};
pub use parse::{parse, ErrorKind, ExprError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Machine,
}

#[derive(Debug, Parser)]
#[command(
    name = "modrad",
    version,
    about = "Quasi J-submodules over finite commutative rings"
)]
pub struct Cli {
    /// Largest carrier any construction may build (overrides MODRAD_CAP).
    #[arg(long, global = true)]
    pub max_carrier: Option<usize>,
    /// Accepted for compatibility; corpora are deterministic.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariants of a ring, module, ideal or submodule.
    Info { expr: String },
    /// Decide a predicate.
    Check {
        predicate: String,
        expr: String,
        #[arg(long)]
        witness: bool,
    },
    /// Radicals: M-rad(N), √I, Nil(M) and J(M), or the nil and Jacobson radicals of a ring.
    Rad { expr: String },
    /// Run harness claims over a corpus.
    Verify {
        #[arg(long = "claim")]
        claims: Vec<String>,
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// Search for a counterexample to an implication.
    Search {
        target: String,
        #[arg(long, default_value = "default")]
        corpus: String,
    },
    /// List harness claims.
    ListClaims,
    /// List counterexample search targets.
    ListTargets,
}

fn emit(out: &mut dyn Write, format: Format, rec: &Record) {
    let s = match format {
        Format::Text => rec.text(),
        Format::Machine => rec.json(),
    };
    let _ = out.write_all(s.as_bytes());
}

fn usage(err: &mut dyn Write, msg: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {msg}");
    EXIT_USAGE
}

fn value_of(expr: &str, err: &mut dyn Write) -> Result<Value, i32> {
    evaluate(expr).map_err(|e| usage(err, format!("{e}\n  {expr}\n  {}^", " ".repeat(e.pos))))
}

fn corpus(name: &str, err: &mut dyn Write) -> Result<harness::Corpus, i32> {
    let spec = CorpusSpec::named(name).ok_or_else(|| {
        usage(
            err,
            format!(
                "unknown corpus `{name}`; expected one of {}",
                CorpusSpec::NAMES.join(", ")
            ),
        )
    })?;
    harness::build_corpus(&spec).map_err(|e| usage(err, e))
}

/// Runs a full command line (including the program name) and returns the
/// exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    if let Some(cap) = cli.max_carrier {
        crate::limits::set_carrier_cap(cap);
    }
    match execute(&cli, out, err) {
        Ok(code) | Err(code) => code,
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, i32> {
    let format = cli.format;
    match &cli.command {
        Command::Info { expr } => {
            let v = value_of(expr, err)?;
            let rec = info(&v).map_err(|e| usage(err, e))?;
            emit(out, format, &rec);
            Ok(EXIT_OK)
        }
        Command::Rad { expr } => {
            let v = value_of(expr, err)?;
            let rec = rad(&v).map_err(|e| usage(err, e))?;
            emit(out, format, &rec);
            Ok(EXIT_OK)
        }
        Command::Check {
            predicate,
            expr,
            witness,
        } => {
            let v = value_of(expr, err)?;
            let c = check(predicate, &v).map_err(|e| match e {
                CheckError::UnknownPredicate(msg) => usage(err, msg),
                CheckError::Kernel(e) => usage(err, e),
            })?;
            match format {
                Format::Text => {
                    let _ = writeln!(out, "{}", c.verdict.holds);
                    if *witness {
                        if let Some(w) = &c.witness {
                            let _ = writeln!(out, "witness: {w}");
                        }
                    }
                }
                Format::Machine => emit(
                    out,
                    format,
                    &commands::check_record(predicate, expr, &c, *witness),
                ),
            }
            Ok(if c.verdict.holds { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Verify {
            claims,
            corpus: name,
        } => {
            let corpus = corpus(name, err)?;
            let reports = if claims.is_empty() {
                harness::run_all(&corpus)
            } else {
                let ids: Vec<&str> = claims.iter().map(String::as_str).collect();
                harness::check_claims(&ids, &corpus).map_err(|e| usage(err, e))?
            };
            let s = match format {
                Format::Text => harness::render_report_text(&reports),
                Format::Machine => harness::render_machine(&reports),
            };
            let _ = out.write_all(s.as_bytes());
            Ok(if harness::any_failed(&reports) {
                EXIT_FALSE
            } else {
                EXIT_OK
            })
        }
        Command::Search {
            target,
            corpus: name,
        } => {
            if !harness::search_targets().iter().any(|t| t.id == target) {
                let ids: Vec<&str> = harness::search_targets().iter().map(|t| t.id).collect();
                return Err(usage(
                    err,
                    format!(
                        "unknown target `{target}`; expected one of {}",
                        ids.join(", ")
                    ),
                ));
            }
            let corpus = corpus(name, err)?;
            let result =
                harness::search_counterexample(target, &corpus).map_err(|e| usage(err, e))?;
            let s = match format {
                Format::Text => harness::render_search_text(&result),
                Format::Machine => harness::render_search_machine(&result),
            };
            let _ = out.write_all(s.as_bytes());
            Ok(if result.found.is_some() {
                EXIT_OK
            } else {
                EXIT_FALSE
            })
        }
        Command::ListClaims => {
            for c in harness::registry() {
                let line = match format {
                    Format::Text => format!("{:<9} {}\n", c.id, c.hypothesis),
                    Format::Machine => commands::claim_record(c).to_string() + "\n",
                };
                let _ = out.write_all(line.as_bytes());
            }
            Ok(EXIT_OK)
        }
        Command::ListTargets => {
            for t in harness::search_targets() {
                let line = match format {
                    Format::Text => format!("{:<26} {}\n", t.id, t.description),
                    Format::Machine => {
                        serde_json::json!({
                            "id": t.id,
                            "anchor": t.anchor,
                            "description": t.description,
                        })
                        .to_string()
                            + "\n"
                    }
                };
                let _ = out.write_all(line.as_bytes());
            }
            Ok(EXIT_OK)
        }
    }
}
