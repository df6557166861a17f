//! `ade`: batch front end printing one JSON document per invocation.
//!
//! Exit codes: 0 success or pass, 1 verification failure, 2 usage or domain
//! error, 3 broken internal invariant.

pub mod cache;

use std::ffi::OsString;
use std::path::PathBuf;

use ade_core::oracle::{numeric_linking, OracleParams};
use ade_core::reps::{run_lemma, Lemma, VerificationReport};
use ade_core::weyl::{group_order, DEFAULT_GROUP_CAP};
use ade_core::braid::RootValue;
use ade_core::{abelianize, parse_diagram, parse_word, Error, RootSystem};
use clap::{Parser, Subcommand};
use num_rational::Rational64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::value::RawValue;
use serde_json::{json, Value};

pub mod exit {
    pub const OK: i32 = 0;
    pub const FAILED: i32 = 1;
    pub const USAGE: i32 = 2;
    pub const INTERNAL: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(name = "ade", version, about = "Root systems, pure braid abelianization and lattice verifications")]
struct Cli {
    /// Root-system cache directory.
    #[arg(long, global = true, env = cache::ENV_VAR)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the roots of a diagram in canonical order.
    Roots { diagram: String },
    /// Order of the Weyl group by explicit closure.
    WeylOrder {
        diagram: String,
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        cap: usize,
    },
    /// Abelianization of a pure braid word, e.g. `ab A2 "1 2 2 -1"`.
    Ab { diagram: String, word: String },
    /// Numerical winding numbers of a pure braid word.
    Oracle {
        diagram: String,
        word: String,
        #[arg(long, default_value_t = 64)]
        samples: usize,
        /// Detour radius as a fraction of segment length, e.g. `1/8`.
        #[arg(long, default_value = "1/8")]
        radius: Rational64,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
    /// Run one verification.
    Verify { lemma: String, diagram: String },
    /// Run every verification that applies to the diagram.
    VerifyAll { diagram: String },
    /// Inspect or clear the root-system cache.
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Debug, Subcommand)]
enum CacheAction {
    Clear,
    Path,
}

/// Exit code, JSON document for stdout, and diagnostics for stderr.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn json(code: i32, value: &Value) -> Self {
        Outcome { code, stdout: value.to_string(), stderr: String::new() }
    }
}

fn error_outcome(e: &Error) -> Outcome {
    let code = if e.is_internal() { exit::INTERNAL } else { exit::USAGE };
    Outcome::json(code, &json!({"error": e.name(), "message": e.to_string()}))
}

/// A JSON number printed with exactly 12 significant digits.
pub fn sig12(x: f64) -> Box<RawValue> {
    RawValue::from_string(format!("{x:.11e}")).expect("scientific notation is valid JSON")
}

#[derive(Serialize)]
struct ResidualDoc {
    root: Vec<i64>,
    winding: Box<RawValue>,
    residual: Box<RawValue>,
}

#[derive(Serialize)]
struct OracleDoc {
    r#type: String,
    coords: Vec<RootValue>,
    residuals: Vec<ResidualDoc>,
    max_residual: Box<RawValue>,
}

struct Context {
    cache_dir: PathBuf,
    notes: Vec<String>,
}

impl Context {
    fn system(&mut self, spec: &str) -> Result<RootSystem, Error> {
        let diagram = parse_diagram(spec)?;
        let mut notes = Vec::new();
        let res = cache::roundtrip(&self.cache_dir, &diagram, |e| notes.push(format!("CacheCorrupt: {e}; rebuilding")));
        self.notes.extend(notes);
        match res {
            Ok((rs, _)) => Ok(rs),
            Err(cache::CacheError::Domain(e)) => Err(e),
            Err(e) => {
                // an unusable cache directory is not fatal
                self.notes.push(format!("cache unavailable: {e}"));
                ade_core::enumerate_roots(&diagram)
            }
        }
    }
}

fn report_code(passed: bool) -> i32 {
    if passed {
        exit::OK
    } else {
        exit::FAILED
    }
}

fn verify_all(rs: &RootSystem) -> (bool, Vec<VerificationReport>) {
    let lemmas: Vec<Lemma> = Lemma::ALL.into_iter().filter(|l| l.applies_to(rs)).collect();
    let reports: Vec<VerificationReport> =
        lemmas.par_iter().map(|&l| run_lemma(rs, l).expect("lemma applies to diagram")).collect();
    (reports.iter().all(VerificationReport::passed), reports)
}

fn dispatch(ctx: &mut Context, command: Command) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Roots { diagram } => {
            let rs = ctx.system(&diagram)?;
            let json = rs.to_json();
            Outcome::json(
                exit::OK,
                &json!({
                    "type": rs.diagram().to_string(),
                    "count": rs.len(),
                    "num_positive": rs.num_positive(),
                    "highest_root": rs.highest_root().coeffs(),
                    "edges": json.diagram.edges,
                    "roots": json.roots,
                }),
            )
        }
        Command::WeylOrder { diagram, cap } => {
            let rs = ctx.system(&diagram)?;
            let order = group_order(&rs, cap)?;
            Outcome::json(exit::OK, &json!({"type": rs.diagram().to_string(), "order": order}))
        }
        Command::Ab { diagram, word } => {
            let rs = ctx.system(&diagram)?;
            let w = parse_word(&rs, &word)?;
            let v = abelianize(&rs, &w)?;
            Outcome::json(exit::OK, &serde_json::to_value(v.to_json(&rs)).expect("serializable"))
        }
        Command::Oracle { diagram, word, samples, radius, tol } => {
            let rs = ctx.system(&diagram)?;
            let w = parse_word(&rs, &word)?;
            let params = OracleParams {
                samples_per_segment: samples,
                detour_radius: radius,
                rounding_tolerance: tol,
                ..OracleParams::default()
            };
            match numeric_linking(&rs, &w, &params) {
                Ok(out) => {
                    let doc = OracleDoc {
                        r#type: rs.diagram().to_string(),
                        coords: out.vector.to_json(&rs).coords,
                        residuals: out
                            .residual_table(&rs)
                            .into_iter()
                            .map(|r| ResidualDoc { root: r.root, winding: sig12(r.winding), residual: sig12(r.residual) })
                            .collect(),
                        max_residual: sig12(out.max_residual()),
                    };
                    Outcome { code: exit::OK, stdout: serde_json::to_string(&doc).expect("serializable"), stderr: String::new() }
                }
                Err(e @ (Error::PathTooCloseToHyperplane { .. } | Error::RoundingResidualTooLarge { .. })) => {
                    Outcome::json(exit::FAILED, &json!({"error": e.name(), "message": e.to_string()}))
                }
                Err(e) => return Err(e),
            }
        }
        Command::Verify { lemma, diagram } => {
            let lemma: Lemma = lemma.parse()?;
            let rs = ctx.system(&diagram)?;
            let report = run_lemma(&rs, lemma)?;
            Outcome::json(report_code(report.passed()), &serde_json::to_value(&report).expect("serializable"))
        }
        Command::VerifyAll { diagram } => {
            let rs = ctx.system(&diagram)?;
            let (ok, reports) = verify_all(&rs);
            Outcome::json(
                report_code(ok),
                &json!({
                    "type": rs.diagram().to_string(),
                    "status": if ok { "pass" } else { "fail" },
                    "reports": reports,
                }),
            )
        }
        Command::Cache { action } => {
            let dir = ctx.cache_dir.display().to_string();
            match action {
                CacheAction::Path => Outcome::json(exit::OK, &json!({"path": dir})),
                CacheAction::Clear => match cache::clear(&ctx.cache_dir) {
                    Ok(n) => Outcome::json(exit::OK, &json!({"path": dir, "removed": n})),
                    Err(e) => Outcome::json(exit::USAGE, &json!({"error": "CacheIo", "message": e.to_string()})),
                },
            }
        }
    })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Outcome { code: exit::OK, stdout: text, stderr: String::new() }
                }
                _ => Outcome::json(exit::USAGE, &json!({"error": "Usage", "message": text})),
            };
        }
    };
    let mut ctx = Context { cache_dir: cli.cache_dir.unwrap_or_else(cache::default_dir), notes: Vec::new() };
    let mut out = match dispatch(&mut ctx, cli.command) {
        Ok(o) => o,
        Err(e) => error_outcome(&e),
    };
    out.stderr = ctx.notes.join("\n");
    out
}
