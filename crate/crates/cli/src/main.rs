//! `hlc`: persistence, local connectedness shift and simplicial/Čech
//! comparison reports for lower-star filtrations, as JSON.

mod input;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use hlc_core::comparison::{compare, compare_with_towers, simplicial_barcode, CechCovers};
use hlc_core::lcs::{compute_lcs, lipschitz_check};
use hlc_core::value::{exact, exact_opt, parse_value};
use hlc_core::{Ext, Field, PrimeField, Rationals, Value};
use serde::Serialize;
use serde_json::json;

#[derive(Debug, Parser)]
#[command(name = "hlc", version, about = "Persistent simplicial and Čech homology of sublevel filtrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum FieldChoice {
    Prime(u64),
    Rationals,
}

fn parse_field(s: &str) -> Result<FieldChoice, String> {
    if s.eq_ignore_ascii_case("q") {
        return Ok(FieldChoice::Rationals);
    }
    let p: u64 = s.parse().map_err(|_| format!("expected a prime or Q, got {s:?}"))?;
    PrimeField::new(p).map_err(|e| e.to_string())?;
    Ok(FieldChoice::Prime(p))
}

fn parse_rational(s: &str) -> Result<Value, String> {
    parse_value(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct Common {
    /// Coefficient field: a prime p for F_p, or Q.
    #[arg(long, default_value = "2", value_parser = parse_field)]
    field: FieldChoice,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CoverKind {
    Finest,
    OpenStars,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Barcode of the sublevel filtration.
    Barcode {
        /// Input document; standard input when absent or "-".
        input: Option<PathBuf>,
        /// Highest homology degree; defaults to the complex dimension.
        #[arg(long)]
        max_dim: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Local connectedness shift with the witnesses realizing it.
    Lcs {
        input: Option<PathBuf>,
        /// Highest homology degree; defaults to the complex dimension.
        #[arg(long)]
        max_degree: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Interleaving diagram, barcodes and bottleneck bound for one window.
    Compare {
        input: Option<PathBuf>,
        /// Tower depth; homology is compared in degrees below it.
        #[arg(long)]
        d: usize,
        /// Start of the window.
        #[arg(long, value_parser = parse_rational, required_unless_present = "towers")]
        s: Option<Value>,
        /// Shift of the window.
        #[arg(long, value_parser = parse_rational, required_unless_present = "towers")]
        delta: Option<Value>,
        /// Build towers automatically (the default).
        #[arg(long, conflicts_with = "towers")]
        auto_tower: bool,
        /// Names of the lower and upper towers from the document.
        #[arg(long, num_args = 2, value_names = ["LOWER", "UPPER"], conflicts_with_all = ["s", "delta"])]
        towers: Option<Vec<String>>,
        /// Covers for the Čech barcode.
        #[arg(long, value_enum, default_value = "finest")]
        cech_covers: CoverKind,
        #[command(flatten)]
        common: Common,
    },
    /// Checks |lcs(f) − lcs(g)| ≤ 2‖f − g‖∞ for two functions on one complex.
    Lipschitz {
        input_f: PathBuf,
        input_g: PathBuf,
        #[arg(long)]
        max_degree: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

/// Whether every check in the report passed.
enum Verdict {
    Pass,
    Fail,
}

macro_rules! with_field {
    ($choice:expr, $f:ident => $body:expr) => {
        match $choice {
            FieldChoice::Prime(p) => {
                let $f = PrimeField::new(p)?;
                $body
            }
            FieldChoice::Rationals => {
                let $f = Rationals;
                $body
            }
        }
    };
}

#[derive(Serialize)]
struct Witness<'a> {
    vertex: &'a str,
    #[serde(with = "exact")]
    source: Value,
    #[serde(with = "exact_opt")]
    trivial_from: Option<Value>,
    shift: Ext,
}

fn emit(report: &serde_json::Value, output: Option<&Path>) -> Result<()> {
    let text = serde_json::to_string_pretty(report)? + "\n";
    match output {
        Some(p) => std::fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<Verdict> {
    match cli.command {
        Command::Barcode { input, max_dim, common } => {
            let doc = input::load(input.as_deref())?;
            let fc = &doc.complex;
            let max_dim = max_dim.unwrap_or_else(|| fc.complex().dim().unwrap_or(0));
            with_field!(common.field, f => {
                let barcode = simplicial_barcode(&f, fc, max_dim)?;
                emit(&json!({"command": "barcode", "field": f.name(), "max_dim": max_dim, "barcode": barcode}), common.output.as_deref())?;
            });
            Ok(Verdict::Pass)
        }
        Command::Lcs { input, max_degree, common } => {
            let doc = input::load(input.as_deref())?;
            let fc = &doc.complex;
            let max_degree = max_degree.unwrap_or_else(|| fc.complex().dim().unwrap_or(0));
            with_field!(common.field, f => {
                let rep = compute_lcs(&f, fc, max_degree)?;
                let witnesses: Vec<Witness> = rep
                    .witnesses
                    .iter()
                    .filter(|w| w.shift == rep.lcs)
                    .map(|w| Witness {
                        vertex: fc.name(w.vertex),
                        source: w.source.clone(),
                        trivial_from: w.trivial_from.clone(),
                        shift: w.shift.clone(),
                    })
                    .collect();
                let next = rep.next_smaller_failing.as_ref().map(|v| Ext::Finite(v.clone()));
                emit(
                    &json!({"command": "lcs", "field": f.name(), "max_degree": max_degree, "lcs": rep.lcs,
                            "next_smaller_failing": next, "witnesses": witnesses}),
                    common.output.as_deref(),
                )?;
            });
            Ok(Verdict::Pass)
        }
        Command::Compare { input, d, s, delta, auto_tower: _, towers, cech_covers, common } => {
            let doc = input::load(input.as_deref())?;
            let fc = &doc.complex;
            let covers = match cech_covers {
                CoverKind::Finest => CechCovers::Finest,
                CoverKind::OpenStars => CechCovers::OpenStars,
            };
            if d == 0 {
                bail!("--d must be at least 1");
            }
            with_field!(common.field, f => {
                let report = match &towers {
                    Some(names) => {
                        let get = |n: &String| doc.towers.get(n).ok_or_else(|| anyhow!("towers: no tower named {n:?}"));
                        compare_with_towers(&f, fc, d, get(&names[0])?, get(&names[1])?, covers)?
                    }
                    None => {
                        let (s, delta) = (s.expect("required by clap"), delta.expect("required by clap"));
                        if delta < Value::from_integer(0.into()) {
                            bail!("--delta must be nonnegative");
                        }
                        compare(&f, fc, d, &s, &delta, covers)?
                    }
                };
                for w in &report.warnings {
                    eprintln!("warning: {w}");
                }
                let identities = report.diagram.as_ref().map(|r| r.identities.as_slice()).unwrap_or(&[]);
                let passed = identities.iter().filter(|c| c.pass).count();
                let summary = json!({
                    "identities_passed": passed,
                    "identities_total": identities.len(),
                    "bound_holds": report.bound_holds,
                    "all_pass": report.all_pass,
                });
                emit(&json!({"command": "compare", "field": f.name(), "summary": summary, "report": report}), common.output.as_deref())?;
                if let Some(t) = &report.tower_failure {
                    bail!("{}", t.message);
                }
                Ok(if report.all_pass { Verdict::Pass } else { Verdict::Fail })
            })
        }
        Command::Lipschitz { input_f, input_g, max_degree, common } => {
            let a = input::load(Some(&input_f))?;
            let b = input::load(Some(&input_g))?;
            let max_degree = max_degree.unwrap_or_else(|| a.complex.complex().dim().unwrap_or(0));
            with_field!(common.field, f => {
                let rep = lipschitz_check(&f, &a.complex, &b.complex, max_degree)?;
                emit(&json!({"command": "lipschitz", "field": f.name(), "max_degree": max_degree, "report": rep}), common.output.as_deref())?;
                Ok(if rep.holds { Verdict::Pass } else { Verdict::Fail })
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(Verdict::Pass) => ExitCode::SUCCESS,
        Ok(Verdict::Fail) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
