//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 counterexample found.

use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::diagram::{normalize, orient, parse_pretzel, PretzelCode};
use crate::error::{KnotError, Result};
use crate::fibered::FiberednessVerdict;
use crate::graphs::build_graphs;
use crate::invariants::{determinant_formula, seifert_genus};
use crate::laurent::LaurentPolynomial;
use crate::lspace::verify::run_verification;
use crate::lspace::{classify_lspace, Elimination, HfkTable, LSpaceReport};
use crate::oracle::alexander_oracle;
use crate::statesum::alexander_of_diagram;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "pretzel",
    version,
    about = "Alexander polynomials, fiberedness and L-space obstructions for pretzel knots"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Analyze one pretzel code, e.g. "(-2,3,7)".
    Analyze {
        #[arg(allow_hyphen_values = true)]
        code: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the checkerboard graphs in DOT format to this file.
        #[arg(long, value_name = "FILE")]
        dump_graphs: Option<PathBuf>,
    },
    /// Classify every minimal knot code in a box and report counterexamples.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u64).range(3..))]
        max_tangles: u64,
        #[arg(long, value_parser = clap::value_parser!(i64).range(1..))]
        max_twist: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Worker threads; falls back to PRETZEL_WORKERS.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        workers: Option<u64>,
        /// Report file. Defaults to stdout, or to a file in PRETZEL_REPORT_DIR when set.
        #[arg(long, value_name = "FILE")]
        output: Option<PathBuf>,
    },
    /// Fox-calculus Alexander polynomial.
    #[command(hide = true)]
    Oracle {
        #[arg(allow_hyphen_values = true)]
        code: String,
    },
}

/// Everything `analyze` prints.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub input: PretzelCode,
    /// `None` when the code cancels to the unknot.
    pub normalized: Option<PretzelCode>,
    pub fiberedness: Option<FiberednessVerdict>,
    pub alexander: LaurentPolynomial,
    #[serde(with = "crate::laurent::json_int")]
    pub det_formula: BigInt,
    #[serde(with = "crate::laurent::json_int")]
    pub det_alexander: BigInt,
    pub seifert_genus: u64,
    pub fiber_genus: Option<u64>,
    pub classification: LSpaceReport,
    pub hfk: Option<HfkTable>,
}

pub fn analyze(input: &PretzelCode) -> Result<AnalyzeReport> {
    let components = input.component_count();
    if components != 1 {
        return Err(KnotError::NotAKnot { components });
    }
    let classification = classify_lspace(input)?;
    let normalized = match normalize(input) {
        Ok(c) => Some(c),
        Err(KnotError::Unknot) => None,
        Err(e) => return Err(e),
    };
    let (alexander, det_formula, seifert) = match &normalized {
        Some(code) => {
            let diagram = orient(code)?;
            (
                alexander_of_diagram(&diagram)?,
                determinant_formula(code)?,
                seifert_genus(&diagram),
            )
        }
        None => (LaurentPolynomial::one(), BigInt::one(), 0),
    };
    let fiberedness = classification.fiberedness.clone();
    let fiber_genus = match &fiberedness {
        Some(f) => f.fiber_genus,
        None => Some(0),
    };
    let hfk = (classification.elimination == Some(Elimination::Hfk)).then(HfkTable::exception);
    Ok(AnalyzeReport {
        input: input.clone(),
        normalized,
        fiberedness,
        det_alexander: alexander.eval(-1).abs(),
        alexander,
        det_formula,
        seifert_genus: seifert,
        fiber_genus,
        classification,
        hfk,
    })
}

pub fn render_analysis(report: &AnalyzeReport) -> String {
    let mut out = format!("code            {}\n", report.input);
    match &report.normalized {
        Some(n) if *n != report.input => out.push_str(&format!("normalized      {n}\n")),
        Some(_) => {}
        None => out.push_str("normalized      unknot\n"),
    }
    if let Some(f) = &report.fiberedness {
        out.push_str(&format!("type            {}\n", f.pretzel_type));
        out.push_str(&format!(
            "fibered         {}{}\n",
            f.fibered,
            if f.fibered && !f.fiber_is_seifert_surface {
                " (fiber is not the diagram's Seifert surface)"
            } else {
                ""
            }
        ));
        for line in &f.trace {
            out.push_str(&format!("  | {line}\n"));
        }
    }
    out.push_str(&format!("alexander       {}\n", report.alexander));
    out.push_str(&format!(
        "det             {} (formula), {} (|Δ(-1)|)\n",
        report.det_formula, report.det_alexander
    ));
    out.push_str(&format!("seifert genus   {}\n", report.seifert_genus));
    if let Some(g) = report.fiber_genus {
        out.push_str(&format!("fiber genus     {g}\n"));
    }
    let c = &report.classification;
    if let Some(family) = &c.family {
        out.push_str(&format!("family          {family}\n"));
    }
    out.push_str(&format!("verdict         {}\n", c.verdict));
    if let Some(e) = &c.elimination {
        out.push_str(&format!("reason          {e}\n"));
    }
    if let Some(table) = &report.hfk {
        out.push_str("knot Floer homology (dimensions over F2)\n");
        out.push_str(&table.render());
    }
    out
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name)
        .ok()?
        .trim()
        .parse()
        .ok()
        .filter(|&n| n >= 1)
}

fn write_output(text: &str, path: Option<PathBuf>) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

/// Runs the CLI on `args` (program name first) and returns the exit code.
pub fn run<I>(args: I) -> i32
where
    I: IntoIterator<Item = OsString>,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match cli.command {
        Command::Analyze {
            code,
            format,
            dump_graphs,
        } => {
            let code = match parse_pretzel(&code) {
                Ok(c) => c,
                Err(e) => return fail(e),
            };
            let report = match analyze(&code) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            if let (Some(path), Some(normal)) = (dump_graphs, &report.normalized) {
                let dot = orient(normal).map(|d| build_graphs(&d).to_dot());
                match dot {
                    Ok(dot) => {
                        if let Err(e) = fs::write(&path, dot) {
                            return fail(format!("{}: {e}", path.display()));
                        }
                    }
                    Err(e) => return fail(e),
                }
            }
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&report).expect("serializes") + "\n",
                Format::Text => render_analysis(&report),
                Format::Csv => return fail("csv output is only available for verify"),
            };
            print!("{text}");
            EXIT_OK
        }
        Command::Verify {
            max_tangles,
            max_twist,
            format,
            workers,
            output,
        } => {
            let workers = workers
                .map(|w| w as usize)
                .or_else(|| env_usize("PRETZEL_WORKERS"));
            let report = match run_verification(max_tangles as usize, max_twist, workers) {
                Ok(r) => r,
                Err(e) => return fail(e),
            };
            let (text, ext) = match format {
                Format::Text => (report.to_text(), "txt"),
                Format::Json => (report.to_json() + "\n", "json"),
                Format::Csv => (report.to_csv(), "csv"),
            };
            let path = output.or_else(|| {
                std::env::var_os("PRETZEL_REPORT_DIR").map(|dir| {
                    PathBuf::from(dir).join(format!("verify_r{max_tangles}_n{max_twist}.{ext}"))
                })
            });
            let to_file = path.is_some();
            if let Err(e) = write_output(&text, path) {
                return fail(e);
            }
            if to_file {
                eprint!("{}", report.to_text());
            }
            if report.counterexamples.is_empty() {
                EXIT_OK
            } else {
                eprintln!(
                    "counterexamples found: {}",
                    report.counterexamples.join(" ")
                );
                EXIT_COUNTEREXAMPLE
            }
        }
        Command::Oracle { code } => match parse_pretzel(&code).and_then(|c| alexander_oracle(&c)) {
            Ok(p) => {
                println!("{p}");
                EXIT_OK
            }
            Err(e) => fail(e),
        },
    }
}
