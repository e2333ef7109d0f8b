// SPDX-License-Identifier: Apache-2.0

//! The `catom` command line.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::abstraction::{build_abstract, classify_catom, AbstractCAtom, CAtomClass};
use crate::analysis::{cycle_report, dependency_graph, translate_normal, Sign, Witness};
use crate::error::Error;
use crate::fixpoint::{fixpoint_stable, to_positive_basic, FixpointVerdict};
use crate::frontend::{load, parse_catom};
use crate::golden;
use crate::program::{format_set, parse_atom_list, Atom, CAtom, Interpretation, Program};
use crate::reduct::{gl_reduct, is_stable, stable_models, stable_models_parallel};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_GUARD: i32 = 2;
pub const EXIT_DIVERGENCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "catom",
    version,
    about = "Stable models of programs with abstract constraint atoms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print stable models.
    Solve {
        file: PathBuf,
        /// Print every stable model instead of the first.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
        /// Worker threads for the candidate search.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Decide whether an interpretation is a stable model.
    Check {
        file: PathBuf,
        /// Comma-separated true atoms.
        #[arg(short = 'I', value_name = "ATOMS", allow_hyphen_values = true)]
        interpretation: String,
        #[arg(long, value_enum, default_value_t = Oracle::Reduct)]
        oracle: Oracle,
    },
    /// Print the generalized reduct.
    Reduct {
        file: PathBuf,
        #[arg(short = 'I', value_name = "ATOMS", allow_hyphen_values = true)]
        interpretation: String,
        #[arg(long)]
        json: bool,
    },
    /// Print abstract representations as JSON.
    Abstract {
        #[arg(required_unless_present = "catom", conflicts_with = "catom")]
        file: Option<PathBuf>,
        /// A single c-atom, weight constraint or aggregate.
        #[arg(long, value_name = "EXPR", allow_hyphen_values = true)]
        catom: Option<String>,
        #[arg(long)]
        classify: bool,
    },
    /// Print the normal-program translation of a basic program.
    Translate { file: PathBuf },
    /// Print the dependency graph of a basic program.
    Depgraph {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
        #[arg(long)]
        report: bool,
    },
    /// Run the built-in example corpus.
    Selftest,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
enum Oracle {
    Reduct,
    Fixpoint,
    Both,
}

/// A failed command: message for stderr and exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Guard { .. } => EXIT_GUARD,
            _ => EXIT_ERROR,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure {
            code: EXIT_ERROR,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: EXIT_ERROR,
            message: e.to_string(),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Runs the command line `args` (program name first) and returns the exit
/// code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cmd: Command, out: &mut impl Write, err: &mut impl Write) -> CmdResult {
    match cmd {
        Command::Solve { file, all, json, jobs } => solve(&file, all, json, jobs, out),
        Command::Check {
            file,
            interpretation,
            oracle,
        } => check(&file, &interpretation, oracle, out, err),
        Command::Reduct {
            file,
            interpretation,
            json,
        } => reduct(&file, &interpretation, json, out),
        Command::Abstract { file, catom, classify } => abstract_json(file.as_deref(), catom.as_deref(), classify, out),
        Command::Translate { file } => {
            write!(out, "{}", translate_normal(&read(&file)?)?)?;
            Ok(EXIT_OK)
        }
        Command::Depgraph { file, dot, report } => depgraph(&file, dot, report, out),
        Command::Selftest => selftest(out),
    }
}

fn read(path: &Path) -> std::result::Result<Program, Failure> {
    let p = load(path).map_err(|e| Failure {
        code: EXIT_ERROR,
        message: format!("{}: {e}", path.display()),
    })?;
    p.map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn parse_interpretation(text: &str) -> std::result::Result<Interpretation, Failure> {
    Ok(parse_atom_list(text)?)
}

fn solve(file: &Path, all: bool, json: bool, jobs: usize, out: &mut impl Write) -> CmdResult {
    let p = read(file)?;
    let mut models = if jobs > 1 {
        stable_models_parallel(&p, jobs)?
    } else {
        stable_models(&p)?
    };
    if !all {
        models.truncate(1);
    }
    if json {
        let names: Vec<Vec<&str>> = models.iter().map(|m| m.iter().map(Atom::name).collect()).collect();
        writeln!(out, "{}", json!({ "models": names }))?;
    } else if models.is_empty() {
        writeln!(out, "no stable models")?;
    } else {
        for m in &models {
            writeln!(out, "{}", format_set(m))?;
        }
    }
    Ok(EXIT_OK)
}

fn verdict_text(stable: bool) -> &'static str {
    if stable {
        "stable"
    } else {
        "not stable"
    }
}

fn fixpoint_verdict(p: &Program, i: &Interpretation) -> std::result::Result<FixpointVerdict, Failure> {
    Ok(fixpoint_stable(&to_positive_basic(p)?, i)?)
}

fn check(file: &Path, text: &str, oracle: Oracle, out: &mut impl Write, err: &mut impl Write) -> CmdResult {
    let p = read(file)?;
    let i = parse_interpretation(text)?;
    match oracle {
        Oracle::Reduct => writeln!(out, "{}", verdict_text(is_stable(&p, &i)?))?,
        Oracle::Fixpoint => {
            let v = fixpoint_verdict(&p, &i)?;
            if v == FixpointVerdict::NotAModel {
                writeln!(err, "note: {} is not a model", format_set(&i))?;
            }
            writeln!(out, "{}", verdict_text(v == FixpointVerdict::Stable))?;
        }
        Oracle::Both => {
            let by_reduct = is_stable(&p, &i)?;
            let by_fixpoint = fixpoint_verdict(&p, &i)? == FixpointVerdict::Stable;
            if by_reduct != by_fixpoint {
                writeln!(
                    err,
                    "divergence on {}: reduct says {}, fixpoint says {}",
                    format_set(&i),
                    verdict_text(by_reduct),
                    verdict_text(by_fixpoint)
                )?;
                return Ok(EXIT_DIVERGENCE);
            }
            writeln!(out, "{}", verdict_text(by_reduct))?;
        }
    }
    Ok(EXIT_OK)
}

fn reduct(file: &Path, text: &str, json: bool, out: &mut impl Write) -> CmdResult {
    let p = read(file)?;
    let r = gl_reduct(&p, &parse_interpretation(text)?)?;
    if json {
        writeln!(out, "{}", serde_json::to_string(&r)?)?;
    } else {
        write!(out, "{r}")?;
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct AbstractEntry<'a> {
    catom: String,
    #[serde(flatten)]
    abs: &'a AbstractCAtom,
    #[serde(skip_serializing_if = "Option::is_none")]
    class: Option<CAtomClass>,
}

fn abstract_entry(c: &CAtom, abs: &AbstractCAtom, classify: bool) -> serde_json::Value {
    let entry = AbstractEntry {
        catom: c.to_string(),
        abs,
        class: classify.then(|| classify_catom(abs)),
    };
    serde_json::to_value(entry).expect("plain data serializes")
}

fn abstract_json(file: Option<&Path>, expr: Option<&str>, classify: bool, out: &mut impl Write) -> CmdResult {
    let value = match (file, expr) {
        (_, Some(expr)) => {
            let c = parse_catom(expr)?;
            abstract_entry(&c, &build_abstract(&c)?, classify)
        }
        (Some(file), None) => {
            let p = read(file)?;
            let entries = p
                .catoms()
                .into_iter()
                .map(|c| Ok(abstract_entry(c, &build_abstract(c)?, classify)))
                .collect::<std::result::Result<Vec<_>, Error>>()?;
            json!({ "catoms": entries })
        }
        (None, None) => unreachable!("clap requires one of FILE and --catom"),
    };
    writeln!(out, "{value}")?;
    Ok(EXIT_OK)
}

fn format_witness(w: &Witness) -> String {
    let mut s = w.vertices[0].to_string();
    for (k, sign) in w.signs.iter().enumerate() {
        let next = &w.vertices[(k + 1) % w.vertices.len()];
        let arrow = match sign {
            Sign::Positive => "->",
            Sign::Negative => "-not->",
        };
        s.push_str(&format!(" {arrow} {next}"));
    }
    s
}

fn depgraph(file: &Path, dot: bool, report: bool, out: &mut impl Write) -> CmdResult {
    let g = dependency_graph(&read(file)?)?;
    if dot {
        write!(out, "{}", g.to_dot())?;
    }
    if !dot && !report {
        for e in &g.edges {
            let sign = match e.sign {
                Sign::Positive => '+',
                Sign::Negative => '-',
            };
            writeln!(out, "{} -> {} {sign}", e.from, e.to)?;
        }
    }
    if report {
        let r = cycle_report(&g);
        for (key, value) in [
            ("positive_cycle", r.has_positive_cycle),
            ("odd_cycle", r.has_odd_cycle),
            ("even_cycle", r.has_even_cycle),
            ("even_cycle_literal", r.has_even_cycle_literal),
            ("call_consistent", r.call_consistent),
            ("acyclic", r.acyclic),
        ] {
            writeln!(out, "{key}={value}")?;
        }
        for (key, w) in [
            ("positive_witness", &r.positive_witness),
            ("odd_witness", &r.odd_witness),
            ("even_witness", &r.even_witness),
        ] {
            if let Some(w) = w {
                writeln!(out, "{key}={}", format_witness(w))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn selftest(out: &mut impl Write) -> CmdResult {
    let mut failed = 0;
    for case in golden::cases() {
        let start = Instant::now();
        let outcome = case.run();
        let ms = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(()) => writeln!(out, "ok    {:<24} {ms:>8.2} ms", case.name)?,
            Err(why) => {
                failed += 1;
                writeln!(out, "FAIL  {:<24} {why}", case.name)?;
            }
        }
    }
    writeln!(out, "{} passed, {failed} failed", golden::cases().len() - failed)?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_ERROR })
}
