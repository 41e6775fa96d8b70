//! Command-line front end.
//!
//! Exit codes: 0 when the formula holds or no countermodel was found, 1 when
//! it fails or a countermodel was found, 2 on any usage or input error.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use thiserror::Error;

use crate::corpus::{registry, run_all_with, ClaimFilter, CorpusError};
use crate::kripke::{
    apply_closure, classify_frame, load_model, save_model, Closure, FormatError, FrameClass,
    KripkeModel,
};
use crate::search::{check_validity_with, Executor, SearchBounds, SearchError, SearchOutcome};
use crate::semantics::{extension_with, satisfies_with, EvalError, EvalOptions};
use crate::syntax::{parse, Formula, SyntaxError};

pub const EXIT_TRUE: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "epicomp",
    version,
    about = "Epistemic model checker with group comparison"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a formula at one world of a model.
    Eval {
        #[command(flatten)]
        model: ModelArg,
        #[arg(short, long)]
        world: String,
        #[command(flatten)]
        formula: FormulaArg,
    },
    /// Check whether a formula holds at every world of a model.
    Valid {
        #[command(flatten)]
        model: ModelArg,
        #[command(flatten)]
        formula: FormulaArg,
        /// Also print the worlds where the formula holds.
        #[arg(long)]
        show_extension: bool,
    },
    /// Report relation properties per agent and the frame class.
    Classify {
        #[command(flatten)]
        model: ModelArg,
    },
    /// Look for a countermodel among all small models of a frame class.
    Search {
        /// kt, s4 or s5.
        #[arg(long)]
        frame: FrameClass,
        /// Number of agents, named a, b, c, d.
        #[arg(long, default_value_t = 2)]
        agents: usize,
        /// Largest world count to try (defaults: 4 for s5, 3 otherwise).
        #[arg(long)]
        max_worlds: Option<usize>,
        /// Skip models isomorphic to one already checked.
        #[arg(long)]
        mod_iso: bool,
        /// Worker threads; 1 runs on the calling thread.
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(short, long)]
        formula: String,
    },
    /// Run the claim registry.
    Corpus {
        /// Only claims whose id starts with this prefix.
        #[arg(long)]
        id: Option<String>,
        #[arg(long)]
        frame: Option<FrameClass>,
        /// List the claims without running them.
        #[arg(long)]
        list: bool,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Close every agent relation under the given properties.
    Close {
        #[command(flatten)]
        model: ModelArg,
        /// Comma-separated: reflexive, symmetric, transitive.
        #[arg(long)]
        props: Closure,
    },
}

#[derive(Debug, Args)]
pub struct ModelArg {
    /// Model file.
    #[arg(short, long = "model")]
    pub model: PathBuf,
}

#[derive(Debug, Args)]
pub struct FormulaArg {
    #[arg(short, long)]
    pub formula: String,
    /// Treat atoms missing from the model as errors instead of false.
    #[arg(long)]
    pub strict_atoms: bool,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("--model {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("--model {path}: {source}")]
    Model { path: String, source: FormatError },
    #[error("--formula: {0}")]
    Formula(#[from] SyntaxError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error("output: {0}")]
    Io(#[from] std::io::Error),
}

fn read_model(path: &Path) -> Result<KripkeModel, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: shown.clone(),
        source,
    })?;
    load_model(&text).map_err(|source| CliError::Model {
        path: shown,
        source,
    })
}

fn parse_formula(text: &str) -> Result<Formula, CliError> {
    Ok(parse(text)?)
}

fn opts(strict: bool) -> EvalOptions {
    EvalOptions {
        strict_atoms: strict,
    }
}

fn executor(jobs: Option<usize>) -> Result<Executor, CliError> {
    Ok(match jobs {
        Some(n) => Executor::with_jobs(n)?,
        None => Executor::default(),
    })
}

fn fmt_set(names: &[&str]) -> String {
    format!("{{{}}}", names.join(", "))
}

fn flag(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn execute(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Eval {
            model,
            world,
            formula,
        } => {
            let m = read_model(&model.model)?;
            let f = parse_formula(&formula.formula)?;
            let v = satisfies_with(&m, &world, &f, opts(formula.strict_atoms))?;
            writeln!(out, "{v}")?;
            Ok(if v { EXIT_TRUE } else { EXIT_FALSE })
        }
        Command::Valid {
            model,
            formula,
            show_extension,
        } => {
            let m = read_model(&model.model)?;
            let f = parse_formula(&formula.formula)?;
            let ext = extension_with(&m, &f, opts(formula.strict_atoms))?;
            let all = ext.len() == m.worlds().len();
            writeln!(out, "{all}")?;
            if show_extension {
                writeln!(out, "extension: {}", fmt_set(&m.world_names(ext)))?;
            }
            Ok(if all { EXIT_TRUE } else { EXIT_FALSE })
        }
        Command::Classify { model } => {
            let m = read_model(&model.model)?;
            let r = classify_frame(&m);
            writeln!(out, "agent  reflexive  transitive  symmetric  euclidean")?;
            for a in &r.agents {
                writeln!(
                    out,
                    "{:<6} {:<10} {:<11} {:<10} {}",
                    a.agent,
                    flag(a.reflexive),
                    flag(a.transitive),
                    flag(a.symmetric),
                    flag(a.euclidean)
                )?;
            }
            writeln!(out, "class: {}", r.class)?;
            Ok(EXIT_TRUE)
        }
        Command::Search {
            frame,
            agents,
            max_worlds,
            mod_iso,
            jobs,
            formula,
        } => {
            let f = parse_formula(&formula)?;
            let max_worlds = max_worlds.unwrap_or_else(|| SearchBounds::default_max_worlds(frame));
            let b = SearchBounds::new(frame, agents, max_worlds)
                .with_atoms(f.atoms())
                .with_mod_iso(mod_iso);
            b.admit(&f)?;
            if matches!(frame, FrameClass::Kt | FrameClass::S4) && max_worlds >= 4 {
                writeln!(
                    err,
                    "warning: {frame} search with {max_worlds} worlds may take a long time"
                )?;
            }
            match check_validity_with(&f, &b, &executor(jobs)?)? {
                SearchOutcome::NoCountermodelUpTo { models_checked, .. } => {
                    writeln!(out, "NO COUNTERMODEL up to bound ({models_checked} models)")?;
                    writeln!(out, "bound: {b}")?;
                    Ok(EXIT_TRUE)
                }
                SearchOutcome::Countermodel { model, witness } => {
                    write!(out, "{}", save_model(&model, Some(&witness)))?;
                    Ok(EXIT_FALSE)
                }
            }
        }
        Command::Corpus {
            id,
            frame,
            list,
            jobs,
        } => {
            let filter = ClaimFilter {
                id_prefix: id,
                frame,
            };
            if list {
                for c in registry().iter().filter(|c| filter.accepts(c)) {
                    writeln!(out, "{:<16} {:<18} {}", c.id, c.expected(), c.statement())?;
                }
                return Ok(EXIT_TRUE);
            }
            let reports = run_all_with(&filter, &executor(jobs)?);
            writeln!(
                out,
                "{:<16} {:<18} {:<6} {:>10} {:>9}  detail",
                "id", "expected", "result", "models", "ms"
            )?;
            for r in &reports {
                writeln!(
                    out,
                    "{:<16} {:<18} {:<6} {:>10} {:>9}  {}",
                    r.id,
                    r.expected.to_string(),
                    if r.matched { "PASS" } else { "FAIL" },
                    r.models_checked,
                    r.elapsed.as_millis(),
                    r.detail
                )?;
            }
            let passed = reports.iter().filter(|r| r.matched).count();
            writeln!(out, "{passed}/{} claims passed", reports.len())?;
            Ok(if passed == reports.len() {
                EXIT_TRUE
            } else {
                EXIT_FALSE
            })
        }
        Command::Close { model, props } => {
            let m = read_model(&model.model)?;
            write!(out, "{}", save_model(&apply_closure(&m, props), None))?;
            Ok(EXIT_TRUE)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_ERROR
            } else {
                EXIT_TRUE
            };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}
