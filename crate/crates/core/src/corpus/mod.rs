//! Registry of checkable claims about the logic, with a runner.
//!
//! Validity claims are searched instance by instance and pass when no
//! countermodel exists up to the bound. Countermodel claims name a fixture
//! world that must refute the claim by direct evaluation, and a search must
//! also find a countermodel on its own.

mod fixtures;
mod registry;

use std::fmt;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::kripke::{classify_frame, FrameClass, KripkeModel};
use crate::search::{
    check_rule_with, Executor, Instance, Schema, SearchBounds, SearchError, SearchOutcome,
};
use crate::semantics::{satisfies, valid_in_model, EvalError};
use crate::syntax::{Formula, Group};

pub use fixtures::{fixture, fixture_text, fixtures, FIXTURE_NAMES};
pub use registry::registry;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("unknown claim '{0}'")]
    UnknownClaim(String),
    #[error("unknown fixture '{0}'")]
    UnknownFixture(String),
    #[error(transparent)]
    Search(#[from] SearchError),
    #[error(transparent)]
    Eval(#[from] EvalError),
}

/// What a claim asserts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    ValidUpToBound,
    Countermodel,
    /// A formula holds at the named fixture world (or at every world).
    Holds,
    /// A fixture's frame class.
    Class(FrameClass),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::ValidUpToBound => f.write_str("VALID_UP_TO_BOUND"),
            Verdict::Countermodel => f.write_str("COUNTERMODEL"),
            Verdict::Holds => f.write_str("HOLDS"),
            Verdict::Class(c) => write!(f, "CLASS_{c}"),
        }
    }
}

/// A fixture world that refutes a schema instance, plus formulas that must
/// hold in the same fixture to confirm the reading of the counterexample.
#[derive(Debug, Clone)]
pub struct Witness {
    pub fixture: &'static str,
    pub world: &'static str,
    pub groups: Vec<(&'static str, Group)>,
    pub formulas: Vec<(&'static str, Formula)>,
    pub also_holds: Vec<(&'static str, Formula)>,
}

#[derive(Debug, Clone)]
pub enum ClaimBody {
    Valid {
        schema: Schema,
        pool: Vec<String>,
        max_worlds: usize,
    },
    Countermodel {
        schema: Schema,
        pool: Vec<String>,
        max_worlds: usize,
        witness: Witness,
    },
    Holds {
        fixture: &'static str,
        /// `None` means every world.
        world: Option<&'static str>,
        formula: Formula,
    },
    Class {
        fixture: &'static str,
        class: FrameClass,
    },
}

#[derive(Debug, Clone)]
pub struct CorpusClaim {
    pub id: &'static str,
    pub description: &'static str,
    pub frame: FrameClass,
    pub body: ClaimBody,
}

impl CorpusClaim {
    pub fn expected(&self) -> Verdict {
        match &self.body {
            ClaimBody::Valid { .. } => Verdict::ValidUpToBound,
            ClaimBody::Countermodel { .. } => Verdict::Countermodel,
            ClaimBody::Holds { .. } => Verdict::Holds,
            ClaimBody::Class { class, .. } => Verdict::Class(*class),
        }
    }

    /// Human-readable statement, used by the claim table.
    pub fn statement(&self) -> String {
        let schema_text = |s: &Schema| {
            let mut out = String::new();
            if !s.premises.is_empty() {
                let p: Vec<String> = s.premises.iter().map(|f| f.to_string()).collect();
                out.push_str(&format!("from {} infer ", p.join(" and ")));
            }
            out.push_str(&s.conclusion.to_string());
            for c in &s.constraints {
                out.push_str(&format!("; {c}"));
            }
            out
        };
        match &self.body {
            ClaimBody::Valid { schema, .. } | ClaimBody::Countermodel { schema, .. } => {
                schema_text(schema)
            }
            ClaimBody::Holds {
                fixture,
                world: Some(w),
                formula,
            } => format!("{fixture}, {w} |= {formula}"),
            ClaimBody::Holds {
                fixture, formula, ..
            } => format!("{fixture} |= {formula}"),
            ClaimBody::Class { fixture, class } => format!("class({fixture}) = {class}"),
        }
    }

    /// Search settings as shown in the claim table.
    pub fn bound_text(&self) -> String {
        match &self.body {
            ClaimBody::Valid {
                pool, max_worlds, ..
            }
            | ClaimBody::Countermodel {
                pool, max_worlds, ..
            } => format!("pool {{{}}}, <= {max_worlds} worlds", pool.join(",")),
            ClaimBody::Holds { .. } | ClaimBody::Class { .. } => "-".into(),
        }
    }

    pub fn witness_text(&self) -> Option<String> {
        match &self.body {
            ClaimBody::Countermodel { witness, .. } => Some(format!(
                "{}@{} ({})",
                witness.fixture,
                witness.world,
                witness
                    .groups
                    .iter()
                    .map(|(k, g)| format!("{k}={g}"))
                    .chain(witness.formulas.iter().map(|(k, f)| format!("{k}={f}")))
                    .collect::<Vec<_>>()
                    .join(", ")
            )),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub id: String,
    pub expected: Verdict,
    /// The pass/fail bit.
    pub matched: bool,
    /// A countermodel from search, with its witness world.
    pub countermodel: Option<(KripkeModel, String)>,
    pub models_checked: u64,
    pub instances: usize,
    pub elapsed: Duration,
    pub detail: String,
}

impl ClaimReport {
    pub fn countermodel_worlds(&self) -> Option<usize> {
        self.countermodel.as_ref().map(|(m, _)| m.worlds().len())
    }
}

/// Selects claims for [`run_all`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ClaimFilter {
    pub id_prefix: Option<String>,
    pub frame: Option<FrameClass>,
}

impl ClaimFilter {
    pub fn accepts(&self, c: &CorpusClaim) -> bool {
        self.id_prefix
            .as_deref()
            .is_none_or(|p| c.id.starts_with(p))
            && self.frame.is_none_or(|f| c.frame == f)
    }
}

pub fn find_claim(id: &str) -> Result<CorpusClaim, CorpusError> {
    registry()
        .into_iter()
        .find(|c| c.id == id)
        .ok_or_else(|| CorpusError::UnknownClaim(id.to_string()))
}

fn load_fixture(name: &str) -> Result<KripkeModel, CorpusError> {
    fixture(name).ok_or_else(|| CorpusError::UnknownFixture(name.to_string()))
}

/// Evaluates a countermodel claim's designated witness without any search.
/// Returns the refuted instance on success and a description of the first
/// failed check otherwise.
pub fn verify_witness(
    schema: &Schema,
    w: &Witness,
) -> Result<Result<Instance, String>, CorpusError> {
    let m = load_fixture(w.fixture)?;
    let inst = schema.instantiate(&w.groups, &w.formulas)?;
    for p in &inst.premises {
        if !valid_in_model(&m, p)? {
            return Ok(Err(format!("premise {p} is not valid in {}", w.fixture)));
        }
    }
    if satisfies(&m, w.world, &inst.conclusion)? {
        return Ok(Err(format!(
            "{}@{} satisfies {}",
            w.fixture, w.world, inst.conclusion
        )));
    }
    for (world, f) in &w.also_holds {
        if !satisfies(&m, world, f)? {
            return Ok(Err(format!("{}@{world} does not satisfy {f}", w.fixture)));
        }
    }
    Ok(Ok(inst))
}

struct SweepResult {
    instances: usize,
    checked: u64,
    /// Smallest countermodel found and the instance it refutes.
    smallest: Option<(KripkeModel, String, Instance)>,
}

/// Searches every instance. With `shrink`, later instances only look for
/// countermodels smaller than the best so far, so the result is the
/// smallest countermodel over all instances.
fn sweep(
    schema: &Schema,
    pool: &[String],
    base: &SearchBounds,
    shrink: bool,
    exec: &Executor,
) -> Result<SweepResult, CorpusError> {
    let instances = schema.instances(pool)?;
    let mut res = SweepResult {
        instances: instances.len(),
        checked: 0,
        smallest: None,
    };
    let mut limit = base.max_worlds;
    for inst in instances {
        if limit == 0 {
            break;
        }
        let b = SearchBounds {
            max_worlds: limit,
            ..inst.bounds(base)?
        };
        match check_rule_with(&inst.premises, &inst.conclusion, &b, exec)? {
            SearchOutcome::NoCountermodelUpTo { models_checked, .. } => {
                res.checked += models_checked
            }
            SearchOutcome::Countermodel { model, witness } => {
                let n = model.worlds().len();
                res.smallest = Some((model, witness, inst));
                if !shrink {
                    break;
                }
                limit = n - 1;
            }
        }
    }
    Ok(res)
}

pub fn run_claim(id: &str) -> Result<ClaimReport, CorpusError> {
    run_claim_with(&find_claim(id)?, &Executor::default())
}

pub fn run_claim_with(claim: &CorpusClaim, exec: &Executor) -> Result<ClaimReport, CorpusError> {
    let start = Instant::now();
    let mut report = ClaimReport {
        id: claim.id.to_string(),
        expected: claim.expected(),
        matched: false,
        countermodel: None,
        models_checked: 0,
        instances: 0,
        elapsed: Duration::ZERO,
        detail: String::new(),
    };
    match &claim.body {
        ClaimBody::Valid {
            schema,
            pool,
            max_worlds,
        } => {
            let base = SearchBounds::new(claim.frame, pool.len(), *max_worlds).with_mod_iso(true);
            let res = sweep(schema, pool, &base, false, exec)?;
            report.instances = res.instances;
            report.models_checked = res.checked;
            match res.smallest {
                None => {
                    report.matched = true;
                    report.detail = format!(
                        "no countermodel in {} instance(s) up to {max_worlds} worlds",
                        res.instances
                    );
                }
                Some((m, w, inst)) => {
                    report.detail = format!("countermodel for {inst} at {w}");
                    report.countermodel = Some((m, w));
                }
            }
        }
        ClaimBody::Countermodel {
            schema,
            pool,
            max_worlds,
            witness,
        } => {
            let direct = verify_witness(schema, witness)?;
            let base = SearchBounds::new(claim.frame, pool.len(), *max_worlds).with_mod_iso(true);
            let res = sweep(schema, pool, &base, true, exec)?;
            report.instances = res.instances;
            report.models_checked = res.checked;
            let found = res
                .smallest
                .as_ref()
                .map(|(m, _, inst)| (m.worlds().len(), inst.to_string()));
            report.countermodel = res.smallest.map(|(m, w, _)| (m, w));
            report.matched = direct.is_ok() && found.is_some();
            let wtext = match &direct {
                Ok(_) => format!("witness {}@{} refutes it", witness.fixture, witness.world),
                Err(why) => format!("witness check failed: {why}"),
            };
            report.detail = match found {
                Some((n, inst)) => {
                    format!("{wtext}; smallest countermodel has {n} world(s) ({inst})")
                }
                None => format!("{wtext}; search found no countermodel up to {max_worlds} worlds"),
            };
        }
        ClaimBody::Holds {
            fixture,
            world,
            formula,
        } => {
            let m = load_fixture(fixture)?;
            let ok = match world {
                Some(w) => satisfies(&m, w, formula)?,
                None => valid_in_model(&m, formula)?,
            };
            report.matched = ok;
            report.detail = format!(
                "{fixture}{}{} {formula}",
                world.map(|w| format!("@{w}")).unwrap_or_default(),
                if ok { " |=" } else { " does not satisfy" }
            );
        }
        ClaimBody::Class { fixture, class } => {
            let got = classify_frame(&load_fixture(fixture)?).class;
            report.matched = got == *class;
            report.detail = format!("{fixture} classifies as {got}");
        }
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

pub fn run_all(filter: &ClaimFilter) -> Vec<ClaimReport> {
    run_all_with(filter, &Executor::default())
}

/// Runs every selected claim. Claims that raise an error are reported as
/// unmatched with the error as detail.
pub fn run_all_with(filter: &ClaimFilter, exec: &Executor) -> Vec<ClaimReport> {
    registry()
        .iter()
        .filter(|c| filter.accepts(c))
        .map(|c| {
            run_claim_with(c, exec).unwrap_or_else(|e| ClaimReport {
                id: c.id.to_string(),
                expected: c.expected(),
                matched: false,
                countermodel: None,
                models_checked: 0,
                instances: 0,
                elapsed: Duration::ZERO,
                detail: format!("error: {e}"),
            })
        })
        .collect()
}
