//! Exhaustive enumeration of small models of a frame class and bounded
//! countermodel search.
//!
//! "No countermodel" always means: none among the enumerated models up to
//! the world bound. It is not a proof of validity.

mod exec;
mod schema;
mod space;

use std::fmt;

use thiserror::Error;

use crate::kripke::{FrameClass, KripkeModel, WorldSet};
use crate::semantics::{EvalError, EvalOptions, Evaluator, Scratch};
use crate::syntax::Formula;

pub use exec::{Executor, Scan, Step};
pub use schema::{
    check_schema, check_schema_with, Constraint, Instance, InstanceOutcome, Schema,
    FORMULA_PLACEHOLDERS, FORMULA_POOL, GROUP_PLACEHOLDERS,
};
pub use space::frame_relations;

use space::{RawModel, Space};

pub const MAX_SEARCH_WORLDS: usize = 5;
pub const MAX_SEARCH_AGENTS: usize = 4;
pub const MAX_SEARCH_ATOMS: usize = 3;

/// Agent names used by search, in pool order.
pub const AGENT_NAMES: [&str; MAX_SEARCH_AGENTS] = ["a", "b", "c", "d"];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("max worlds must be between 1 and {MAX_SEARCH_WORLDS}, got {0}")]
    WorldBound(usize),
    #[error("agent count must be between 1 and {MAX_SEARCH_AGENTS}, got {0}")]
    AgentBound(usize),
    #[error("at most {MAX_SEARCH_ATOMS} atoms are supported, got {0}")]
    AtomBound(usize),
    #[error("search needs frame class KT, S4 or S5")]
    Frame,
    #[error("agent '{agent}' is not in the search pool {{{pool}}}")]
    AgentOutsidePool { agent: String, pool: String },
    #[error("atom '{0}' is not among the bound atoms")]
    AtomOutsideBounds(String),
    #[error("model space with {worlds} worlds is too large to index")]
    SpaceTooLarge { worlds: usize },
    #[error("thread pool: {0}")]
    Jobs(String),
    #[error("schema: {0}")]
    Schema(String),
}

/// What to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchBounds {
    pub frame: FrameClass,
    pub n_agents: usize,
    pub atoms: Vec<String>,
    pub max_worlds: usize,
    /// Keep one representative per isomorphism class.
    pub mod_iso: bool,
}

impl SearchBounds {
    pub fn new(frame: FrameClass, n_agents: usize, max_worlds: usize) -> Self {
        SearchBounds {
            frame,
            n_agents,
            atoms: Vec::new(),
            max_worlds,
            mod_iso: false,
        }
    }

    pub fn with_atoms<I, S>(mut self, atoms: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.atoms = atoms.into_iter().map(Into::into).collect();
        self
    }

    pub fn with_mod_iso(mut self, on: bool) -> Self {
        self.mod_iso = on;
        self
    }

    /// Default world bound for a frame class.
    pub fn default_max_worlds(frame: FrameClass) -> usize {
        if frame == FrameClass::S5 {
            4
        } else {
            3
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.frame == FrameClass::None {
            return Err(SearchError::Frame);
        }
        if !(1..=MAX_SEARCH_WORLDS).contains(&self.max_worlds) {
            return Err(SearchError::WorldBound(self.max_worlds));
        }
        if !(1..=MAX_SEARCH_AGENTS).contains(&self.n_agents) {
            return Err(SearchError::AgentBound(self.n_agents));
        }
        if self.atoms.len() > MAX_SEARCH_ATOMS {
            return Err(SearchError::AtomBound(self.atoms.len()));
        }
        Ok(())
    }

    pub fn agent_names(&self) -> Vec<String> {
        AGENT_NAMES[..self.n_agents.min(MAX_SEARCH_AGENTS)]
            .iter()
            .map(|s| s.to_string())
            .collect()
    }

    /// Checks bounds and that the formula stays inside the agent pool and
    /// the bound atoms.
    pub fn admit(&self, f: &Formula) -> Result<(), SearchError> {
        self.validate()?;
        let pool = self.agent_names();
        if let Some(a) = f.agents().into_iter().find(|a| !pool.contains(a)) {
            return Err(SearchError::AgentOutsidePool {
                agent: a,
                pool: pool.join(","),
            });
        }
        if let Some(p) = f.atoms().into_iter().find(|p| !self.atoms.contains(p)) {
            return Err(SearchError::AtomOutsideBounds(p));
        }
        Ok(())
    }
}

impl fmt::Display for SearchBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} frames, {} agent(s), atoms {{{}}}, at most {} world(s){}",
            self.frame,
            self.n_agents,
            self.atoms.join(","),
            self.max_worlds,
            if self.mod_iso {
                ", up to isomorphism"
            } else {
                ""
            }
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    NoCountermodelUpTo {
        bounds: SearchBounds,
        models_checked: u64,
    },
    Countermodel {
        model: KripkeModel,
        witness: String,
    },
}

impl SearchOutcome {
    pub fn is_countermodel(&self) -> bool {
        matches!(self, SearchOutcome::Countermodel { .. })
    }

    pub fn countermodel(&self) -> Option<(&KripkeModel, &str)> {
        match self {
            SearchOutcome::Countermodel { model, witness } => Some((model, witness)),
            SearchOutcome::NoCountermodelUpTo { .. } => None,
        }
    }
}

fn world_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("w{i}")).collect()
}

fn to_model(raw: &RawModel, b: &SearchBounds) -> KripkeModel {
    KripkeModel::new(
        world_names(raw.n),
        b.agent_names(),
        b.atoms.clone(),
        raw.rels[..b.n_agents].to_vec(),
        raw.vals[..b.atoms.len()].to_vec(),
    )
    .expect("enumerated models are well formed")
}

/// Every model within the bounds, in enumeration order: world count
/// ascending, then by encoding.
pub fn enumerate_models(
    b: &SearchBounds,
) -> Result<impl Iterator<Item = KripkeModel>, SearchError> {
    b.validate()?;
    let spaces = (1..=b.max_worlds)
        .map(|n| Space::new(b.frame, n, b.n_agents, b.atoms.len()))
        .collect::<Result<Vec<_>, _>>()?;
    let b = b.clone();
    Ok(spaces.into_iter().flat_map(move |s| {
        let b = b.clone();
        let mut raw = RawModel::new(s.n);
        (0..s.total).filter_map(move |i| {
            s.decode(i, &mut raw);
            (!b.mod_iso || s.is_canonical(&raw)).then(|| to_model(&raw, &b))
        })
    }))
}

/// Number of models [`enumerate_models`] yields.
pub fn count_models(b: &SearchBounds) -> Result<u64, SearchError> {
    count_models_with(b, &Executor::default())
}

pub fn count_models_with(b: &SearchBounds, exec: &Executor) -> Result<u64, SearchError> {
    b.validate()?;
    let mut sum = 0;
    for n in 1..=b.max_worlds {
        let s = Space::new(b.frame, n, b.n_agents, b.atoms.len())?;
        if !b.mod_iso {
            sum += s.total;
            continue;
        }
        let scan = exec.scan(
            s.total,
            || RawModel::new(n),
            |raw, i| {
                s.decode(i, raw);
                if s.is_canonical(raw) {
                    Step::Pass
                } else {
                    Step::Skip
                }
            },
        );
        sum += scan.counted;
    }
    Ok(sum)
}

/// Premises and a conclusion evaluated model by model. A model refutes the
/// query when every premise holds at all its worlds and the conclusion fails
/// somewhere. With no premises this is plain validity.
struct Query {
    premises: Vec<Evaluator>,
    conclusion: Evaluator,
}

impl Query {
    fn compile(
        premises: &[Formula],
        conclusion: &Formula,
        b: &SearchBounds,
    ) -> Result<Self, SearchError> {
        for f in premises.iter().chain([conclusion]) {
            b.admit(f)?;
        }
        let agents = b.agent_names();
        let compile = |f: &Formula| {
            Evaluator::compile(f, &agents, &b.atoms, EvalOptions::default()).map_err(|e| match e {
                EvalError::UnknownAgent(a) => SearchError::AgentOutsidePool {
                    agent: a,
                    pool: agents.join(","),
                },
                EvalError::UndeclaredAtom(p) => SearchError::AtomOutsideBounds(p),
                EvalError::UnknownWorld(w) => SearchError::Schema(w),
            })
        };
        Ok(Query {
            premises: premises.iter().map(compile).collect::<Result<_, _>>()?,
            conclusion: compile(conclusion)?,
        })
    }

    /// Worlds falsifying the conclusion, or empty when the model does not
    /// refute the query.
    fn failures(&self, raw: &RawModel, scratch: &mut Scratch) -> WorldSet {
        let full = WorldSet::full(raw.n);
        for p in &self.premises {
            if p.extension_in(raw, scratch) != full {
                return WorldSet::EMPTY;
            }
        }
        self.conclusion.extension_in(raw, scratch).complement(raw.n)
    }
}

fn run_query(q: &Query, b: &SearchBounds, exec: &Executor) -> Result<SearchOutcome, SearchError> {
    let mut checked = 0;
    for n in 1..=b.max_worlds {
        let s = Space::new(b.frame, n, b.n_agents, b.atoms.len())?;
        let scan = exec.scan(
            s.total,
            || (RawModel::new(n), Scratch::default()),
            |(raw, scratch), i| {
                s.decode(i, raw);
                if b.mod_iso && !s.is_canonical(raw) {
                    return Step::Skip;
                }
                if q.failures(raw, scratch).is_empty() {
                    Step::Pass
                } else {
                    Step::Hit
                }
            },
        );
        if let Some(i) = scan.first_hit {
            let mut raw = RawModel::new(n);
            s.decode(i, &mut raw);
            let w = q
                .failures(&raw, &mut Scratch::default())
                .first()
                .expect("hit has a failing world");
            return Ok(SearchOutcome::Countermodel {
                model: to_model(&raw, b),
                witness: format!("w{w}"),
            });
        }
        checked += scan.counted;
    }
    Ok(SearchOutcome::NoCountermodelUpTo {
        bounds: b.clone(),
        models_checked: checked,
    })
}

/// First model (in enumeration order) with a world falsifying `f`.
pub fn check_validity(f: &Formula, b: &SearchBounds) -> Result<SearchOutcome, SearchError> {
    check_validity_with(f, b, &Executor::default())
}

pub fn check_validity_with(
    f: &Formula,
    b: &SearchBounds,
    exec: &Executor,
) -> Result<SearchOutcome, SearchError> {
    run_query(&Query::compile(&[], f, b)?, b, exec)
}

/// Model-level soundness of an inference rule: the first model in which
/// every premise is valid but the conclusion fails at some world.
pub fn check_rule(
    premises: &[Formula],
    conclusion: &Formula,
    b: &SearchBounds,
) -> Result<SearchOutcome, SearchError> {
    check_rule_with(premises, conclusion, b, &Executor::default())
}

pub fn check_rule_with(
    premises: &[Formula],
    conclusion: &Formula,
    b: &SearchBounds,
    exec: &Executor,
) -> Result<SearchOutcome, SearchError> {
    run_query(&Query::compile(premises, conclusion, b)?, b, exec)
}
