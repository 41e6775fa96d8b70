//! Finite multi-agent Kripke models and the relation algebra used by the
//! group modalities.

mod canon;
mod format;
mod relation;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::syntax::{Group, Supergroup, MAX_GROUP_AGENTS};

pub use canon::{canonicalize, encode, CanonicalForm};
pub use format::{load_model, load_model_with_witness, save_model, FormatError};
pub use relation::{Relation, WorldSet, MAX_WORLDS};

/// Largest number of agents a model may declare.
pub const MAX_AGENTS: usize = MAX_GROUP_AGENTS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("duplicate world '{0}'")]
    DuplicateWorld(String),
    #[error("duplicate agent '{0}'")]
    DuplicateAgent(String),
    #[error("duplicate atom '{0}'")]
    DuplicateAtom(String),
    #[error("unknown world '{0}'")]
    UnknownWorld(String),
    #[error("unknown agent '{0}'")]
    UnknownAgent(String),
    #[error("unknown atom '{0}'")]
    UnknownAtom(String),
    #[error("model has no worlds")]
    NoWorlds,
    #[error("{0} worlds exceed the limit of {MAX_WORLDS}")]
    TooManyWorlds(usize),
    #[error("{0} agents exceed the limit of {MAX_AGENTS}")]
    TooManyAgents(usize),
    #[error("expected {expected} {what}, got {found}")]
    Shape {
        what: &'static str,
        expected: usize,
        found: usize,
    },
}

/// Read access to the parts of a model that evaluation needs. Implemented by
/// [`KripkeModel`] and by the compact models produced during search.
pub trait Structure {
    fn world_count(&self) -> usize;
    fn agent_relation(&self, agent: usize) -> &Relation;
    fn atom_extension(&self, atom: usize) -> WorldSet;
}

/// Worlds, one accessibility relation per agent, and a valuation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KripkeModel {
    worlds: Vec<String>,
    agents: Vec<String>,
    atoms: Vec<String>,
    relations: Vec<Relation>,
    valuation: Vec<WorldSet>,
}

fn check_unique(names: &[String], err: fn(String) -> ModelError) -> Result<(), ModelError> {
    let mut seen = HashSet::new();
    for n in names {
        if !seen.insert(n) {
            return Err(err(n.clone()));
        }
    }
    Ok(())
}

impl KripkeModel {
    /// `relations[k]` belongs to `agents[k]`; `valuation[k]` is the set of
    /// worlds where `atoms[k]` holds.
    pub fn new(
        worlds: Vec<String>,
        agents: Vec<String>,
        atoms: Vec<String>,
        relations: Vec<Relation>,
        valuation: Vec<WorldSet>,
    ) -> Result<Self, ModelError> {
        if worlds.is_empty() {
            return Err(ModelError::NoWorlds);
        }
        if worlds.len() > MAX_WORLDS {
            return Err(ModelError::TooManyWorlds(worlds.len()));
        }
        if agents.len() > MAX_AGENTS {
            return Err(ModelError::TooManyAgents(agents.len()));
        }
        check_unique(&worlds, ModelError::DuplicateWorld)?;
        check_unique(&agents, ModelError::DuplicateAgent)?;
        check_unique(&atoms, ModelError::DuplicateAtom)?;
        if relations.len() != agents.len() {
            return Err(ModelError::Shape {
                what: "relations",
                expected: agents.len(),
                found: relations.len(),
            });
        }
        if let Some(r) = relations.iter().find(|r| r.size() != worlds.len()) {
            return Err(ModelError::Shape {
                what: "worlds in a relation",
                expected: worlds.len(),
                found: r.size(),
            });
        }
        if valuation.len() != atoms.len() {
            return Err(ModelError::Shape {
                what: "valuation entries",
                expected: atoms.len(),
                found: valuation.len(),
            });
        }
        let full = WorldSet::full(worlds.len());
        for v in &valuation {
            if let Some(i) = WorldSet::from_bits(v.bits() & !full.bits()).first() {
                return Err(ModelError::UnknownWorld(format!("#{i}")));
            }
        }
        Ok(KripkeModel {
            worlds,
            agents,
            atoms,
            relations,
            valuation,
        })
    }

    pub fn worlds(&self) -> &[String] {
        &self.worlds
    }

    pub fn agents(&self) -> &[String] {
        &self.agents
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn valuation(&self) -> &[WorldSet] {
        &self.valuation
    }

    pub fn world_index(&self, name: &str) -> Result<usize, ModelError> {
        self.worlds
            .iter()
            .position(|w| w == name)
            .ok_or_else(|| ModelError::UnknownWorld(name.to_string()))
    }

    pub fn agent_index(&self, name: &str) -> Result<usize, ModelError> {
        self.agents
            .iter()
            .position(|a| a == name)
            .ok_or_else(|| ModelError::UnknownAgent(name.to_string()))
    }

    pub fn atom_index(&self, name: &str) -> Option<usize> {
        self.atoms.iter().position(|a| a == name)
    }

    pub fn relation_of(&self, agent: &str) -> Result<&Relation, ModelError> {
        Ok(&self.relations[self.agent_index(agent)?])
    }

    /// Set of worlds where the named atom holds; empty for undeclared atoms.
    pub fn extension_of_atom(&self, atom: &str) -> WorldSet {
        self.atom_index(atom)
            .map_or(WorldSet::EMPTY, |i| self.valuation[i])
    }

    pub fn world_names(&self, set: WorldSet) -> Vec<&str> {
        set.iter().map(|i| self.worlds[i].as_str()).collect()
    }

    /// Bitmask of agent indices for a group.
    pub fn agent_mask(&self, group: &Group) -> Result<u8, ModelError> {
        group
            .agents()
            .iter()
            .try_fold(0u8, |m, a| Ok(m | 1 << self.agent_index(a)?))
    }

    /// Copy with every relation replaced.
    pub fn with_relations(&self, relations: Vec<Relation>) -> Result<Self, ModelError> {
        KripkeModel::new(
            self.worlds.clone(),
            self.agents.clone(),
            self.atoms.clone(),
            relations,
            self.valuation.clone(),
        )
    }

    /// Copy with worlds renamed and reordered: world `i` moves to `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> KripkeModel {
        let mut worlds = vec![String::new(); self.worlds.len()];
        for (i, w) in self.worlds.iter().enumerate() {
            worlds[perm[i]] = w.clone();
        }
        KripkeModel {
            worlds,
            agents: self.agents.clone(),
            atoms: self.atoms.clone(),
            relations: self.relations.iter().map(|r| r.permuted(perm)).collect(),
            valuation: self.valuation.iter().map(|v| v.permuted(perm)).collect(),
        }
    }
}

impl Structure for KripkeModel {
    fn world_count(&self) -> usize {
        self.worlds.len()
    }

    fn agent_relation(&self, agent: usize) -> &Relation {
        &self.relations[agent]
    }

    fn atom_extension(&self, atom: usize) -> WorldSet {
        self.valuation[atom]
    }
}

/// Intersection of the relations of the agents in `mask` (all worlds when
/// the mask is empty).
pub fn joint_of_mask<S: Structure + ?Sized>(s: &S, mask: u8) -> Relation {
    let mut r = Relation::total(s.world_count());
    for k in 0..8 {
        if mask >> k & 1 == 1 {
            r = r.intersection(s.agent_relation(k));
        }
    }
    r
}

/// Reflexive-transitive closure of the union of the relations in `mask`.
pub fn common_of_mask<S: Structure + ?Sized>(s: &S, mask: u8) -> Relation {
    let mut r = Relation::empty(s.world_count());
    for k in 0..8 {
        if mask >> k & 1 == 1 {
            r = r.union(s.agent_relation(k));
        }
    }
    r.reflexive_transitive_closure()
}

/// Reflexive-transitive closure of the union of the joint relations of each
/// group mask.
pub fn cdk_of_masks<S: Structure + ?Sized>(s: &S, masks: &[u8]) -> Relation {
    let mut r = Relation::empty(s.world_count());
    for &m in masks {
        r = r.union(&joint_of_mask(s, m));
    }
    r.reflexive_transitive_closure()
}

/// Joint possibility: the intersection of the members' relations.
pub fn joint_relation(m: &KripkeModel, g: &Group) -> Result<Relation, ModelError> {
    Ok(joint_of_mask(m, m.agent_mask(g)?))
}

/// Common-knowledge possibility: the reflexive-transitive closure of the
/// union of the members' relations.
pub fn common_relation(m: &KripkeModel, g: &Group) -> Result<Relation, ModelError> {
    Ok(common_of_mask(m, m.agent_mask(g)?))
}

/// Closure of the union of the joint relations of every group in `sg`.
pub fn cdk_relation(m: &KripkeModel, sg: &Supergroup) -> Result<Relation, ModelError> {
    let masks = sg
        .groups()
        .iter()
        .map(|g| m.agent_mask(g))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(cdk_of_masks(m, &masks))
}

/// Frame classes, ordered by strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FrameClass {
    None,
    Kt,
    S4,
    S5,
}

impl FrameClass {
    /// Strongest class a single relation belongs to.
    pub fn of_relation(r: &Relation) -> FrameClass {
        if !r.is_reflexive() {
            FrameClass::None
        } else if !r.is_transitive() {
            FrameClass::Kt
        } else if !r.is_symmetric() {
            FrameClass::S4
        } else {
            FrameClass::S5
        }
    }
}

impl fmt::Display for FrameClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FrameClass::None => "NONE",
            FrameClass::Kt => "KT",
            FrameClass::S4 => "S4",
            FrameClass::S5 => "S5",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown frame class '{0}' (expected kt, s4 or s5)")]
pub struct UnknownFrame(String);

impl FromStr for FrameClass {
    type Err = UnknownFrame;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "kt" => Ok(FrameClass::Kt),
            "s4" => Ok(FrameClass::S4),
            "s5" => Ok(FrameClass::S5),
            "none" => Ok(FrameClass::None),
            _ => Err(UnknownFrame(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AgentFrame {
    pub agent: String,
    pub reflexive: bool,
    pub transitive: bool,
    pub symmetric: bool,
    pub euclidean: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameReport {
    pub agents: Vec<AgentFrame>,
    /// Strongest class every agent's relation satisfies.
    pub class: FrameClass,
}

pub fn classify_frame(m: &KripkeModel) -> FrameReport {
    let agents: Vec<AgentFrame> = m
        .agents
        .iter()
        .zip(&m.relations)
        .map(|(a, r)| AgentFrame {
            agent: a.clone(),
            reflexive: r.is_reflexive(),
            transitive: r.is_transitive(),
            symmetric: r.is_symmetric(),
            euclidean: r.is_euclidean(),
        })
        .collect();
    let class = m
        .relations
        .iter()
        .map(FrameClass::of_relation)
        .min()
        .unwrap_or(FrameClass::S5);
    FrameReport { agents, class }
}

/// Which closure properties to impose on every agent relation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Closure {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
}

impl Closure {
    pub const EQUIVALENCE: Closure = Closure {
        reflexive: true,
        symmetric: true,
        transitive: true,
    };

    pub fn is_empty(&self) -> bool {
        !(self.reflexive || self.symmetric || self.transitive)
    }

    /// Least superset of `r` with the requested properties.
    pub fn apply(&self, r: &Relation) -> Relation {
        let mut cur = *r;
        loop {
            let mut next = cur;
            if self.reflexive {
                next = next.reflexive_closure();
            }
            if self.symmetric {
                next = next.symmetric_closure();
            }
            if self.transitive {
                next = next.transitive_closure();
            }
            if next == cur {
                return cur;
            }
            cur = next;
        }
    }

    /// Property names in canonical order.
    pub fn names(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if self.reflexive {
            out.push("reflexive");
        }
        if self.symmetric {
            out.push("symmetric");
        }
        if self.transitive {
            out.push("transitive");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown closure property '{0}' (expected reflexive, symmetric or transitive)")]
pub struct UnknownClosure(pub String);

impl FromStr for Closure {
    type Err = UnknownClosure;

    /// Accepts names separated by commas and/or whitespace.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut c = Closure::default();
        for word in s
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|w| !w.is_empty())
        {
            match word {
                "reflexive" => c.reflexive = true,
                "symmetric" => c.symmetric = true,
                "transitive" => c.transitive = true,
                _ => return Err(UnknownClosure(word.to_string())),
            }
        }
        Ok(c)
    }
}

/// Replaces every agent relation by its least closure under `props`.
pub fn apply_closure(m: &KripkeModel, props: Closure) -> KripkeModel {
    let mut out = m.clone();
    for r in &mut out.relations {
        *r = props.apply(r);
    }
    out
}
